#
# Copyright (C) 2026 The Undistill Authors
#
# This file is part of Undistill.
#
# Undistill is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Undistill is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Undistill.  If not, see <http://www.gnu.org/licenses/>.

"""Distillability reports for tripartite pure states, bipartite states and
channels.

A pure state on A (x) B (x) E has two reductions, rho_AB and rho_AE.  Both
are PPT exactly when no configuration of 1-way and 2-way links lets Alice
distil with Bob or with Eve, and then both reductions are separable.  If
either is NPT then every configuration with at least one 2-way link has a
positive rate.  That rule decides the classification; everything else in a
report is supporting evidence:

* ranks and PPT witnesses of both reductions
* the low-rank bounds and filter-then-hash rates
* 1-way certificates from the witness search
* a status of zero, positive or unknown for each rate
"""

from collections import OrderedDict
from collections import namedtuple

from undistill.linalg import kernels
from undistill.model import channel as channels
from undistill.model import state as states
from undistill.protocol import filtering
from undistill.protocol.witness import DEFAULT_BUDGET
from undistill.protocol.witness import WitnessSearch

ZERO = 'zero'
POSITIVE = 'positive'
UNKNOWN = 'unknown'

FULLY_UNDISTILLABLE_SEPARABLE = 'FULLY_UNDISTILLABLE_SEPARABLE'
SOME_REDUCTION_2WAY_DISTILLABLE = 'SOME_REDUCTION_2WAY_DISTILLABLE'

SEPARABLE = 'separable'
DISTILLABLE = 'entangled, 2-way distillable'
PPT_UNDECIDED = 'PPT but separability undecided by this tool'
NPT_UNDECIDED = 'NPT entangled, 2-way distillability undecided by this tool'

FOUND = 'found'
NOT_FOUND = 'not-found'
NOT_APPLICABLE = 'not-applicable'

RATE_TOL = 1e-9
COHERENT_INFORMATION_TOL = 1e-8

RATE_KEYS = ('AE_2way_AB_2way', 'AE_1way_AB_2way', 'AE_2way_AB_1way',
             'AE_1way_AB_1way')

RankRegime = namedtuple('RankRegime', (
    'ranks', 'complement_ranks', 'rank_pattern_holds', 'in_regime', 'ppt',
    'verdict'))

ReductionReport = namedtuple('ReductionReport', (
    'label', 'dims', 'ranks', 'ppt', 'theorem1_bound_A', 'theorem1_bound_B',
    'hashing_rate', 'filtered_rate_A', 'filtered_rate_B', 'witness_status',
    'witness_phi', 'witness_trials', 'conditional_rank_max',
    'rank_deficient_for_all_trials', 'one_way', 'two_way', 'regime'))

DistillabilityReport = namedtuple('DistillabilityReport', (
    'classification', 'dims', 'ranks', 'ppt_AB', 'ppt_AE', 'npt_sides',
    'theorem1_bound_B', 'theorem1_bound_A', 'hashing_rate', 'witness_phi',
    'rates', 'reductions', 'notes'))

ChannelReport = namedtuple('ChannelReport', (
    'name', 'd_in', 'd_out', 'choi_rank', 'complement_env_dim',
    'complement_choi_rank', 'complement_output_rank', 'theorem1_bound',
    'complement_theorem1_bound', 'capacity', 'complement_capacity',
    'distillability', 'notes'))

NOTE_NPT_REDUCTION = "Some reduction is NPT, so every configuration with a "\
                 "2-way link has a positive rate (full undistillability "\
                 "is equivalent to both reductions being PPT)."
NOTE_EITHER = "rho_{npt} is NPT and rho_{ppt} is PPT, so rho_{npt} is 1-way "\
              "and 2-way distillable (an NPT state with a PPT complement "\
              "has positive 1-way rate)."
NOTE_FOR_ALL = "rho_{label}: no trial vector reached conditional rank "\
               "{target}; if this holds for every vector the state is 2-way "\
               "distillable by the conditional-rank criterion.  Heuristic: "\
               "{trials} trials cannot cover every vector."
NOTE_NOT_FOUND = "rho_{label}: no 1-way certificate found in {trials} "\
                 "trials.  This does not show 1-way undistillability."
NOTE_COHERENT = "Both reductions are PPT; I_c(rho_AB) = {value:.3e} "\
                "(expected 0)."
NOTE_EXAMPLE1 = "Assumed, not verified: the complementary channel is "\
                "antidegradable, so Q_1way(Phi^c) = 0 and "\
                "D_1way(J_AE(Phi^c)) = 0."


def combine(first, second):
    """Status of a maximum of two rates.
    """
    if POSITIVE in (first, second):
        return POSITIVE
    if first == ZERO and second == ZERO:
        return ZERO
    return UNKNOWN


def theorem4_decision(rho, rank_tol=kernels.RANK_TOL,
                      ppt_tol=states.PPT_TOL):
    """Rank regime of a bipartite state.

    ``rank_pattern_holds`` checks
    ``rank rho_AB = rank rho_E <= rank rho_AE = rank rho_B`` on the
    canonical complement.  When ``rank rho_AB <= max(rank rho_A,
    rank rho_B)`` the state is in the regime where PPT, separable and
    2-way undistillable coincide, so the PPT test decides separability.
    """
    ranks = states.rank_profile(rho, rank_tol)
    complementary = states.complement(rho, rank_tol)
    r_AE = kernels.numerical_rank(complementary.matrix, rank_tol)
    r_E = kernels.numerical_rank(
            states.partial_trace(complementary, [1]).matrix, rank_tol)
    pattern = ranks.r == r_E and r_E <= r_AE and r_AE == ranks.r_B
    in_regime = ranks.r <= max(ranks.r_A, ranks.r_B)
    ppt = states.is_ppt(rho, ppt_tol)
    if in_regime:
        verdict = SEPARABLE if ppt.ppt else DISTILLABLE
    else:
        verdict = PPT_UNDECIDED if ppt.ppt else NPT_UNDECIDED
    return RankRegime(ranks, (r_AE, r_E), pattern, in_regime, ppt, verdict)


class Classifier(object):
    """Callable object that builds a DistillabilityReport for a tripartite
    pure state.

    :param rank_tol: relative cutoff for every rank
    :param ppt_tol: partial transpose eigenvalues down to ``-ppt_tol`` count
        as nonnegative
    :param witness_budget: random trials after the basis vectors
    :param seed: seed of the witness trial sequence
    :param log: an instance of 'logger'
    """

    LOG_TYPE = 'info'

    def __init__(self, rank_tol=kernels.RANK_TOL, ppt_tol=states.PPT_TOL,
                 witness_budget=DEFAULT_BUDGET, seed=0, log=None,
                 log_type=None):
        self._rank_tol = rank_tol
        self._ppt_tol = ppt_tol
        self._search = WitnessSearch(witness_budget, seed, rank_tol, log)
        self._log = log
        self._log_type = log_type or self.LOG_TYPE

    @classmethod
    def load(cls, config, log=None):
        """Build from anything with ``rank_tol``, ``ppt_tol``,
        ``witness_budget`` and ``seed`` attributes, such as a RunConfig.
        """
        return cls(config.rank_tol, config.ppt_tol, config.witness_budget,
                   config.seed, log)

    def __call__(self, psi):
        notes = []
        rho_AB = psi.reduced_state([states.A, states.B])
        rho_AE = psi.reduced_state([states.A, states.E])
        ab = self.reduction(rho_AB, 'AB', notes)
        ae = self.reduction(rho_AE, 'AE', notes)
        ab, ae = self._either_is_distillable(ab, ae, notes)

        fully = ab.ppt.ppt and ae.ppt.ppt
        rates = OrderedDict()
        rates['AE_2way_AB_2way'] = combine(ae.two_way, ab.two_way)
        rates['AE_1way_AB_2way'] = combine(ae.one_way, ab.two_way)
        rates['AE_2way_AB_1way'] = combine(ae.two_way, ab.one_way)
        rates['AE_1way_AB_1way'] = combine(ae.one_way, ab.one_way)
        if fully:
            classification = FULLY_UNDISTILLABLE_SEPARABLE
            for key in RATE_KEYS:
                rates[key] = ZERO
            self._check_coherent_information(ab, notes)
        else:
            classification = SOME_REDUCTION_2WAY_DISTILLABLE
            for key in RATE_KEYS[:3]:
                rates[key] = POSITIVE
            notes.append(NOTE_NPT_REDUCTION)

        r_E = kernels.numerical_rank(psi.reduced_state([states.E]).matrix,
                                     self._rank_tol)
        ranks = states.RankProfile(ab.ranks.r, ab.ranks.r_A, ab.ranks.r_B,
                                   r_E)
        npt_sides = [report.label for report in (ab, ae)
                     if not report.ppt.ppt]
        self._log_this("Classified state with dims {0}: {1}".format(
                list(psi.dims), classification))
        return DistillabilityReport(
                classification, list(psi.dims), ranks, ab.ppt, ae.ppt,
                npt_sides, ab.theorem1_bound_B, ab.theorem1_bound_A,
                ab.hashing_rate, ab.witness_phi, rates,
                OrderedDict([('AB', ab), ('AE', ae)]), notes)

    def reduction(self, rho, label, notes):
        """Evidence and statuses for one bipartite reduction.
        """
        regime = theorem4_decision(rho, self._rank_tol, self._ppt_tol)
        ranks = regime.ranks
        ppt = regime.ppt
        bound_A = filtering.optional_theorem1_bound(rho, 'A', self._rank_tol)
        bound_B = filtering.optional_theorem1_bound(rho, 'B', self._rank_tol)
        hashing = states.coherent_information(rho, rank_tol=self._rank_tol)
        rate_A = filtering.filtered_hashing_rate(rho, 'A', self._rank_tol)
        rate_B = filtering.filtered_hashing_rate(rho, 'B', self._rank_tol)

        phi = None
        if ranks.r < ranks.r_B:
            result = self._search(rho)
            status = FOUND if result.phi is not None else NOT_FOUND
            phi = result.phi
        elif ppt.ppt:
            result = None
            status = NOT_APPLICABLE
        else:
            result = self._search.scan(rho)
            status = NOT_APPLICABLE
        deficient = (result is not None
                     and result.max_rank < result.target_rank)

        if ppt.ppt:
            one_way = two_way = ZERO
            if phi is not None or hashing > RATE_TOL:
                self._log_this("rho_{0} is PPT within {1:.1e} but shows a "
                               "positive 1-way rate; the PPT verdict is "
                               "kept".format(label, self._ppt_tol),
                               'warning')
        else:
            one_way = POSITIVE if (phi is not None
                                   or hashing > RATE_TOL) else UNKNOWN
            positive_2way = (one_way == POSITIVE or regime.in_regime
                             or bound_A is not None or bound_B is not None
                             or max(rate_A, rate_B) > RATE_TOL)
            two_way = POSITIVE if positive_2way else UNKNOWN
            if status == NOT_FOUND:
                notes.append(NOTE_NOT_FOUND.format(label=label,
                                                   trials=result.trials))
            if deficient:
                notes.append(NOTE_FOR_ALL.format(
                        label=label, target=result.target_rank,
                        trials=result.trials))

        return ReductionReport(
                label, list(rho.dims), ranks, ppt, bound_A, bound_B, hashing,
                rate_A, rate_B, status, phi,
                result.trials if result is not None else 0,
                result.max_rank if result is not None else None,
                bool(deficient), one_way, two_way, regime)

    def _either_is_distillable(self, ab, ae, notes):
        if not ab.ppt.ppt and ae.ppt.ppt:
            ab = self._upgrade(ab, ae, notes)
        if not ae.ppt.ppt and ab.ppt.ppt:
            ae = self._upgrade(ae, ab, notes)
        return ab, ae

    def _upgrade(self, npt, ppt, notes):
        if npt.one_way == POSITIVE and npt.two_way == POSITIVE:
            return npt
        notes.append(NOTE_EITHER.format(npt=npt.label, ppt=ppt.label))
        return npt._replace(one_way=POSITIVE, two_way=POSITIVE)

    def _check_coherent_information(self, ab, notes):
        notes.append(NOTE_COHERENT.format(value=ab.hashing_rate))
        if abs(ab.hashing_rate) > COHERENT_INFORMATION_TOL:
            self._log_this("Both reductions are PPT but I_c(rho_AB) = "
                           "{0:.3e}; check the tolerances".format(
                                   ab.hashing_rate), 'warning')

    def _log_this(self, msg, log_type=None):
        if self._log:
            getattr(self._log, log_type or self._log_type)(msg)


def classify(psi, rank_tol=kernels.RANK_TOL, ppt_tol=states.PPT_TOL,
             witness_budget=DEFAULT_BUDGET, seed=0, log=None):
    return Classifier(rank_tol, ppt_tol, witness_budget, seed, log)(psi)


def classify_bipartite(rho, rank_tol=kernels.RANK_TOL, **kwargs):
    """Classify the canonical purification of ``rho``.
    """
    return classify(states.purify(rho, rank_tol), rank_tol, **kwargs)


def analyze_channel(channel, classifier=None, rank_tol=kernels.RANK_TOL):
    """Ranks, low-rank bounds and capacity bounds of a channel and its
    complement, plus the report of the Choi state's purification.
    """
    classifier = classifier or Classifier(rank_tol)
    notes = []
    choi = channel.choi
    complementary = channels.complement_channel(channel, rank_tol)
    comp_choi = complementary.choi
    choi_rank = kernels.numerical_rank(choi.matrix, rank_tol)
    comp_rank = kernels.numerical_rank(comp_choi.matrix, rank_tol)
    comp_out_rank = kernels.numerical_rank(
            states.partial_trace(comp_choi, [1]).matrix, rank_tol)
    bound = filtering.optional_theorem1_bound(choi, 'B', rank_tol)
    comp_bound = filtering.optional_theorem1_bound(comp_choi, 'B', rank_tol)
    capacity = comp_capacity = None
    if bound is not None:
        capacity = channels.capacity_bounds_from_distillation(channel.d_in,
                                                              bound)
    if comp_bound is not None:
        comp_capacity = channels.capacity_bounds_from_distillation(
                channel.d_in, comp_bound)
    if channel.name == 'example1':
        notes.append(NOTE_EXAMPLE1)
    report = classifier(states.purify(choi, rank_tol))
    return ChannelReport(channel.name, channel.d_in, channel.d_out,
                         choi_rank, complementary.d_out, comp_rank,
                         comp_out_rank, bound, comp_bound, capacity,
                         comp_capacity, report, notes)