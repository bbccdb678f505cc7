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

"""Monte Carlo check that Haar-random low-rank states are 1-way distillable.

For ``d_E < d_B`` every sample should show, up to the rank tolerance:

* ``rank rho_AB = min(d_E, d_A d_B)``
* ``rank rho_B = min(d_B, d_A d_E)``
* full Schmidt rank ``d_E`` for each A-column of the tripartite vector
* a witness vector found by the seeded search

Sample ``i`` draws its state and its witness trials from two children of
the ``i``-th child of ``SeedSequence(seed)``, so results do not depend on
how many workers run the samples.
"""

from collections import OrderedDict
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.protocol.witness import DEFAULT_BUDGET
from undistill.protocol.witness import WitnessSearch
from undistill.sampling import haar
from undistill.validate.base import _BaseCheck
from undistill.validate.errors import BadSpec

CHECKS = ('rank_rho_AB', 'rank_rho_B', 'schmidt_rank', 'witness_found')

EnsembleSpec = namedtuple('EnsembleSpec', (
    'd_A', 'd_B', 'd_E', 'n_samples', 'seed', 'rank_tol'))
EnsembleSpec.__new__.__defaults__ = (0, kernels.RANK_TOL)

SampleRecord = namedtuple('SampleRecord', (
    'index', 'r', 'r_B', 'schmidt_ranks', 'rank_rho_AB', 'rank_rho_B',
    'schmidt_rank', 'witness_found', 'trials', 'smallest_retained',
    'largest_discarded'))

EnsembleReport = namedtuple('EnsembleReport', (
    'spec', 'witness_budget', 'generator', 'generator_version', 'counts',
    'frequencies', 'samples'))


class IsValidEnsembleSpec(_BaseCheck):

    MSG = "Invalid ensemble: {reason}"
    RAISE = BadSpec

    def __call__(self, spec):
        for name in ('d_A', 'd_B', 'd_E', 'n_samples'):
            value = getattr(spec, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                return self._process_error(
                        reason="{0} must be an integer of 1 or more, got "
                               "{1!r}".format(name, value))
        if spec.d_E >= spec.d_B:
            return self._process_error(
                    reason="the experiment needs d_E < d_B, got d_E={0} and "
                           "d_B={1}".format(spec.d_E, spec.d_B))
        if not spec.rank_tol > 0:
            return self._process_error(
                    reason="rank_tol must be positive, got {0!r}".format(
                            spec.rank_tol))
        return True


class Theorem3Experiment(object):
    """Callable object that runs the four per-sample checks over an
    ensemble.

    :param witness_budget: random trials per witness search
    :param workers: threads evaluating samples; records are always
        returned in sample order
    :param log: an instance of 'logger'
    """

    LOG_TYPE = 'info'
    MSG = "Ensemble d=({d_A}, {d_B}, {d_E}), n={n}, seed={seed}: "\
          "frequencies {frequencies}"

    def __init__(self, witness_budget=DEFAULT_BUDGET, workers=1, log=None,
                 log_type=None):
        self._witness_budget = witness_budget
        self._workers = max(1, int(workers))
        self._log = log
        self._log_type = log_type or self.LOG_TYPE
        self._is_valid_spec = IsValidEnsembleSpec(log)

    def __call__(self, spec):
        self._is_valid_spec(spec)
        children = haar.spawn_seeds(spec.seed, spec.n_samples)
        jobs = [(index, spec, child) for index, child in enumerate(children)]
        if self._workers > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                samples = list(executor.map(self._run_job, jobs))
        else:
            samples = [self._run_job(job) for job in jobs]

        counts = OrderedDict(
                (check, sum(1 for s in samples if getattr(s, check)))
                for check in CHECKS)
        frequencies = OrderedDict(
                (check, counts[check] / float(spec.n_samples))
                for check in CHECKS)
        if self._log:
            getattr(self._log, self._log_type)(self.MSG.format(
                    d_A=spec.d_A, d_B=spec.d_B, d_E=spec.d_E,
                    n=spec.n_samples, seed=spec.seed,
                    frequencies=dict(frequencies)))
        return EnsembleReport(spec, self._witness_budget, haar.GENERATOR,
                              haar.GENERATOR_VERSION, counts, frequencies,
                              samples)

    def _run_job(self, job):
        index, spec, child = job
        state_seed, witness_seed = child.spawn(2)
        return self.sample(index, spec, state_seed, witness_seed)

    def sample(self, index, spec, state_seed, witness_seed):
        d_A, d_B, d_E = int(spec.d_A), int(spec.d_B), int(spec.d_E)
        psi = haar.sample_pure(d_A, d_B, d_E, state_seed)
        rho = psi.reduced_state([states.A, states.B])
        profile = states.rank_profile(rho, spec.rank_tol)

        schmidt_ranks = []
        for column in psi.tensor():
            column = column.reshape(-1)
            column = column / np.linalg.norm(column)
            schmidt_ranks.append(states.schmidt_rank(column, [d_B, d_E],
                                                     spec.rank_tol))

        search = WitnessSearch(self._witness_budget, witness_seed,
                               spec.rank_tol)
        trials = 0
        found = False
        if profile.r < profile.r_B:
            result = search(rho)
            trials = result.trials
            found = result.phi is not None
        retained, discarded = kernels.cutoff_audit(rho.matrix, spec.rank_tol)
        return SampleRecord(
                index, profile.r, profile.r_B, schmidt_ranks,
                profile.r == min(d_E, d_A * d_B),
                profile.r_B == min(d_B, d_A * d_E),
                all(k == d_E for k in schmidt_ranks), found, trials,
                retained, discarded)


def run_theorem3_experiment(spec, witness_budget=DEFAULT_BUDGET, workers=1,
                            log=None):
    return Theorem3Experiment(witness_budget, workers, log)(spec)


def csv_rows(report):
    """Header and one row per sample, for ``csv.writer``.
    """
    yield SampleRecord._fields
    for record in report.samples:
        row = list(record)
        row[3] = ' '.join(str(k) for k in record.schmidt_ranks)
        yield row
