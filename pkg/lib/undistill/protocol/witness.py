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

"""Search for a vector phi on A whose conditional marginal
``Tr_A[(|phi><phi| (x) 1) rho]`` reaches rank ``min(r, r_B)``.  For a
low-rank state (``r < r_B``) such a vector certifies that ``rho`` is 1-way
distillable.

Trials are deterministic: the computational basis of A first, then
``budget`` Haar-random vectors from the seeded generator.  A vector is
never returned unless its rank was checked, and the first success wins.
"""

from collections import namedtuple

import numpy as np

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.sampling.haar import haar_vector
from undistill.sampling.haar import make_rng
from undistill.validate.errors import PreconditionRankNotLow
from undistill.validate.matrix import IsBipartite

DEFAULT_BUDGET = 50

WitnessResult = namedtuple('WitnessResult', (
    'phi', 'trials', 'target_rank', 'max_rank'))


def conditional_rank(rho, phi, rank_tol=kernels.RANK_TOL):
    """Rank of the conditional marginal of ``phi``.  An absolute floor of
    ``rank_tol`` keeps rounding noise from giving a nearly zero marginal
    a spurious rank.
    """
    return kernels.numerical_rank(states.conditional_marginal(rho, phi),
                                  rank_tol, floor=rank_tol)


def trial_vectors(d_A, budget, seed):
    """Yield the basis vectors of ``C^d_A`` followed by ``budget`` seeded
    Haar-random vectors.
    """
    for i in range(d_A):
        phi = np.zeros(d_A, dtype=complex)
        phi[i] = 1.0
        yield phi
    rng = make_rng(seed)
    for _ in range(budget):
        yield haar_vector(d_A, rng)


class WitnessSearch(object):
    """Callable object running the trial sequence against one state.

    To use this class::

        search = WitnessSearch(budget=50, seed=0)
        result = search(rho)
        if result.phi is not None:
            # rho is 1-way distillable
    """

    LOG_TYPE = 'debug'
    FOUND = "Witness found after {trials} trials (rank {rank})"
    NOT_FOUND = "No witness in {trials} trials: largest conditional rank "\
                "{max_rank}, target {target}"

    def __init__(self, budget=DEFAULT_BUDGET, seed=0,
                 rank_tol=kernels.RANK_TOL, log=None, log_type=None):
        self._budget = budget
        self._seed = seed
        self._rank_tol = rank_tol
        self._log = log
        self._log_type = log_type or self.LOG_TYPE
        self._is_bipartite = IsBipartite(log)

    def __call__(self, rho):
        """Stop at the first trial whose conditional rank equals
        ``rank(rho)``.

        :raises PreconditionRankNotLow: unless ``rank(rho) < rank(rho_B)``
        """
        self._is_bipartite(rho.dims)
        profile = states.rank_profile(rho, self._rank_tol)
        if profile.r >= profile.r_B:
            raise PreconditionRankNotLow(
                    "The witness search needs rank(rho) < rank(rho_B), got "
                    "rank(rho)={0} and rank(rho_B)={1}".format(profile.r,
                                                               profile.r_B))
        return self._run(rho, profile.r, stop=True)

    def scan(self, rho):
        """Run every trial and report the largest conditional rank against
        the target ``min(r, r_B)``.  No rank precondition.
        """
        self._is_bipartite(rho.dims)
        profile = states.rank_profile(rho, self._rank_tol)
        return self._run(rho, min(profile.r, profile.r_B), stop=False)

    def _run(self, rho, target, stop):
        max_rank = 0
        trials = 0
        found = None
        for phi in trial_vectors(rho.dims[0], self._budget, self._seed):
            trials += 1
            rank = conditional_rank(rho, phi, self._rank_tol)
            max_rank = max(max_rank, rank)
            if rank == target and found is None:
                found = phi
                if stop:
                    break
        self._log_result(found, trials, max_rank, target)
        return WitnessResult(found, trials, target, max_rank)

    def _log_result(self, found, trials, max_rank, target):
        if not self._log:
            return
        log_this = getattr(self._log, self._log_type)
        if found is not None:
            log_this(self.FOUND.format(trials=trials, rank=target))
        else:
            log_this(self.NOT_FOUND.format(trials=trials, max_rank=max_rank,
                                           target=target))


def theorem2_witness_search(rho, budget=DEFAULT_BUDGET, seed=0,
                            rank_tol=kernels.RANK_TOL, log=None):
    """Return a witness vector phi, or None when none was found.  None is
    not a proof of 1-way undistillability.
    """
    return WitnessSearch(budget, seed, rank_tol, log)(rho).phi


def conditional_rank_scan(rho, budget=DEFAULT_BUDGET, seed=0,
                          rank_tol=kernels.RANK_TOL, log=None):
    return WitnessSearch(budget, seed, rank_tol, log).scan(rho)
