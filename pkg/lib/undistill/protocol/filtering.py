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

"""Local filtering and the low-rank distillation bound.

One party applies the measurement ``{Y, sqrt(1 - Y^dagger Y)}`` with
``Y = sqrt(l_min) * marginal^(-1/2)``.  On success the filtered state has a
flat marginal ``Pi / r_side`` on that side, and hashing the filtered copies
achieves

    p_succ * [S(rho'_side) - S(rho')] >= l_min * r_side * log2(r_side / r)

whenever ``r = rank(rho) < r_side``.
"""

from collections import namedtuple

import numpy as np

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.model.state import DensityMatrix
from undistill.validate.errors import PreconditionRankNotLow
from undistill.validate.matrix import IsBipartite
from undistill.validate.matrix import IsValidSide

SIDES = {'A': states.A, 'B': states.B}

FilterOutcome = namedtuple('FilterOutcome', (
    'side', 'filter_operator', 'p_succ', 'filtered_state',
    'support_projector', 'r', 'r_side', 'lambda_min'))


def side_index(side):
    side = str(side).upper()
    IsValidSide()(side)
    return side, SIDES[side]


class LocalFilter(object):
    """Callable object that filters a bipartite state on one side.

    :param rank_tol: relative cutoff used for every rank and for the
        minimum positive eigenvalue
    :param log: an instance of 'logger'
    """

    LOG_TYPE = 'debug'
    MSG = "Filtered on side {side}: p_succ={p_succ:.6g}, r={r}, "\
          "r_side={r_side}, lambda_min={lambda_min:.6g}"

    def __init__(self, rank_tol=kernels.RANK_TOL, log=None, log_type=None):
        self._rank_tol = rank_tol
        self._log = log
        self._log_type = log_type or self.LOG_TYPE
        self._is_bipartite = IsBipartite(log)

    def __call__(self, rho, side='B'):
        self._is_bipartite(rho.dims)
        side, index = side_index(side)
        marginal = states.partial_trace(rho, [index]).matrix
        lambda_min = kernels.min_positive_eigenvalue(marginal, self._rank_tol)
        filter_operator = np.sqrt(lambda_min) * kernels.pinv_sqrt(
                marginal, self._rank_tol)
        projector = kernels.support_projector(marginal, self._rank_tol)
        full = self._embed(filter_operator, rho.dims, index)
        unnormalized = full @ rho.matrix @ full.conj().T
        p_succ = float(np.trace(unnormalized).real)
        filtered = DensityMatrix.approximate(unnormalized, rho.dims)
        r = kernels.numerical_rank(rho.matrix, self._rank_tol)
        r_side = kernels.numerical_rank(
                states.partial_trace(filtered, [index]).matrix, self._rank_tol)
        outcome = FilterOutcome(side, filter_operator, p_succ, filtered,
                                projector, r, r_side, lambda_min)
        if self._log:
            getattr(self._log, self._log_type)(self.MSG.format(
                    side=side, p_succ=p_succ, r=r, r_side=r_side,
                    lambda_min=lambda_min))
        return outcome

    def _embed(self, operator, dims, index):
        if index == states.A:
            return np.kron(operator, np.eye(dims[1]))
        return np.kron(np.eye(dims[0]), operator)


def apply_filter(rho, side='B', rank_tol=kernels.RANK_TOL, log=None):
    """Filter ``rho`` on ``side`` ('A' or 'B') and return a FilterOutcome.
    """
    return LocalFilter(rank_tol, log)(rho, side)


def theorem1_bound(rho, side='B', rank_tol=kernels.RANK_TOL):
    """Lower bound ``l_min * r_side * (log2 r_side - log2 r)`` on the 2-way
    distillable entanglement, in ebits per copy.

    :raises PreconditionRankNotLow: when ``rank(rho)`` is not strictly below
        the rank of the marginal on ``side``
    """
    IsBipartite()(rho.dims)
    side, index = side_index(side)
    marginal = states.partial_trace(rho, [index]).matrix
    r = kernels.numerical_rank(rho.matrix, rank_tol)
    r_side = kernels.numerical_rank(marginal, rank_tol)
    if r >= r_side:
        raise PreconditionRankNotLow(
                "The bound needs rank(rho) < rank(rho_{0}), got rank(rho)={1} "
                "and rank(rho_{0})={2}".format(side, r, r_side))
    lambda_min = kernels.min_positive_eigenvalue(marginal, rank_tol)
    return lambda_min * r_side * (np.log2(r_side) - np.log2(r))


def optional_theorem1_bound(rho, side='B', rank_tol=kernels.RANK_TOL):
    """``theorem1_bound`` or None when its rank condition fails.
    """
    try:
        return theorem1_bound(rho, side, rank_tol)
    except PreconditionRankNotLow:
        return None


def filtered_hashing_rate(rho, side='B', rank_tol=kernels.RANK_TOL,
                          outcome=None):
    """Rate of filtering on ``side`` and then hashing: ``p_succ`` times the
    coherent information of the filtered state toward the filtering party,
    whose marginal the filter has flattened.
    """
    if outcome is None:
        outcome = apply_filter(rho, side, rank_tol)
    _, index = side_index(outcome.side)
    return outcome.p_succ * states.coherent_information(
            outcome.filtered_state, toward=index, rank_tol=rank_tol)
