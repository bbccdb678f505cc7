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

"""Quantum channels held by their Choi state

    J = (id (x) Phi)(Omega+),   |Omega+> = sum_i |ii> / sqrt(d_in)

with the input factor first.  The action on an operator is recovered as
``Phi(X) = d_in * Tr_in[(X^T (x) 1) J]``.
"""

from collections import namedtuple

import numpy as np

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.model.state import DensityMatrix
from undistill.validate.base import _BaseCheck
from undistill.validate.errors import BadParameter
from undistill.validate.errors import DimensionMismatch
from undistill.validate.errors import NotTracePreserving

CHOI_TOL = 1e-9
FROM_CHOI_TOL = 1e-6

CapacityBounds = namedtuple('CapacityBounds', ('lower', 'upper'))


class IsTracePreserving(_BaseCheck):

    MSG = "The Choi matrix does not describe a trace preserving map: "\
          "max |Tr_out J - 1/{d_in}| is {deviation:.3e}, the tolerance is "\
          "{tol:.1e}"
    RAISE = NotTracePreserving

    def __call__(self, choi, d_in, tol):
        marginal = states.partial_trace(choi, [0]).matrix
        deviation = float(np.max(np.abs(marginal - np.eye(d_in) / d_in)))
        if deviation <= tol:
            return True
        return self._process_error(d_in=d_in, deviation=deviation, tol=tol)


class IsChoiShaped(_BaseCheck):

    MSG = "The Choi state has dims {dims!r} but the channel is declared as "\
          "{d_in} -> {d_out}"
    RAISE = DimensionMismatch

    def __call__(self, choi, d_in, d_out):
        if tuple(choi.dims) == (d_in, d_out):
            return True
        return self._process_error(dims=list(choi.dims), d_in=d_in,
                                   d_out=d_out)


_is_trace_preserving = IsTracePreserving()
_is_choi_shaped = IsChoiShaped()


class ChoiChannel(object):
    """A channel from ``d_in`` to ``d_out`` dimensional operators.  ``name``
    is an optional label carried into reports.
    """

    def __init__(self, d_in, d_out, choi, tol=CHOI_TOL, name=None):
        if not isinstance(choi, DensityMatrix):
            choi = DensityMatrix(choi, [d_in, d_out])
        _is_choi_shaped(choi, d_in, d_out)
        _is_trace_preserving(choi, d_in, tol)
        self._d_in = int(d_in)
        self._d_out = int(d_out)
        self._choi = choi
        self.name = name

    @property
    def d_in(self):
        return self._d_in

    @property
    def d_out(self):
        return self._d_out

    @property
    def choi(self):
        return self._choi

    def __repr__(self):
        return "ChoiChannel(d_in={0}, d_out={1}, name={2!r})".format(
                self._d_in, self._d_out, self.name)


def maximally_entangled(d):
    if d < 1:
        raise BadParameter("The dimension of a maximally entangled state "
                           "must be 1 or more, got {0!r}".format(d))
    return np.eye(d, dtype=complex).reshape(-1) / np.sqrt(d)


def choi_from_action(d_in, d_out, action):
    """Choi matrix of the linear map ``action`` given on matrix units.
    """
    blocks = np.zeros((d_in, d_out, d_in, d_out), dtype=complex)
    for i in range(d_in):
        for j in range(d_in):
            unit = np.zeros((d_in, d_in), dtype=complex)
            unit[i, j] = 1.0
            blocks[i, :, j, :] = np.asarray(action(unit), dtype=complex)
    size = d_in * d_out
    return blocks.reshape(size, size) / d_in


def apply(channel, x):
    """Evaluate the channel on a ``d_in`` x ``d_in`` operator.
    """
    x = kernels.as_complex_matrix(x, 'input operator')
    if x.shape != (channel.d_in, channel.d_in):
        raise DimensionMismatch("The channel acts on {0}x{0} operators, got "
                                "shape {1}".format(channel.d_in, x.shape))
    blocks = channel.choi.matrix.reshape(channel.d_in, channel.d_out,
                                         channel.d_in, channel.d_out)
    return channel.d_in * np.einsum('ji,jbic->bc', x, blocks)


def channel_from_choi(choi, d_in, d_out, tol=FROM_CHOI_TOL,
                      restrict_to_support=False, rank_tol=kernels.RANK_TOL,
                      name=None):
    """Wrap a Choi state as a channel.

    :param choi: a ``DensityMatrix`` with dims ``[d_in, d_out]``
    :param restrict_to_support: compress the input onto the support of the
        input marginal first.  A state whose input marginal is ``Pi / r``
        then becomes the Choi state of a channel on ``r`` dimensional
        inputs.
    """
    if not isinstance(choi, DensityMatrix):
        choi = DensityMatrix(choi, [d_in, d_out])
    _is_choi_shaped(choi, d_in, d_out)
    if restrict_to_support:
        marginal = states.partial_trace(choi, [0]).matrix
        spectrum = kernels.hermitian_eig(marginal)
        k = kernels.spectrum_rank(spectrum.eigenvalues, rank_tol)
        isometry = np.kron(spectrum.eigenvectors[:, :k], np.eye(d_out))
        compressed = isometry.conj().T @ choi.matrix @ isometry
        choi = DensityMatrix.approximate(compressed, [k, d_out])
        d_in = k
    return ChoiChannel(d_in, d_out, choi, tol=tol, name=name)


def complement_channel(channel, rank_tol=kernels.RANK_TOL):
    """Channel to the environment.  Its Choi state is the canonical
    complement of the Choi state of ``channel``, and the environment
    dimension is the Choi rank.
    """
    complementary = states.complement(channel.choi, rank_tol)
    name = "{0}^c".format(channel.name) if channel.name else None
    return ChoiChannel(channel.d_in, complementary.dims[1], complementary,
                       name=name)


def identity_channel(d):
    psi = maximally_entangled(d)
    return ChoiChannel(d, d, DensityMatrix.from_vector(psi, [d, d]),
                       name='identity')


def werner_holevo():
    """Qutrit Werner-Holevo channel ``X -> (Tr(X) 1 - X^T) / 2``.
    """
    def action(x):
        return (np.trace(x) * np.eye(3) - x.T) / 2
    return ChoiChannel(3, 3, choi_from_action(3, 3, action),
                       name='werner-holevo')


def depolarizing_action(d, q):
    def action(x):
        return (1 - q) * x + q * np.trace(x) * np.eye(d) / d
    return action


def example1_channel(d_A, q=0.5):
    """``X -> (X (+) Lambda(X)) / 2`` with ``Lambda`` the depolarizing
    channel of strength ``q``.  The two blocks occupy output indices
    ``0..d_A-1`` and ``d_A..2d_A-1``.
    """
    if isinstance(d_A, bool) or int(d_A) != d_A or d_A < 2:
        raise BadParameter("example1 needs an input dimension of 2 or more, "
                           "got {0!r}".format(d_A))
    if not 0 < q < 1:
        raise BadParameter("The depolarizing parameter must lie strictly "
                           "between 0 and 1, got {0!r}".format(q))
    d_A = int(d_A)
    depolarize = depolarizing_action(d_A, q)

    def action(x):
        out = np.zeros((2 * d_A, 2 * d_A), dtype=complex)
        out[:d_A, :d_A] = x / 2
        out[d_A:, d_A:] = depolarize(x) / 2
        return out
    return ChoiChannel(d_A, 2 * d_A, choi_from_action(d_A, 2 * d_A, action),
                       name='example1')


def capacity_bounds_from_distillation(d_A, distill_lower):
    """Pair of capacity bounds from a distillation rate of the Choi state.

    ``lower`` is ``Q >= D`` (distil, then teleport).  ``upper`` is
    ``Q <= d_A**2 * D`` (simulate the channel by teleportation, which works
    with probability ``1/d_A**2``); it is only an upper bound when ``D`` is
    the exact rate, so callers should read it as the value of that
    expression.
    """
    if distill_lower < 0:
        raise BadParameter("A distillation rate cannot be negative, got "
                           "{0!r}".format(distill_lower))
    return CapacityBounds(float(distill_lower),
                          float(d_A ** 2 * distill_lower))
