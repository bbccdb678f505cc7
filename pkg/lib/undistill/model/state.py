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

"""Multipartite states.

Subsystems are indexed left to right in tensor factor order and all
flattening is row-major, so index ``(a, b, e)`` of a tripartite vector sits
at ``(a * d_B + b) * d_E + e``.  Partial traces and transposes rely on this
layout.

``DensityMatrix`` and ``TripartitePureState`` validate their invariants on
construction and are read-only afterwards.
"""

from collections import namedtuple

import numpy as np
import scipy.linalg
import scipy.special

from undistill.linalg import kernels
from undistill.validate.errors import BadParameter
from undistill.validate.errors import NotAState
from undistill.validate.matrix import IsBipartite
from undistill.validate.matrix import IsDensityMatrix
from undistill.validate.matrix import IsFinite
from undistill.validate.matrix import IsNormalized
from undistill.validate.matrix import IsValidDims
from undistill.validate.matrix import IsValidSubsystems
from undistill.validate.matrix import MatchesDims

STATE_TOL = 1e-10
NORM_TOL = 1e-12
PHI_NORM_TOL = 1e-10
PPT_TOL = 1e-9

A, B, E = 0, 1, 2

PptVerdict = namedtuple('PptVerdict', ('ppt', 'witness', 'marginal'))
RankProfile = namedtuple('RankProfile', ('r', 'r_A', 'r_B', 'r_E'))

_is_density_matrix = IsDensityMatrix.load()
_is_valid_dims = IsValidDims()
_matches_dims = MatchesDims()
_is_finite = IsFinite()
_is_normalized = IsNormalized()
_is_valid_subsystems = IsValidSubsystems()
_is_bipartite = IsBipartite()


def _frozen(array):
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


class DensityMatrix(object):
    """A positive, unit trace, Hermitian matrix on a tensor product of
    subsystems with dimensions ``dims``.
    """

    def __init__(self, matrix, dims, tol=STATE_TOL):
        matrix = np.asarray(matrix, dtype=complex)
        dims = tuple(dims) if not isinstance(dims, int) else (dims,)
        _is_density_matrix(matrix, dims, tol)
        self._matrix = _frozen(matrix)
        self._dims = tuple(int(d) for d in dims)

    @property
    def matrix(self):
        return self._matrix

    @property
    def dims(self):
        return self._dims

    @property
    def dim(self):
        return self._matrix.shape[0]

    def __repr__(self):
        return "DensityMatrix(dims={0!r})".format(list(self._dims))

    @classmethod
    def from_vector(cls, vector, dims, tol=STATE_TOL):
        """Projector onto a normalized pure state.
        """
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        _is_normalized(vector, NORM_TOL, 'state vector')
        return cls(np.outer(vector, vector.conj()), dims, tol)

    @classmethod
    def approximate(cls, matrix, dims, tol=STATE_TOL):
        """Hermitize and renormalize a matrix that is a state up to rounding
        before validating it.  Used for states produced by arithmetic.
        """
        matrix = np.asarray(matrix, dtype=complex)
        matrix = (matrix + matrix.conj().T) / 2
        trace = np.trace(matrix).real
        if trace <= 0:
            raise NotAState("Cannot normalize a matrix with trace "
                            "{0!r}".format(trace))
        return cls(matrix / trace, dims, tol)


class TripartitePureState(object):
    """A unit vector on A (x) B (x) E.
    """

    def __init__(self, amplitudes, dims, tol=NORM_TOL):
        amplitudes = np.asarray(amplitudes, dtype=complex).reshape(-1)
        _is_valid_dims(dims)
        if len(dims) != 3:
            raise NotAState("A tripartite pure state needs three subsystem "
                            "dimensions, got {0!r}".format(list(dims)))
        _matches_dims(amplitudes.size, dims, 'state vector')
        _is_finite(amplitudes, 'state vector')
        _is_normalized(amplitudes, tol, 'state vector')
        self._amplitudes = _frozen(amplitudes)
        self._dims = tuple(int(d) for d in dims)

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def dims(self):
        return self._dims

    def __repr__(self):
        return "TripartitePureState(dims={0!r})".format(list(self._dims))

    def tensor(self):
        return self._amplitudes.reshape(self._dims)

    def reduced_state(self, keep):
        """Reduced density matrix on the subsystems in ``keep``.
        """
        return reduce_vector(self._amplitudes, self._dims, keep)


def reduce_vector(amplitudes, dims, keep):
    """Reduced density matrix of a pure state vector on ``keep``.
    """
    _is_valid_subsystems(keep, dims)
    keep = sorted(keep)
    rest = [i for i in range(len(dims)) if i not in keep]
    tensor = np.asarray(amplitudes, dtype=complex).reshape(dims)
    tensor = np.transpose(tensor, keep + rest)
    kept_dims = [dims[i] for i in keep]
    columns = tensor.reshape(int(np.prod(kept_dims)), -1)
    return DensityMatrix.approximate(columns @ columns.conj().T, kept_dims)


def partial_trace(rho, keep):
    """Trace out every subsystem of ``rho`` that is not in ``keep``.
    """
    dims = list(rho.dims)
    _is_valid_subsystems(keep, dims)
    keep = sorted(keep)
    n = len(dims)
    tensor = rho.matrix.reshape(dims + dims)
    for index in reversed(range(n)):
        if index in keep:
            continue
        current = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=index, axis2=index + current)
    kept_dims = [dims[i] for i in keep]
    size = int(np.prod(kept_dims))
    return DensityMatrix.approximate(tensor.reshape(size, size), kept_dims)


def transpose_subsystem(matrix, dims, subsystem):
    """Transpose one tensor factor of an operator.  This is a permutation of
    entries, so applying it twice gives back the input bit for bit.
    """
    dims = list(dims)
    _is_valid_subsystems([subsystem], dims)
    n = len(dims)
    tensor = np.asarray(matrix).reshape(dims + dims)
    axes = list(range(2 * n))
    axes[subsystem], axes[n + subsystem] = axes[n + subsystem], axes[subsystem]
    size = int(np.prod(dims))
    return np.transpose(tensor, axes).reshape(size, size)


def partial_transpose(rho, subsystem=A):
    return transpose_subsystem(rho.matrix, rho.dims, subsystem)


def is_ppt(rho, tol=PPT_TOL, subsystem=A):
    """PPT test of a bipartite state.  The witness is the smallest
    eigenvalue of the partial transpose; ``marginal`` flags witnesses within
    ten tolerances of zero.
    """
    _is_bipartite(rho.dims)
    spectrum = kernels.hermitian_eig(partial_transpose(rho, subsystem))
    witness = float(spectrum.eigenvalues[-1])
    return PptVerdict(witness >= -tol, witness, abs(witness) < 10 * tol)


def von_neumann_entropy(rho, rank_tol=kernels.RANK_TOL):
    """Entropy in bits.  Eigenvalues below the rank cutoff contribute 0.
    """
    eigenvalues = kernels.hermitian_eig(rho.matrix).eigenvalues
    k = kernels.spectrum_rank(eigenvalues, rank_tol)
    entropy = float(np.sum(scipy.special.entr(eigenvalues[:k]))) / np.log(2)
    return min(max(entropy, 0.0), float(np.log2(rho.dim)))


def coherent_information(rho, toward=B, rank_tol=kernels.RANK_TOL):
    """``S(rho_toward) - S(rho)``: the hashing rate with the receiving party
    ``toward``.  The default is the usual A to B direction.
    """
    _is_bipartite(rho.dims)
    marginal = partial_trace(rho, [toward])
    return (von_neumann_entropy(marginal, rank_tol)
            - von_neumann_entropy(rho, rank_tol))


def purify(rho, rank_tol=kernels.RANK_TOL):
    """Canonical purification: ``sum_i sqrt(l_i) |e_i> |i>_E`` over the
    eigenpairs kept by the rank cutoff, largest eigenvalue first.  The
    environment dimension is the numerical rank of ``rho``.
    """
    _is_bipartite(rho.dims)
    spectrum = kernels.hermitian_eig(rho.matrix)
    k = kernels.spectrum_rank(spectrum.eigenvalues, rank_tol)
    columns = spectrum.eigenvectors[:, :k] * np.sqrt(spectrum.eigenvalues[:k])
    amplitudes = columns.reshape(-1)
    amplitudes = amplitudes / np.linalg.norm(amplitudes)
    return TripartitePureState(amplitudes, list(rho.dims) + [k])


def complement(rho, rank_tol=kernels.RANK_TOL):
    """``rho_AE`` of the canonical purification, with dims ``[d_A, d_E]``.
    """
    return purify(rho, rank_tol).reduced_state([A, E])


def conditional_marginal(rho, phi, tol=PHI_NORM_TOL):
    """Unnormalized ``Tr_A[(|phi><phi| (x) 1) rho]``; its trace is
    ``<phi|rho_A|phi>``.
    """
    _is_bipartite(rho.dims)
    phi = np.asarray(phi, dtype=complex).reshape(-1)
    _matches_dims(phi.size, rho.dims[:1], 'vector phi')
    _is_normalized(phi, tol, 'vector phi')
    d_A, d_B = rho.dims
    tensor = rho.matrix.reshape(d_A, d_B, d_A, d_B)
    out = np.einsum('i,ibjc,j->bc', phi.conj(), tensor, phi)
    return (out + out.conj().T) / 2


def schmidt_rank(vector, dims, rank_tol=kernels.RANK_TOL, tol=PHI_NORM_TOL):
    """Schmidt rank of a bipartite unit vector with the cut ``dims``.  A
    Schmidt coefficient counts when its square passes the rank cutoff, so
    this equals the numerical rank of either reduced state.
    """
    vector = np.asarray(vector, dtype=complex).reshape(-1)
    _is_valid_dims(dims)
    _is_bipartite(dims)
    _matches_dims(vector.size, dims, 'vector')
    _is_normalized(vector, tol)
    singular = scipy.linalg.svdvals(vector.reshape(dims))
    return kernels.spectrum_rank(singular ** 2, rank_tol)


def rank_profile(rho, rank_tol=kernels.RANK_TOL):
    """Ranks of a bipartite state and its marginals.  ``r_E`` equals ``r``
    for any purification.
    """
    _is_bipartite(rho.dims)
    r = kernels.numerical_rank(rho.matrix, rank_tol)
    r_A = kernels.numerical_rank(partial_trace(rho, [A]).matrix, rank_tol)
    r_B = kernels.numerical_rank(partial_trace(rho, [B]).matrix, rank_tol)
    return RankProfile(r, r_A, r_B, r)


def bell_state():
    """``(|00> + |11>) / sqrt(2)`` as a two-qubit density matrix.
    """
    return skewed_state(0.5)


def skewed_state(p=0.9):
    """``sqrt(p)|00> + sqrt(1-p)|11>`` as a two-qubit density matrix.
    """
    if not 0 <= p <= 1:
        raise BadParameter("The weight p must lie in [0, 1], got "
                           "{0!r}".format(p))
    vector = np.zeros(4, dtype=complex)
    vector[0] = np.sqrt(p)
    vector[3] = np.sqrt(1 - p)
    return DensityMatrix.from_vector(vector, [2, 2])


def maximally_mixed(d_A=2, d_B=None):
    d_B = d_A if d_B is None else d_B
    _is_valid_dims([d_A, d_B])
    size = d_A * d_B
    return DensityMatrix(np.eye(size, dtype=complex) / size, [d_A, d_B])


def ghz_state():
    """``(|000> + |111>) / sqrt(2)``.
    """
    vector = np.zeros(8, dtype=complex)
    vector[0] = vector[7] = 1 / np.sqrt(2)
    return TripartitePureState(vector, [2, 2, 2])


def bell_with_environment():
    """Bell pair on AB with a trivial one dimensional E.
    """
    vector = np.zeros(4, dtype=complex)
    vector[0] = vector[3] = 1 / np.sqrt(2)
    return TripartitePureState(vector, [2, 2, 1])
