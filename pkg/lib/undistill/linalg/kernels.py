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

"""Dense Hermitian matrix primitives.

Every rank in this package is a numerical rank: an eigenvalue counts when it
is strictly greater than ``rank_tol`` times the largest eigenvalue.  The
same cutoff decides what "minimum positive eigenvalue" and "support" mean,
so a rank and the eigenvalues it keeps never disagree.

Matrices are plain ``numpy`` arrays.  Nothing here mutates its input.
"""

from collections import namedtuple

import numpy as np
import scipy.linalg

from undistill.validate.errors import NonConvergence
from undistill.validate.matrix import IsFinite
from undistill.validate.matrix import IsHermitian
from undistill.validate.matrix import IsSquare

RANK_TOL = 1e-10
SYMM_TOL = 1e-9

HermitianSpectrum = namedtuple('HermitianSpectrum',
                               ('eigenvalues', 'eigenvectors'))

_is_square = IsSquare()
_is_finite = IsFinite()
_is_hermitian = IsHermitian()


def as_complex_matrix(m, name='matrix'):
    """Return ``m`` as a finite, two dimensional complex array.
    """
    out = np.asarray(m, dtype=complex)
    if out.ndim != 2:
        out = np.atleast_2d(out)
    _is_finite(out, name)
    return out


def hermitian_eig(m, symm_tol=SYMM_TOL):
    """Eigendecomposition of a Hermitian matrix with the eigenvalues sorted
    in descending order and the eigenvectors as matching columns.
    """
    m = as_complex_matrix(m)
    _is_square(m)
    _is_hermitian(m, symm_tol)
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh((m + m.conj().T) / 2)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise NonConvergence("The Hermitian eigensolver did not converge: "
                             "{0}".format(e))
    return HermitianSpectrum(eigenvalues[::-1].copy(),
                             eigenvectors[:, ::-1].copy())


def rank_cutoff(eigenvalues, rank_tol=RANK_TOL):
    """Absolute cutoff for a descending list of eigenvalues.  Eigenvalues
    must be strictly greater than this value to count.
    """
    if len(eigenvalues) == 0:
        return 0.0
    return rank_tol * max(float(eigenvalues[0]), 0.0)


def _retained(eigenvalues, rank_tol, floor=0.0):
    if len(eigenvalues) == 0 or eigenvalues[0] <= floor:
        return 0
    cutoff = max(rank_cutoff(eigenvalues, rank_tol), floor)
    return int(np.count_nonzero(eigenvalues > cutoff))


def numerical_rank(m, rank_tol=RANK_TOL, symm_tol=SYMM_TOL, floor=0.0):
    """Number of eigenvalues strictly above ``rank_tol`` times the largest
    one, and above the absolute ``floor`` when it is given.  The zero
    matrix has rank 0.
    """
    spectrum = hermitian_eig(m, symm_tol)
    return _retained(spectrum.eigenvalues, rank_tol, floor)


def spectrum_rank(eigenvalues, rank_tol=RANK_TOL, floor=0.0):
    """Numerical rank of an already computed descending spectrum.
    """
    return _retained(np.asarray(eigenvalues, dtype=float), rank_tol, floor)


def support_projector(m, rank_tol=RANK_TOL, symm_tol=SYMM_TOL):
    """Orthogonal projector onto the eigenvectors kept by the rank cutoff.
    """
    spectrum = hermitian_eig(m, symm_tol)
    k = _retained(spectrum.eigenvalues, rank_tol)
    vectors = spectrum.eigenvectors[:, :k]
    return vectors @ vectors.conj().T


def pinv_sqrt(m, rank_tol=RANK_TOL, symm_tol=SYMM_TOL):
    """``m`` to the power -1/2 on its support and zero elsewhere.
    """
    spectrum = hermitian_eig(m, symm_tol)
    k = _retained(spectrum.eigenvalues, rank_tol)
    vectors = spectrum.eigenvectors[:, :k]
    scale = 1.0 / np.sqrt(spectrum.eigenvalues[:k])
    return (vectors * scale) @ vectors.conj().T


def min_positive_eigenvalue(m, rank_tol=RANK_TOL, symm_tol=SYMM_TOL):
    """Smallest eigenvalue that survives the rank cutoff, or 0.0 for the
    zero matrix.
    """
    spectrum = hermitian_eig(m, symm_tol)
    k = _retained(spectrum.eigenvalues, rank_tol)
    if not k:
        return 0.0
    return float(spectrum.eigenvalues[k - 1])


def cutoff_audit(m, rank_tol=RANK_TOL, symm_tol=SYMM_TOL):
    """Return ``(smallest retained, largest discarded)`` eigenvalue.  The
    second item is None when nothing was discarded.
    """
    spectrum = hermitian_eig(m, symm_tol)
    k = _retained(spectrum.eigenvalues, rank_tol)
    retained = float(spectrum.eigenvalues[k - 1]) if k else None
    discarded = None
    if k < len(spectrum.eigenvalues):
        discarded = float(spectrum.eigenvalues[k])
    return retained, discarded
