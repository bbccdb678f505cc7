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

"""Validators for the matrices, vectors and subsystem layouts handed to the
numerical routines.
"""

import numbers

import numpy as np
import scipy.linalg

from undistill.validate.base import _BaseCheck
from undistill.validate.errors import BadInput
from undistill.validate.errors import BadSubsystemSpec
from undistill.validate.errors import DimensionMismatch
from undistill.validate.errors import NotAState
from undistill.validate.errors import NotHermitian
from undistill.validate.errors import NotNormalized


class IsSquare(_BaseCheck):

    MSG = "The {name} must be a square matrix, got shape {shape}"
    RAISE = DimensionMismatch

    def __call__(self, m, name='matrix'):
        if m.ndim == 2 and m.shape[0] == m.shape[1]:
            return True
        return self._process_error(name=name, shape=m.shape)


class IsFinite(_BaseCheck):

    MSG = "The {name} contains NaN or infinite entries"
    RAISE = BadInput

    def __call__(self, m, name='matrix'):
        if np.all(np.isfinite(m)):
            return True
        return self._process_error(name=name)


class IsHermitian(_BaseCheck):

    MSG = "The {name} is not Hermitian: max |m - m^dagger| is "\
          "{deviation:.3e}, the tolerance is {tol:.1e}"
    RAISE = NotHermitian

    def __call__(self, m, tol, name='matrix'):
        deviation = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        if deviation <= tol:
            return True
        return self._process_error(name=name, deviation=deviation, tol=tol)


class IsNormalized(_BaseCheck):

    MSG = "The {name} has norm {norm:.17g}, expected 1 within {tol:.1e}"
    RAISE = NotNormalized

    def __call__(self, v, tol, name='vector'):
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) <= tol:
            return True
        return self._process_error(name=name, norm=norm, tol=tol)


class IsValidDims(_BaseCheck):

    MSG = "The subsystem dimensions {dims!r} are not valid: expected a "\
          "non-empty list of integers of 1 or more"
    RAISE = BadSubsystemSpec

    def __call__(self, dims):
        try:
            items = list(dims)
        except TypeError:
            return self._process_error(dims=dims)
        if not items:
            return self._process_error(dims=dims)
        for item in items:
            integral = isinstance(item, numbers.Integral)
            if isinstance(item, bool) or not integral or item < 1:
                return self._process_error(dims=dims)
        return True


class MatchesDims(_BaseCheck):

    MSG = "The subsystem dimensions {dims!r} describe a space of dimension "\
          "{expected}, but the {name} has size {size}"
    RAISE = DimensionMismatch

    def __call__(self, size, dims, name='matrix'):
        expected = int(np.prod(dims))
        if size == expected:
            return True
        return self._process_error(dims=list(dims), expected=expected,
                                   size=size, name=name)


class HasUnitTrace(_BaseCheck):

    MSG = "The {name} has trace {trace!r}, expected 1 within {tol:.1e}"
    RAISE = NotAState

    def __call__(self, m, tol, name='density matrix'):
        trace = complex(np.trace(m))
        if abs(trace - 1.0) <= tol:
            return True
        return self._process_error(name=name, trace=trace, tol=tol)


class IsPositive(_BaseCheck):

    MSG = "The {name} is not positive semidefinite: eigenvalue "\
          "{eigenvalue:.3e} is below -{tol:.1e}"
    RAISE = NotAState

    def __call__(self, m, tol, name='density matrix'):
        hermitian = (m + m.conj().T) / 2
        eigenvalue = float(scipy.linalg.eigvalsh(hermitian)[0])
        if eigenvalue >= -tol:
            return True
        return self._process_error(name=name, eigenvalue=eigenvalue, tol=tol)


class IsDensityMatrix(_BaseCheck):
    """Callable object checking every invariant of a density matrix: a
    finite, square, Hermitian, unit-trace, positive semidefinite matrix
    whose size matches the product of the subsystem dimensions.

    To use this class::

        is_density_matrix = IsDensityMatrix.load()
        is_density_matrix(np.eye(4) / 4, [2, 2], 1e-10)
    """

    def __init__(self, is_valid_dims, is_square, is_finite, matches_dims,
                 is_hermitian, has_unit_trace, is_positive, log=None,
                 log_type=None, raise_errors=True):
        super(IsDensityMatrix, self).__init__(log, log_type, raise_errors)
        self._is_valid_dims = is_valid_dims
        self._is_square = is_square
        self._is_finite = is_finite
        self._matches_dims = matches_dims
        self._is_hermitian = is_hermitian
        self._has_unit_trace = has_unit_trace
        self._is_positive = is_positive

    @classmethod
    def load(cls, log=None, log_type=None, raise_errors=True):
        args = (log, log_type, raise_errors)
        return cls(IsValidDims(*args), IsSquare(*args), IsFinite(*args),
                   MatchesDims(*args), IsHermitian(*args),
                   HasUnitTrace(*args), IsPositive(*args), *args)

    def __call__(self, m, dims, tol, name='density matrix'):
        if not self._is_valid_dims(dims):
            return False
        if not self._is_square(m, name):
            return False
        if not self._is_finite(m, name):
            return False
        if not self._matches_dims(m.shape[0], dims, name):
            return False
        if not self._is_hermitian(m, tol, name):
            return False
        if not self._has_unit_trace(m, tol, name):
            return False
        return self._is_positive(m, tol, name)


class IsValidSubsystems(_BaseCheck):

    MSG = "The subsystem selection {keep!r} is not valid for dims {dims!r}: "\
          "expected distinct indices between 0 and {last}"
    RAISE = BadSubsystemSpec

    def __call__(self, keep, dims):
        n = len(dims)
        try:
            items = list(keep)
        except TypeError:
            items = None
        valid = bool(items) and len(set(items)) == len(items)
        if valid:
            for item in items:
                if (isinstance(item, bool)
                        or not isinstance(item, numbers.Integral)
                        or not 0 <= item < n):
                    valid = False
        if valid:
            return True
        return self._process_error(keep=keep, dims=list(dims), last=n - 1)


class IsBipartite(_BaseCheck):

    MSG = "Expected a bipartite state, got subsystem dimensions {dims!r}"
    RAISE = BadSubsystemSpec

    def __call__(self, dims):
        if len(dims) == 2:
            return True
        return self._process_error(dims=list(dims))


class IsValidSide(_BaseCheck):

    MSG = "The side {side!r} is not valid.  Please choose from the "\
          "following: {sides}"
    RAISE = BadSubsystemSpec
    SIDES = ('A', 'B')

    def __call__(self, side):
        if side in self.SIDES:
            return True
        return self._process_error(side=side, sides=repr(self.SIDES))
