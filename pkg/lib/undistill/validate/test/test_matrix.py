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

import unittest

import numpy as np

from undistill.validate.errors import BadInput
from undistill.validate.errors import BadSubsystemSpec
from undistill.validate.errors import DimensionMismatch
from undistill.validate.errors import NotAState
from undistill.validate.errors import NotHermitian
from undistill.validate.errors import NotNormalized
from undistill.validate.matrix import IsDensityMatrix
from undistill.validate.matrix import IsNormalized
from undistill.validate.matrix import IsValidDims
from undistill.validate.matrix import IsValidSide
from undistill.validate.matrix import IsValidSubsystems
from undistill.validate.test.test_base import MockLogger

TOL = 1e-10


class TestIsDensityMatrix(unittest.TestCase):

    def setUp(self):
        self._validate = IsDensityMatrix.load()

    def test_maximally_mixed(self):
        self.assertTrue(self._validate(np.eye(4) / 4, [2, 2], TOL))

    def test_not_square(self):
        with self.assertRaises(DimensionMismatch):
            self._validate(np.ones((2, 3)) / 2, [2, 3], TOL)

    def test_wrong_dims(self):
        with self.assertRaises(DimensionMismatch):
            self._validate(np.eye(4) / 4, [2, 3], TOL)

    def test_not_finite(self):
        m = np.eye(2) / 2
        m[0, 1] = np.nan
        with self.assertRaises(BadInput):
            self._validate(m, [2], TOL)

    def test_not_hermitian(self):
        m = np.array([[0.5, 0.1], [0.0, 0.5]])
        with self.assertRaises(NotHermitian):
            self._validate(m, [2], TOL)

    def test_trace(self):
        with self.assertRaises(NotAState):
            self._validate(np.eye(2), [2], TOL)

    def test_negative_eigenvalue(self):
        m = np.diag([1.5, -0.5])
        with self.assertRaises(NotAState):
            self._validate(m, [2], TOL)

    def test_logs_and_returns_false(self):
        log = MockLogger()
        validate = IsDensityMatrix.load(log=log, log_type='critical',
                                        raise_errors=False)
        self.assertFalse(validate(np.eye(2), [2], TOL))
        self.assertIn('trace', log.critical_val)


class TestIsValidDims(unittest.TestCase):

    def setUp(self):
        self._validate = IsValidDims()

    def test_is_valid(self):
        self.assertTrue(self._validate([2, 3, 1]))
        self.assertTrue(self._validate((np.int64(2), 2)))

    def test_not_valid(self):
        for dims in ([], [0, 2], [2, -1], [2.0, 2], [True, 2], None):
            with self.assertRaises(BadSubsystemSpec):
                self._validate(dims)


class TestIsValidSubsystems(unittest.TestCase):

    def setUp(self):
        self._validate = IsValidSubsystems()

    def test_is_valid(self):
        self.assertTrue(self._validate([0, 2], [2, 2, 2]))

    def test_not_valid(self):
        for keep in ([], [0, 0], [3], [-1], None):
            with self.assertRaises(BadSubsystemSpec):
                self._validate(keep, [2, 2, 2])


class TestIsNormalized(unittest.TestCase):

    def test_normalized(self):
        self.assertTrue(IsNormalized()(np.array([0.6, 0.8j]), 1e-12))

    def test_not_normalized(self):
        with self.assertRaises(NotNormalized):
            IsNormalized()(np.array([1.0, 1.0]), 1e-12)


class TestIsValidSide(unittest.TestCase):

    def test_sides(self):
        self.assertTrue(IsValidSide()('A'))
        self.assertTrue(IsValidSide()('B'))
        with self.assertRaises(BadSubsystemSpec):
            IsValidSide()('E')
