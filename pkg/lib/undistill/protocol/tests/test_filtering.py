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
from numpy.testing import assert_allclose

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.protocol import filtering
from undistill.tst.base import max_abs
from undistill.tst.base import random_mixed
from undistill.tst.base import random_state
from undistill.validate.errors import BadSubsystemSpec
from undistill.validate.errors import PreconditionRankNotLow
from undistill.validate.test.test_base import MockLogger


class TestSkewedState(unittest.TestCase):

    def setUp(self):
        self.rho = states.skewed_state(0.9)

    def test_filter_b(self):
        outcome = filtering.apply_filter(self.rho, 'B')
        self.assertAlmostEqual(outcome.p_succ, 0.2, delta=1e-12)
        self.assertAlmostEqual(outcome.lambda_min, 0.1, delta=1e-12)
        assert_allclose(outcome.filtered_state.matrix,
                        states.bell_state().matrix, atol=1e-12)
        self.assertEqual((outcome.r, outcome.r_side), (1, 2))

    def test_filter_operator(self):
        outcome = filtering.apply_filter(self.rho, 'b')
        self.assertEqual(outcome.side, 'B')
        expected = np.sqrt(0.1) * np.diag([0.9 ** -0.5, 0.1 ** -0.5])
        assert_allclose(outcome.filter_operator, expected, atol=1e-12)

    def test_bound(self):
        self.assertAlmostEqual(filtering.theorem1_bound(self.rho, 'B'), 0.2,
                               delta=1e-12)
        self.assertAlmostEqual(filtering.theorem1_bound(self.rho, 'A'), 0.2,
                               delta=1e-12)

    def test_filtered_hashing_rate(self):
        self.assertAlmostEqual(
                filtering.filtered_hashing_rate(self.rho, 'B'), 0.2,
                delta=1e-9)

    def test_logs(self):
        log = MockLogger()
        filtering.LocalFilter(log=log)(self.rho, 'A')
        self.assertIn('side A', log.debug_val)


class TestBellState(unittest.TestCase):

    def test_filter(self):
        outcome = filtering.apply_filter(states.bell_state(), 'B')
        self.assertAlmostEqual(outcome.p_succ, 1.0, delta=1e-12)

    def test_bound(self):
        self.assertAlmostEqual(
                filtering.theorem1_bound(states.bell_state(), 'B'), 1.0,
                delta=1e-9)


class TestPreconditions(unittest.TestCase):

    def test_full_rank(self):
        rho = random_mixed(2, 2, 3)
        with self.assertRaises(PreconditionRankNotLow):
            filtering.theorem1_bound(rho, 'B')
        self.assertIsNone(filtering.optional_theorem1_bound(rho, 'B'))
        # the filter itself has no rank condition
        self.assertGreater(filtering.apply_filter(rho, 'B').p_succ, 0)

    def test_bad_side(self):
        with self.assertRaises(BadSubsystemSpec):
            filtering.apply_filter(states.bell_state(), 'E')

    def test_tripartite_rejected(self):
        rho = states.ghz_state().reduced_state([0, 1, 2])
        with self.assertRaises(BadSubsystemSpec):
            filtering.apply_filter(rho, 'B')


class TestFilterChain(unittest.TestCase):
    """Bound, flatness and success probability over random low-rank
    states."""

    DIMS = ((2, 3, 2), (2, 4, 3), (3, 4, 2))

    def test_chain(self):
        for case in range(500):
            d_A, d_B, d_E = self.DIMS[case % 3]
            rho = random_state(d_A, d_B, d_E, case)
            outcome = filtering.apply_filter(rho, 'B')
            bound = filtering.theorem1_bound(rho, 'B')
            rate = filtering.filtered_hashing_rate(rho, 'B', outcome=outcome)
            self.assertLessEqual(bound, rate + 1e-9, msg=case)

            marginal = states.partial_trace(outcome.filtered_state, [1])
            flat = outcome.support_projector / outcome.r_side
            self.assertLessEqual(max_abs(marginal.matrix - flat), 1e-9,
                                 msg=case)

            rho_B = states.partial_trace(rho, [1]).matrix
            closed_form = (kernels.min_positive_eigenvalue(rho_B)
                           * kernels.numerical_rank(rho_B))
            self.assertLessEqual(abs(outcome.p_succ - closed_form), 1e-9,
                                 msg=case)
