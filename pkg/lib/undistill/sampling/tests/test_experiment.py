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

from undistill.sampling import experiment
from undistill.sampling.experiment import EnsembleSpec
from undistill.sampling.experiment import Theorem3Experiment
from undistill.validate.errors import BadSpec
from undistill.validate.test.test_base import MockLogger


class TestTheorem3Experiment(unittest.TestCase):

    def test_almost_sure_checks(self):
        report = experiment.run_theorem3_experiment(
                EnsembleSpec(2, 4, 3, 200, 0), witness_budget=50)
        for check in experiment.CHECKS:
            self.assertEqual(report.frequencies[check], 1.0, msg=check)
            self.assertEqual(report.counts[check], 200)
        self.assertEqual(len(report.samples), 200)
        self.assertEqual([s.index for s in report.samples],
                         list(range(200)))
        self.assertEqual(report.generator, 'PCG64')

    def test_other_seeds(self):
        for seed in (1, 2, 3):
            report = experiment.run_theorem3_experiment(
                    EnsembleSpec(2, 4, 3, 20, seed))
            self.assertEqual(set(report.frequencies.values()), {1.0})

    def test_record(self):
        report = experiment.run_theorem3_experiment(
                EnsembleSpec(3, 4, 2, 3, 5))
        record = report.samples[0]
        self.assertEqual((record.r, record.r_B), (2, 4))
        self.assertEqual(record.schmidt_ranks, [2, 2, 2])
        self.assertGreater(record.smallest_retained, 0)
        self.assertLess(abs(record.largest_discarded), 1e-12)
        self.assertGreaterEqual(record.trials, 1)

    def test_workers_do_not_change_results(self):
        spec = EnsembleSpec(2, 4, 3, 12, 9)
        serial = Theorem3Experiment(workers=1)(spec)
        threaded = Theorem3Experiment(workers=4)(spec)
        self.assertEqual(list(experiment.csv_rows(serial)),
                         list(experiment.csv_rows(threaded)))

    def test_deterministic(self):
        spec = EnsembleSpec(2, 4, 3, 5, 7)
        first = experiment.run_theorem3_experiment(spec)
        second = experiment.run_theorem3_experiment(spec)
        self.assertEqual(first.samples, second.samples)

    def test_product_states(self):
        # with d_A = 1 there is nothing to distil and no witness
        report = experiment.run_theorem3_experiment(
                EnsembleSpec(1, 2, 1, 5, 0))
        self.assertEqual(report.frequencies['rank_rho_AB'], 1.0)
        self.assertEqual(report.frequencies['witness_found'], 0.0)

    def test_environment_too_large(self):
        with self.assertRaises(BadSpec):
            experiment.run_theorem3_experiment(EnsembleSpec(2, 4, 4, 10, 0))

    def test_bad_spec(self):
        for spec in (EnsembleSpec(0, 4, 3, 1), EnsembleSpec(2, 4, 3, 0),
                     EnsembleSpec(2, 4, 3, 1, 0, 0.0)):
            with self.assertRaises(BadSpec):
                experiment.run_theorem3_experiment(spec)

    def test_logs(self):
        log = MockLogger()
        Theorem3Experiment(log=log)(EnsembleSpec(2, 3, 2, 2))
        self.assertIn('frequencies', log.info_val)

    def test_csv_rows(self):
        report = experiment.run_theorem3_experiment(
                EnsembleSpec(2, 3, 2, 2, 0))
        rows = list(experiment.csv_rows(report))
        self.assertEqual(rows[0][0], 'index')
        self.assertEqual(len(rows), 3)
        self.assertEqual(rows[1][3], '2 2')
