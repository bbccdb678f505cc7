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

from undistill.validate.base import BaseValidate
from undistill.validate.base import ConfigValue
from undistill.validate.errors import BadConfig
from undistill.validate.errors import UndistillError


class MockLogger(object):

    def __init__(self):
        self.debug_val = None
        self.critical_val = None
        self.warning_val = None
        self.info_val = None

    def debug(self, msg):
        self.debug_val = msg

    def critical(self, msg):
        self.critical_val = msg

    def info(self, msg):
        self.info_val = msg

    def warning(self, msg):
        self.warning_val = msg


class IsEven(BaseValidate):

    MSG = "'{key}' of '{val}' in [{section_name}] is odd"
    KEY = 'seed'

    def accept(self, text):
        return int(text) % 2 == 0


SECTIONS = {
    'undistill': {
        'seed': '7',
        'witness_budget': ' 12 ',
        'format': '',
        'rank_tol': None,
    },
}


class TestConfigValue(unittest.TestCase):

    def setUp(self):
        self.lookup = ConfigValue(SECTIONS)

    def test_value(self):
        self.assertEqual(self.lookup('undistill', 'seed'), '7')

    def test_value_is_stripped(self):
        self.assertEqual(self.lookup('undistill', 'witness_budget'), '12')

    def test_missing_section(self):
        with self.assertRaises(BadConfig) as caught:
            self.lookup('other', 'seed')
        self.assertIn("'other'", str(caught.exception))

    def test_missing_key(self):
        with self.assertRaises(BadConfig):
            self.lookup('undistill', 'ppt_tol')

    def test_empty_values(self):
        for key in ('format', 'rank_tol'):
            with self.assertRaises(BadConfig):
                self.lookup('undistill', key)

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            self.lookup('other', 'seed')
        with self.assertRaises(UndistillError):
            self.lookup('other', 'seed')

    def test_logs_at_log_type(self):
        log = MockLogger()
        lookup = ConfigValue(SECTIONS, log=log, log_type='critical')
        with self.assertRaises(BadConfig):
            lookup('undistill', 'ppt_tol')
        self.assertIn("'ppt_tol'", log.critical_val)
        self.assertIsNone(log.debug_val)

    def test_no_raise(self):
        log = MockLogger()
        lookup = ConfigValue(SECTIONS, log=log, raise_errors=False)
        self.assertIsNone(lookup('other', 'seed'))
        self.assertIsNotNone(log.debug_val)


class TestBaseValidate(unittest.TestCase):

    def test_rejected(self):
        log = MockLogger()
        with self.assertRaises(BadConfig):
            IsEven.load(SECTIONS, log)('undistill')
        self.assertEqual(log.critical_val,
                         "'seed' of '7' in [undistill] is odd")

    def test_accepted(self):
        self.assertTrue(IsEven.load(SECTIONS)('undistill', 'witness_budget'))

    def test_unparsable_is_rejected(self):
        sections = {'undistill': {'seed': 'seven'}}
        validate = IsEven.load(sections, raise_errors=False)
        self.assertFalse(validate('undistill'))

    def test_missing_key_is_reported_critical(self):
        log = MockLogger()
        validate = IsEven.load(SECTIONS, log, raise_errors=False)
        self.assertFalse(validate('undistill', 'ppt_tol'))
        self.assertIn("'ppt_tol' does not exist", log.critical_val)
