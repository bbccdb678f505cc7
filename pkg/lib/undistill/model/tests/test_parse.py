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

from undistill.model.parse import SECTION
from undistill.model.parse import Parse
from undistill.model.parse import section
from undistill.tst.base import TstProject
from undistill.validate.errors import BadConfig


class TestParse(TstProject):

    def setUp(self):
        super(TestParse, self).setUp()
        self.data = {
            SECTION: {'rank_tol': '1e-8', 'seed': '3'},
            'other': {'foo': 'bar'},
        }
        self.write_config('undistill.cfg', self.data)
        self.parse = Parse(find_files=self.find_files)

    def test_sections(self):
        data = self.parse()
        for name in self.data:
            self.assertTrue(data.has_section(name))

    def test_values(self):
        data = self.parse()
        for name, dct in self.data.items():
            for key, val in dct.items():
                self.assertEqual(data[name][key], val)

    def test_later_file_wins(self):
        self.write_config('config.ini', {SECTION: {'seed': '9'}})
        self.assertEqual(section(self.parse())['seed'], '9')
        self.assertEqual(section(self.parse())['rank_tol'], '1e-8')

    def test_dictionary_overlay(self):
        data = self.parse(dictionary={SECTION: {'seed': '5'}})
        self.assertEqual(data[SECTION]['seed'], '5')

    def test_no_search(self):
        self.assertEqual(section(self.parse(search=False)), {})

    def test_explicit_file(self):
        path = self.write_config('run.txt', {SECTION: {'format': 'csv'}},
                                 directory=self.root)
        data = section(self.parse([path], search=False))
        self.assertEqual(data, {'format': 'csv'})

    def test_missing_explicit_file(self):
        with self.assertRaises(BadConfig):
            self.parse([self.path('missing.cfg')])

    def test_broken_file(self):
        path = self.path('broken.cfg')
        with open(path, 'w') as f:
            f.write("seed = 1\n")
        with self.assertRaises(BadConfig):
            self.parse([path])


class TestSection(unittest.TestCase):

    def test_missing_section(self):
        self.assertEqual(section(Parse()(search=False)), {})
