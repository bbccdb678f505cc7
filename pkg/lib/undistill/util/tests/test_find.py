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

import os
import unittest

from undistill.tst.base import TstProject
from undistill.util import find
from undistill.validate.errors import BadConfig


class TestDirectories(unittest.TestCase):

    def test_home_directory(self):
        self.assertTrue(os.path.exists(find.home_directory()))
        self.assertTrue(find.home_directory('test').endswith('.test'))

    def test_system_config_directory(self):
        if os.name == 'nt':
            self.assertIsNone(find.system_config_directory())
        else:
            self.assertTrue(os.path.exists(find.system_config_directory()))
            self.assertTrue(
                    find.system_config_directory('test').endswith('test'))

    def test_project_config_directory(self):
        self.assertEqual(find.project_config_directory(False), os.getcwd())
        self.assertTrue(find.project_config_directory().endswith('config'))

    def test_config_directories(self):
        dirs = find.config_directories('test')
        self.assertEqual(dirs[-1], find.project_config_directory())
        self.assertIn(find.home_directory('test'), dirs)


class TestConfigFiles(TstProject):

    def test_finds_every_name(self):
        names = []
        for root in find.ConfigFiles.FILENAME_ROOTS:
            for extension in find.ConfigFiles.FILENAME_EXTENSIONS:
                name = "{0}.{1}".format(root, extension) if extension \
                    else root
                names.append(name)
                self.write_config(name, {'undistill': {'seed': '1'}})
        files = self.find_files('undistill')
        found = [os.path.basename(f.name) for f in files]
        self.assertEqual(sorted(found), sorted(names))
        for config_file in files:
            self.assertEqual(config_file.encoding, 'utf-8')

    def test_hidden_names(self):
        self.write_config('.undistill.cfg', {'undistill': {}})
        files = self.find_files('undistill')
        self.assertEqual([os.path.basename(f.name) for f in files],
                         ['.undistill.cfg'])

    def test_ignores_other_names(self):
        self.write_config('other.cfg', {'undistill': {}})
        self.assertEqual(self.find_files('undistill'), [])

    def test_explicit_files(self):
        first = self.write_config('a.test', {}, directory=self.root)
        second = self.write_config('b.test', {}, directory=self.root)
        files = find.config_files('undistill', [first, second])
        self.assertEqual(files, [(first, 'utf-8'), (second, 'utf-8')])

    def test_explicit_string(self):
        first = self.write_config('a.test', {}, directory=self.root)
        self.assertEqual(find.config_files('undistill', first),
                         [(first, 'utf-8')])

    def test_missing_explicit_file(self):
        with self.assertRaises(BadConfig):
            find.config_files('undistill', [self.path('nope.cfg')])

    def test_default_encoding(self):
        self.write_config('undistill.ini', {'undistill': {}})
        files = self.find_files('undistill')
        self.assertEqual(files[0].encoding, find.DEFAULT_ENCODING)

    def test_candidates_follow_directory_order(self):
        files = find.ConfigFiles(lambda project: ['/first', '/second'])
        candidates = files.candidates('undistill')
        per_directory = len(files.filenames())
        self.assertEqual(len(candidates), 2 * per_directory)
        self.assertTrue(all(path.startswith('/first')
                            for path in candidates[:per_directory]))
        self.assertIn(os.path.join('/second', '.setup.conf'), candidates)
