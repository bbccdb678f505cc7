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

"""Fixtures shared by the test suites."""

import configparser
import contextlib
import io
import os
import shutil
import tempfile
import unittest

import numpy as np

from undistill.cli.main import main
from undistill.model import codec
from undistill.model.state import DensityMatrix
from undistill.sampling import haar
from undistill.util import find


def random_pure(d_A, d_B, d_E, seed):
    return haar.sample_pure(d_A, d_B, d_E, seed)


def random_state(d_A, d_B, d_E, seed):
    """``rho_AB`` of a Haar state; its rank is ``min(d_E, d_A d_B)``.
    """
    return haar.sample_state(d_A, d_B, d_E, seed)


def random_mixed(d_A, d_B, seed):
    """Full rank state from a Ginibre matrix.
    """
    rng = haar.make_rng(seed)
    size = d_A * d_B
    g = haar.complex_gaussian(rng, (size, size))
    m = g @ g.conj().T
    return DensityMatrix.approximate(m, [d_A, d_B])


def random_unit(d, seed):
    return haar.haar_vector(d, haar.make_rng(seed))


def max_abs(m):
    return float(np.max(np.abs(m)))


class TstProject(unittest.TestCase):
    """Test case with a throwaway project tree in a temp directory.  Config
    files written with ``write_config`` land in ``config_directory``, the
    only directory ``find_files`` searches.
    """

    def setUp(self):
        self.root = tempfile.mkdtemp(prefix='undistill-test-')
        self.config_directory = os.path.join(self.root, 'config')
        os.mkdir(self.config_directory)
        self.find_files = find.ConfigFiles(
                get_directories=lambda project_name: [self.config_directory])

    def tearDown(self):
        shutil.rmtree(self.root, ignore_errors=True)

    def path(self, *parts):
        return os.path.join(self.root, *parts)

    def write_config(self, filename, data, directory=None):
        """Write ``data`` (section -> {key: value}) as an INI file and return
        its path.
        """
        parser = configparser.ConfigParser(interpolation=None)
        parser.read_dict(data)
        path = os.path.join(directory or self.config_directory, filename)
        with open(path, 'w', encoding='utf-8') as f:
            parser.write(f)
        return path

    def write_json(self, filename, obj):
        path = self.path(filename)
        with open(path, 'w', encoding='utf-8') as f:
            if isinstance(obj, str):
                f.write(obj)
            else:
                f.write(codec.dumps(obj))
        return path


def run_cli(argv):
    """Run the command line tool; returns ``(exit_code, stdout_text)``.
    """
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()
