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

"""Where config files live and which names count as config files.
"""

import itertools
import os
from collections import namedtuple

from undistill.validate.base import _BaseCheck
from undistill.validate.errors import BadConfig

PROJECT = 'undistill'
DEFAULT_ENCODING = 'utf-8'

ConfigFile = namedtuple('ConfigFile', ('name', 'encoding'))


def home_directory(project_name=None):
    """``~`` resolved, or ``~/.project_name``.
    """
    home = os.path.realpath(os.path.expanduser('~'))
    if not project_name:
        return home
    return os.path.join(home, '.' + project_name.strip())


def system_config_directory(project_name=None):
    if os.name == 'nt':
        return None
    etc = os.path.join(os.path.sep, 'etc')
    return os.path.join(etc, project_name.strip()) if project_name else etc


def project_config_directory(with_config=True):
    cwd = os.getcwd()
    return os.path.join(cwd, 'config') if with_config else cwd


def config_directories(project_name=PROJECT):
    """Directories in the order they are read; later ones win.
    """
    candidates = (system_config_directory(project_name),
                  home_directory(project_name),
                  project_config_directory())
    return [directory for directory in candidates if directory]


class IsConfigFile(_BaseCheck):

    MSG = "The config file '{filename}' does not exist or is not a file"
    RAISE = BadConfig
    LOG_TYPE = "critical"

    def __call__(self, filename):
        return os.path.isfile(filename) or self._process_error(
                filename=filename)


class ConfigFiles(object):
    """Callable object that lists the config files to parse.

    Without explicit names every directory from ``get_directories`` is
    searched for each ``root.extension`` name and its hidden ``.`` form;
    missing files are skipped.  Explicit names replace the search and must
    exist.
    """

    FILENAME_ROOTS = ('undistill', 'config', 'setup')
    FILENAME_EXTENSIONS = ('cfg', 'ini', 'conf', '')

    def __init__(self, get_directories=None, log=None):
        self._get_directories = get_directories or config_directories
        self._is_config_file = IsConfigFile(log)

    def __call__(self, project_name=PROJECT, filenames=None):
        if isinstance(filenames, str):
            filenames = [filenames]
        explicit = [os.path.expanduser(name) for name in filenames or ()]
        for name in explicit:
            self._is_config_file(name)
        found = explicit or [path for path in self.candidates(project_name)
                             if os.path.isfile(path)]
        return [ConfigFile(name, DEFAULT_ENCODING) for name in found]

    def candidates(self, project_name=PROJECT):
        return [os.path.join(directory, name)
                for directory in self._get_directories(project_name)
                for name in self.filenames()]

    def filenames(self):
        out = []
        for root, extension in itertools.product(self.FILENAME_ROOTS,
                                                 self.FILENAME_EXTENSIONS):
            name = "{0}.{1}".format(root, extension) if extension else root
            out.extend((name, '.' + name))
        return out


def config_files(project_name=PROJECT, filenames=None, log=None):
    """``ConfigFile`` records of the files to parse; ``filenames`` (a list
    or one string) replaces the search.
    """
    return ConfigFiles(log=log)(project_name, filenames)
