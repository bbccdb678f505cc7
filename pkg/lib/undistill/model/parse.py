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

import configparser

from undistill.util import find
from undistill.validate.errors import BadConfig

SECTION = 'undistill'


class Parse(object):
    """Object used to load and parse config files.

    To use this class::

        parse = Parse()
        parser = parse(['~/run.cfg'], {'undistill': {'seed': '7'}})
        settings = section(parser)
    """

    def __init__(self, project=find.PROJECT, find_files=None, log=None):
        self.project = project
        self._find_files = find_files or find.ConfigFiles(log=log)
        self._log = log

    def __call__(self, config_files=None, dictionary=None, search=True):
        """Returns a ConfigParser loaded from the config files, overlaid with
        ``dictionary``.  With ``search`` off only explicit files are read.
        """
        parser = configparser.ConfigParser(interpolation=None)
        if config_files or search:
            files = self._find_files(self.project, config_files)
            self._load_config_files(parser, files)
        if dictionary:
            parser.read_dict(dictionary)
        return parser

    def _load_config_files(self, parser, config_files):
        for file_ in config_files:
            if self._log:
                self._log.debug("Reading config file {0}".format(file_.name))
            try:
                with open(file_.name, 'r', encoding=file_.encoding) as f:
                    parser.read_file(f, file_.name)
            except (configparser.Error, OSError, UnicodeDecodeError) as err:
                raise BadConfig("Unable to read the config file '{0}': "
                                "{1}".format(file_.name, err))


def section(parser, section_name=SECTION):
    """Plain dict of one section, empty when the section is missing.
    """
    if parser.has_section(section_name):
        return dict(parser.items(section_name))
    return {}
