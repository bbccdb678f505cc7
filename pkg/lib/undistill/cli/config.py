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

from collections import OrderedDict
from collections import namedtuple

from undistill.linalg import kernels
from undistill.model import state as states
from undistill.model.parse import SECTION
from undistill.model.parse import Parse
from undistill.model.parse import section
from undistill.protocol.witness import DEFAULT_BUDGET
from undistill.validate.config import IsValidBudget
from undistill.validate.config import IsValidFormat
from undistill.validate.config import IsValidSeed
from undistill.validate.config import IsValidTolerance

RunConfig = namedtuple('RunConfig', (
    'rank_tol', 'ppt_tol', 'seed', 'witness_budget', 'format'))

DEFAULTS = RunConfig(kernels.RANK_TOL, states.PPT_TOL, 0, DEFAULT_BUDGET,
                     'json')

# key -> (validator class, converter)
FIELDS = OrderedDict([
    ('rank_tol', (IsValidTolerance, float)),
    ('ppt_tol', (IsValidTolerance, float)),
    ('seed', (IsValidSeed, int)),
    ('witness_budget', (IsValidBudget, int)),
    ('format', (IsValidFormat, str)),
])


class LoadConfig(object):
    """Callable object that builds a RunConfig from defaults, config files
    and command-line overrides, later sources winning.

    :param parse: callable returning a ConfigParser, a ``Parse`` by default
    :param log: an instance of 'logger'
    """

    UNKNOWN_KEY = "Ignoring unknown key '{key}' in the [{section}] config "\
                  "section"

    def __init__(self, parse=None, log=None):
        self._parse = parse or Parse(log=log)
        self._log = log

    def __call__(self, config_files=None, search=True, overrides=None):
        overlay = dict((key, str(value)) for key, value in
                       (overrides or {}).items() if value is not None)
        parser = self._parse(config_files, {SECTION: overlay}, search)
        values = section(parser)
        for key in values:
            if key not in FIELDS and self._log:
                self._log.warning(self.UNKNOWN_KEY.format(key=key,
                                                          section=SECTION))
        sections = {SECTION: values}

        out = DEFAULTS._asdict()
        for key, (validator, convert) in FIELDS.items():
            if key in values:
                validator.load(sections, self._log)(SECTION, key)
                out[key] = convert(values[key])
        return RunConfig(**out)


def load_config(config_files=None, search=True, overrides=None, log=None):
    return LoadConfig(log=log)(config_files, search, overrides)
