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

from undistill.validate.base import BaseValidate


class IsValidTolerance(BaseValidate):

    MSG = "In the config section '{section_name}' the '{key}' of '{val}' "\
          "is not a valid tolerance.  The value of '{key}' should be a "\
          "number strictly between 0 and 1"

    KEY = 'rank_tol'

    def accept(self, text):
        return 0 < float(text) < 1


class IsValidBudget(BaseValidate):

    MSG = "In the config section '{section_name}' the '{key}' of '{val}' "\
          "is not a valid trial budget.  The value of '{key}' should be an "\
          "integer of 0 or more"

    KEY = 'witness_budget'

    def accept(self, text):
        return int(text) >= 0


class IsValidSeed(IsValidBudget):

    # SeedSequence rejects negative entropy
    MSG = "In the config section '{section_name}' the '{key}' of '{val}' "\
          "is not a valid seed.  The value of '{key}' should be an integer "\
          "of 0 or more"

    KEY = 'seed'


class IsValidFormat(BaseValidate):

    MSG = "In the section '{section_name}', the '{key}' of: '{val}' is not "\
          "valid.  Please choose from the following: {formats}"

    FORMATS = ('json', 'csv', 'pretty')
    KEY = 'format'

    def accept(self, text):
        return text in self.FORMATS

    def details(self):
        return {'formats': repr(self.FORMATS)}
