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

"""Exceptions raised by undistill.

Every class narrows a builtin so callers that only know about ValueError or
ArithmeticError keep working.  ``EXIT_CODE`` is what the command line tool
returns when the error escapes a subcommand.
"""


class UndistillError(Exception):

    EXIT_CODE = 2


class NotHermitian(UndistillError, ValueError):
    pass


class NonConvergence(UndistillError, ArithmeticError):

    EXIT_CODE = 3


class BadSubsystemSpec(UndistillError, ValueError):
    pass


class NotNormalized(UndistillError, ValueError):
    pass


class NotAState(UndistillError, ValueError):
    pass


class DimensionMismatch(UndistillError, ValueError):
    pass


class NotTracePreserving(UndistillError, ValueError):
    pass


class BadParameter(UndistillError, ValueError):
    pass


class PreconditionRankNotLow(UndistillError, ValueError):
    pass


class BadSpec(UndistillError, ValueError):
    pass


class BadInput(UndistillError, ValueError):
    pass


class BadConfig(UndistillError, ValueError):
    pass
