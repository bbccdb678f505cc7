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

from undistill.validate.errors import BadConfig


class _BaseCheck(object):
    """Callable validator base.  A failing check formats ``MSG``, hands it
    to the injected logger and raises ``RAISE``.  With ``raise_errors`` off
    the check only logs and returns False.
    """

    LOG_TYPE = "debug"
    RAISE = ValueError
    MSG = "Validation failed"

    def __init__(self, log=None, log_type=None, raise_errors=True):
        self._log = log
        self._log_type = log_type or self.LOG_TYPE
        self._raise_errors = raise_errors

    def _process_error(self, template=None, **kwargs):
        message = (template or self.MSG).format(**kwargs)
        if self._log is not None:
            getattr(self._log, self._log_type)(message)
        if self._raise_errors:
            raise self.RAISE(message)
        return False


class ConfigValue(_BaseCheck):
    """Looks up the raw text of one key of a ``{section: {key: text}}``
    mapping.  Returns the stripped text, or None once the missing section,
    key or value has been reported.
    """

    RAISE = BadConfig
    NO_SECTION = "The config section of '{section_name}' does not exist"
    NO_KEY = "In the config section '{section_name}' the field of '{key}' "\
             "does not exist"
    NO_VALUE = "In the config section '{section_name}' the '{key}' is not "\
               "set or is empty"

    def __init__(self, sections, log=None, log_type=None, raise_errors=True):
        super(ConfigValue, self).__init__(log, log_type, raise_errors)
        self._sections = sections

    def __call__(self, section_name, key):
        values = self._sections.get(section_name)
        if values is None:
            self._process_error(self.NO_SECTION, section_name=section_name)
            return None
        if key not in values:
            self._process_error(self.NO_KEY, section_name=section_name,
                                key=key)
            return None
        text = values[key]
        text = '' if text is None else str(text).strip()
        if not text:
            self._process_error(self.NO_VALUE, section_name=section_name,
                                key=key)
            return None
        return text


class BaseValidate(_BaseCheck):
    """Validator of one config key.  Subclasses set ``KEY`` and implement
    ``accept(text)``; a ValueError or TypeError out of ``accept`` counts as
    a rejection.  ``MSG`` receives ``section_name``, ``key``, ``val`` and
    whatever ``details()`` adds.
    """

    RAISE = BadConfig
    LOG_TYPE = "critical"
    KEY = None

    def __init__(self, lookup, log=None, log_type=None, raise_errors=True):
        super(BaseValidate, self).__init__(log, log_type, raise_errors)
        self._lookup = lookup

    @classmethod
    def load(cls, sections, log=None, log_type=None, raise_errors=True):
        lookup = ConfigValue(sections, log, log_type or cls.LOG_TYPE,
                             raise_errors)
        return cls(lookup, log, log_type, raise_errors)

    def __call__(self, section_name, key=None):
        key = key or self.KEY
        text = self._lookup(section_name, key)
        if text is None:
            return False
        try:
            accepted = self.accept(text)
        except (TypeError, ValueError):
            accepted = False
        if accepted:
            return True
        return self._process_error(section_name=section_name, key=key,
                                   val=text, **self.details())

    def accept(self, text):
        raise NotImplementedError

    def details(self):
        return {}
