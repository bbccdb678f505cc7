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

"""Rendering of reports as json, csv or pretty text, and writing them out.
"""

import csv
import io
import json
import sys

from undistill.model import codec
from undistill.sampling.experiment import EnsembleReport
from undistill.sampling.experiment import csv_rows
from undistill.validate.errors import BadInput


def _scalar(value):
    if isinstance(value, str):
        return value
    return json.dumps(value)


def _is_nested(value):
    return isinstance(value, dict) or (
            isinstance(value, list) and value
            and isinstance(value[0], dict))


def pretty_lines(value, indent=0):
    pad = '  ' * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if _is_nested(item):
                yield "{0}{1}:".format(pad, key)
                for line in pretty_lines(item, indent + 1):
                    yield line
            else:
                yield "{0}{1}: {2}".format(pad, key, _scalar(item))
    elif isinstance(value, list):
        for i, item in enumerate(value):
            yield "{0}- [{1}]".format(pad, i)
            for line in pretty_lines(item, indent + 1):
                yield line
    else:
        yield pad + _scalar(value)


def flatten(value, prefix=''):
    """``(path, leaf)`` pairs of a JSON tree.  Lists of scalars stay whole.
    """
    if isinstance(value, dict):
        for key, item in value.items():
            path = "{0}.{1}".format(prefix, key) if prefix else str(key)
            for row in flatten(item, path):
                yield row
    elif _is_nested(value):
        for i, item in enumerate(value):
            for row in flatten(item, "{0}[{1}]".format(prefix, i)):
                yield row
    else:
        yield prefix, _scalar(value)


def _csv_text(rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for row in rows:
        writer.writerow(row)
    return out.getvalue()


def render(document, fmt='json', table=None):
    """Text of ``document`` in ``fmt``.  For csv an EnsembleReport passed as
    ``table`` gives one row per sample; anything else is flattened to
    ``path,value`` rows.
    """
    if fmt == 'json':
        return codec.dumps(document) + '\n'
    data = codec.to_jsonable(document)
    if fmt == 'pretty':
        return '\n'.join(pretty_lines(data)) + '\n'
    if fmt == 'csv':
        if isinstance(table, EnsembleReport):
            return _csv_text(csv_rows(table))
        return _csv_text([('field', 'value')] + list(flatten(data)))
    raise BadInput("Unknown output format {0!r}".format(fmt))


def write(text, output=None, stream=None):
    """Write to ``output`` when given, else to ``stream`` (stdout).
    """
    if output:
        try:
            with open(output, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        except OSError as err:
            raise BadInput("Unable to write '{0}': {1}".format(output, err))
    else:
        (stream or sys.stdout).write(text)
