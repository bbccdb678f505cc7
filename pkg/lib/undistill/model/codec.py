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

"""JSON form of states, pure states, channels and reports.

Complex entries are ``[re, im]`` pairs.  A bipartite state is
``{"dims": [...], "matrix": rows}``, a tripartite pure state is
``{"dims": [d_A, d_B, d_E], "vector": entries}`` and a channel is
``{"d_in": .., "d_out": .., "choi": state}`` with an optional ``"name"``.
Floats are written with Python's shortest round-trip representation, so a
dumped double loads back to the same value.
"""

import json
from collections import OrderedDict

import numpy as np

from undistill.model.channel import ChoiChannel
from undistill.model.state import DensityMatrix
from undistill.model.state import TripartitePureState
from undistill.validate.errors import BadInput

STATE = 'state'
PURE_STATE = 'pure_state'
CHANNEL = 'channel'


def pair(z):
    z = complex(z)
    return [float(z.real), float(z.imag)]


def encode_vector(v):
    return [pair(z) for z in np.asarray(v).reshape(-1)]


def encode_matrix(m):
    return [encode_vector(row) for row in np.asarray(m)]


def _entry(value, where):
    try:
        re, im = value
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise BadInput("Expected a [re, im] pair at {0}, got {1!r}".format(
                where, value))


def decode_vector(entries, name='vector'):
    if not isinstance(entries, list):
        raise BadInput("'{0}' must be a list of [re, im] pairs".format(name))
    return np.array([_entry(value, "{0}[{1}]".format(name, i))
                     for i, value in enumerate(entries)], dtype=complex)


def decode_matrix(rows, name='matrix'):
    if not isinstance(rows, list) or not rows:
        raise BadInput("'{0}' must be a non-empty list of rows".format(name))
    out = [decode_vector(row, "{0}[{1}]".format(name, i))
           for i, row in enumerate(rows)]
    if any(len(row) != len(rows) for row in out):
        raise BadInput("'{0}' must be square, got {1} rows of lengths "
                       "{2}".format(name, len(rows),
                                    sorted(set(len(row) for row in out))))
    return np.array(out, dtype=complex)


def _dims(obj, key='dims'):
    dims = obj.get(key)
    if (not isinstance(dims, list) or not dims
            or not all(isinstance(d, int) and not isinstance(d, bool)
                       for d in dims)):
        raise BadInput("'{0}' must be a non-empty list of integers, got "
                       "{1!r}".format(key, dims))
    return dims


def _dimension(obj, key):
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise BadInput("'{0}' must be an integer, got {1!r}".format(key,
                                                                    value))
    return value


def state_to_dict(rho):
    return OrderedDict([('dims', list(rho.dims)),
                        ('matrix', encode_matrix(rho.matrix))])


def pure_state_to_dict(psi):
    return OrderedDict([('dims', list(psi.dims)),
                        ('vector', encode_vector(psi.amplitudes))])


def channel_to_dict(channel):
    out = OrderedDict()
    if channel.name:
        out['name'] = channel.name
    out['d_in'] = channel.d_in
    out['d_out'] = channel.d_out
    out['choi'] = state_to_dict(channel.choi)
    return out


def kind(obj):
    """Which of STATE, PURE_STATE or CHANNEL a decoded JSON object holds.
    """
    if not isinstance(obj, dict):
        raise BadInput("Expected a JSON object, got {0}".format(
                type(obj).__name__))
    if 'choi' in obj:
        return CHANNEL
    if 'vector' in obj:
        return PURE_STATE
    if 'matrix' in obj:
        return STATE
    raise BadInput("Unrecognized input: expected a 'matrix', 'vector' or "
                   "'choi' field, got fields {0}".format(sorted(obj)))


def from_dict(obj):
    """DensityMatrix, TripartitePureState or ChoiChannel from a decoded JSON
    object.  Invariant violations raise the validators' errors.
    """
    found = kind(obj)
    if found == STATE:
        return DensityMatrix(decode_matrix(obj['matrix']), _dims(obj))
    if found == PURE_STATE:
        return TripartitePureState(decode_vector(obj['vector']), _dims(obj))
    choi = obj['choi']
    if kind(choi) != STATE:
        raise BadInput("'choi' must be a state object")
    d_in = _dimension(obj, 'd_in')
    d_out = _dimension(obj, 'd_out')
    name = obj.get('name')
    if name is not None and not isinstance(name, str):
        raise BadInput("'name' must be a string, got {0!r}".format(name))
    return ChoiChannel(d_in, d_out, from_dict(choi), name=name)


def loads(text):
    try:
        obj = json.loads(text)
    except ValueError as err:
        raise BadInput("Malformed JSON: {0}".format(err))
    return from_dict(obj)


def load(path):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as err:
        raise BadInput("Unable to read '{0}': {1}".format(path, err))
    return loads(text)


def to_jsonable(obj):
    """Plain JSON types for reports: namedtuples become objects in field
    order, arrays and complex numbers become ``[re, im]`` pairs.
    """
    if isinstance(obj, DensityMatrix):
        return state_to_dict(obj)
    if isinstance(obj, TripartitePureState):
        return pure_state_to_dict(obj)
    if isinstance(obj, ChoiChannel):
        return channel_to_dict(obj)
    if isinstance(obj, tuple) and hasattr(obj, '_fields'):
        return OrderedDict((field, to_jsonable(value))
                           for field, value in zip(obj._fields, obj))
    if isinstance(obj, dict):
        return OrderedDict((str(key), to_jsonable(value))
                           for key, value in obj.items())
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return encode_matrix(obj) if obj.ndim == 2 else encode_vector(obj)
        return obj.tolist()
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, complex):
        return pair(obj)
    if obj is None or isinstance(obj, (int, float, str)):
        return obj
    if isinstance(obj, np.random.SeedSequence):
        return obj.entropy
    raise TypeError("Cannot serialize {0!r}".format(obj))


def dumps(obj):
    return json.dumps(to_jsonable(obj), indent=2)
