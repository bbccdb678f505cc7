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

import json
import unittest
from collections import namedtuple

import numpy as np
from numpy.testing import assert_allclose

from undistill.model import channel as channels
from undistill.model import codec
from undistill.model import state as states
from undistill.model.channel import ChoiChannel
from undistill.model.state import DensityMatrix
from undistill.model.state import TripartitePureState
from undistill.tst.base import random_pure
from undistill.tst.base import random_state
from undistill.validate.errors import BadInput
from undistill.validate.errors import NotAState


class TestLoad(unittest.TestCase):

    def test_state(self):
        text = json.dumps({'dims': [2], 'matrix': [[[0.5, 0], [0, 0.25]],
                                                   [[0, -0.25], [0.5, 0]]]})
        rho = codec.loads(text)
        self.assertIsInstance(rho, DensityMatrix)
        self.assertEqual(rho.matrix[0, 1], 0.25j)

    def test_pure_state(self):
        text = json.dumps({'dims': [2, 1, 1],
                           'vector': [[0.6, 0], [0, 0.8]]})
        psi = codec.loads(text)
        self.assertIsInstance(psi, TripartitePureState)
        self.assertEqual(psi.amplitudes[1], 0.8j)

    def test_channel(self):
        channel = codec.loads(codec.dumps(channels.werner_holevo()))
        self.assertIsInstance(channel, ChoiChannel)
        self.assertEqual((channel.d_in, channel.d_out), (3, 3))
        self.assertEqual(channel.name, 'werner-holevo')

    def test_exact_floats(self):
        rho = random_state(2, 3, 2, 1)
        again = codec.loads(codec.dumps(rho))
        self.assertTrue(np.array_equal(again.matrix, rho.matrix))
        psi = random_pure(2, 2, 2, 1)
        again = codec.loads(codec.dumps(psi))
        self.assertTrue(np.array_equal(again.amplitudes, psi.amplitudes))

    def test_malformed(self):
        for text in ('{', '[]', '{"dims": [2]}', '{"dims": "2", "matrix": []}',
                     '{"dims": [1], "matrix": [[1]]}',
                     '{"dims": [1], "matrix": [[["a", 0]]]}',
                     '{"d_in": 1, "d_out": 1, "choi": {"vector": []}}',
                     '{"d_in": "1", "d_out": 1, '
                     '"choi": {"dims": [1, 1], "matrix": [[[1, 0]]]}}'):
            with self.assertRaises(BadInput, msg=text):
                codec.loads(text)

    def test_invalid_state(self):
        text = json.dumps({'dims': [1], 'matrix': [[[2, 0]]]})
        with self.assertRaises(NotAState):
            codec.loads(text)

    def test_missing_file(self):
        with self.assertRaises(BadInput):
            codec.load('/nonexistent/undistill/state.json')

    def test_kind(self):
        self.assertEqual(codec.kind(codec.to_jsonable(states.bell_state())),
                         codec.STATE)
        self.assertEqual(codec.kind(codec.to_jsonable(states.ghz_state())),
                         codec.PURE_STATE)
        self.assertEqual(
                codec.kind(codec.to_jsonable(channels.identity_channel(2))),
                codec.CHANNEL)


class TestToJsonable(unittest.TestCase):

    def test_namedtuple_order(self):
        Pair = namedtuple('Pair', ('b', 'a'))
        out = codec.to_jsonable(Pair(np.float64(1.5), np.int64(2)))
        self.assertEqual(list(out.items()), [('b', 1.5), ('a', 2)])
        self.assertIsInstance(out['a'], int)

    def test_arrays(self):
        self.assertEqual(codec.to_jsonable(np.array([1j, 2])),
                         [[0.0, 1.0], [2.0, 0.0]])
        self.assertEqual(codec.to_jsonable(np.array([1.0, 2.0])), [1.0, 2.0])
        self.assertEqual(codec.to_jsonable(np.bool_(True)), True)

    def test_unknown(self):
        with self.assertRaises(TypeError):
            codec.to_jsonable(object())

    def test_dumps_is_deterministic(self):
        rho = random_state(3, 3, 2, 4)
        self.assertEqual(codec.dumps(rho), codec.dumps(rho))
        assert_allclose(codec.decode_matrix(codec.encode_matrix(rho.matrix)),
                        rho.matrix, atol=0)
