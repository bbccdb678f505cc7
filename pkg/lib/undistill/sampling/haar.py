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

"""Seeded Haar-random states.

Generator contract (version 1): ``numpy.random.PCG64`` seeded through
``numpy.random.SeedSequence``.  Complex Gaussians are drawn as
``(x + i y) / sqrt(2)`` with ``x`` and ``y`` from ``standard_normal``, real
parts first.  Independent streams come from ``SeedSequence.spawn``.  A
change to any of this bumps ``GENERATOR_VERSION``.
"""

import numpy as np

from undistill.model.state import TripartitePureState
from undistill.model.state import A
from undistill.model.state import B
from undistill.validate.base import _BaseCheck
from undistill.validate.errors import BadSpec

GENERATOR = 'PCG64'
GENERATOR_VERSION = 1


class HasValidDimensions(_BaseCheck):

    MSG = "Sampling dimensions must be integers of 1 or more, got "\
          "{dims!r}"
    RAISE = BadSpec

    def __call__(self, *dims):
        for d in dims:
            if isinstance(d, bool) or int(d) != d or d < 1:
                return self._process_error(dims=list(dims))
        return True


_has_valid_dimensions = HasValidDimensions()


def make_rng(seed):
    """Generator for an integer seed or a ``SeedSequence``.
    """
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(seed, count):
    """``count`` independent child seed sequences of ``seed``.
    """
    return np.random.SeedSequence(seed).spawn(count)


def complex_gaussian(rng, size):
    real = rng.standard_normal(size)
    imag = rng.standard_normal(size)
    return (real + 1j * imag) / np.sqrt(2)


def haar_vector(d, rng):
    """Uniformly random unit vector in ``C^d``.
    """
    v = complex_gaussian(rng, d)
    return v / np.linalg.norm(v)


def sample_pure(d_A, d_B, d_E, seed):
    """Haar-random pure state on ``C^d_A (x) C^d_B (x) C^d_E``.
    """
    _has_valid_dimensions(d_A, d_B, d_E)
    dims = [int(d_A), int(d_B), int(d_E)]
    rng = make_rng(seed)
    return TripartitePureState(haar_vector(int(np.prod(dims)), rng), dims)


def sample_state(d_A, d_B, d_E, seed):
    """``rho_AB`` drawn from the measure induced by tracing out an
    environment of dimension ``d_E``.
    """
    return sample_pure(d_A, d_B, d_E, seed).reduced_state([A, B])
