#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: spaces.py
#
# Copyright 2026 gnormlib maintainers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Constructors of the concrete G-normed spaces and of the reference G-metrics.

All evaluators add the three per argument contributions in ascending order so the result is bit for bit invariant
under permutation of the arguments.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import math

import numpy as np

from .gnormlib import GNormSpace, GMetric
from .gnormlibexceptions import InvalidSpaceSpec
from .resources import LOGGER, SpaceSpec
from .resources.configuration import DEFAULT_GRID_SIZE, CORRUPTION_OFFSET

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def _symmetric_sum(first, second, third):
    ordered = np.sort(np.stack(np.broadcast_arrays(first, second, third)), axis=0)
    return ordered[0] + ordered[1] + ordered[2]


def _pnorm(vectors, p):
    return np.linalg.norm(vectors, ord=p, axis=-1)


def make_sum_space(dim, p=2):
    """The space R^dim with ||x, y, z|| = ||x||_p + ||y||_p + ||z||_p.

    With p = 2 this is the Euclidean sum space whose open balls are elliptic discs.

    Args:
        dim (int): The dimension, at least 1.
        p (float): The p-norm exponent, p >= 1 or math.inf.

    Returns:
        space (GNormSpace): The space.

    Raises:
        InvalidSpaceSpec: if dim < 1 or p < 1 (subadditivity fails below 1).

    """
    spec = SpaceSpec(kind='sum_pnorm', dim=dim, p=float(p))

    def evaluator(x, y, z):
        x, y, z = np.broadcast_arrays(x, y, z)
        return _symmetric_sum(_pnorm(x, spec.p), _pnorm(y, spec.p), _pnorm(z, spec.p))

    LOGGER.debug('Creating sum space of dimension %s with p=%s', dim, p)
    return GNormSpace('sum_pnorm', spec.dim, evaluator, p=spec.p)


def make_grid_space(grid_size=DEFAULT_GRID_SIZE):
    """The grid discretization of C[0, 1] with ||f, g, h|| = max over nodes of |f(t)| + |g(t)| + |h(t)|.

    The maximum over grid nodes is a lower bound of the supremum over [0, 1].

    Args:
        grid_size (int): Number of uniform nodes including both end points, at least 2.

    Returns:
        space (GNormSpace): The space, of dimension grid_size.

    """
    spec = SpaceSpec(kind='grid_maxsum', dim=grid_size, grid_size=grid_size)

    def evaluator(f, g, h):
        pointwise = _symmetric_sum(np.abs(f), np.abs(g), np.abs(h))
        return np.max(pointwise, axis=-1)

    LOGGER.debug('Creating grid space with %s nodes', grid_size)
    return GNormSpace('grid_maxsum', spec.dim, evaluator, grid_size=spec.grid_size)


def make_max_candidate(dim):
    """The negative control (x, y, z) -> max(||x||, ||y||, ||z||).

    It satisfies the first four G-norm axioms and violates the merge inequality ||x, y, z|| >= ||x + y, 0, z||.

    """
    spec = SpaceSpec(kind='max_candidate', dim=dim)

    def evaluator(x, y, z):
        x, y, z = np.broadcast_arrays(x, y, z)
        return np.maximum(np.maximum(_pnorm(x, 2), _pnorm(y, 2)), _pnorm(z, 2))

    return GNormSpace('max_candidate', spec.dim, evaluator)


def make_space(spec):
    """Builds the space a specification describes.

    Args:
        spec (SpaceSpec): The specification.

    Returns:
        space (GNormSpace): The space.

    """
    if spec.kind == 'sum_pnorm':
        return make_sum_space(spec.dim, spec.p)
    if spec.kind == 'grid_maxsum':
        return make_grid_space(spec.grid_size)
    if spec.kind == 'max_candidate':
        return make_max_candidate(spec.dim)
    raise InvalidSpaceSpec(f'space.kind: unknown kind {spec.kind!r}')


def make_rho_oracle():
    """The G-metric rho(x, y, z) = max{|x - y|, |y - z|, |z - x|} on the real line.

    It is not derived from any G-norm and serves as an independent reference G-metric.

    """

    def evaluator(x, y, z):
        x, y, z = np.broadcast_arrays(x, y, z)
        gaps = np.stack([np.abs(x - y), np.abs(y - z), np.abs(z - x)])
        return np.max(gaps, axis=0)[..., 0]

    return GMetric(1, evaluator, name='rho')


def make_corrupted_gmetric(space, offset=CORRUPTION_OFFSET):
    """A deliberately broken G-metric max(G - offset, 0) built on the derived G-metric of a space.

    Shrinking every value by a constant breaks the repeated index inequality G(x, y, z) <= G(x, a, a) + G(a, y, z)
    whenever both right hand terms exceed the offset.

    """
    if not offset > 0 or math.isinf(offset):
        raise InvalidSpaceSpec(f'offset: must be a positive finite number, got {offset}')

    def evaluator(x, y, z):
        return np.maximum(space.derived(x, y, z) - offset, 0.0)

    return GMetric(space.dim, evaluator, name=f'corrupted[{space.kind}]')
