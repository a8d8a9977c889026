#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: gnormlib.py
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
Main code for gnormlib.

Holds the G-norm evaluator interface, the G-metric derived from it, the d_G metric, the induced single argument
norm and the residuals used to diagnose convergent and Cauchy sequences.

Evaluators are vectorized: they accept arrays of shape (..., dim) for each of the three arguments and return an
array of shape (...). The public operations validate single vectors and return python floats.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from functools import wraps
from itertools import permutations

import numpy as np

from .gnormlibexceptions import InvalidVector, InvalidWindow
from .resources import LOGGER_BASENAME, LoggerMixin
from .resources.configuration import BASE_TOLERANCE, EXACT_CAUCHY_WINDOW_LIMIT

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

CAUCHY_MODES = ('exact', 'pairwise_bound')


def tolerance(*magnitudes):
    """The comparison tolerance tau for operands of the given magnitudes.

    Args:
        *magnitudes (float): Norm values involved in an inequality.

    Returns:
        tau (float): BASE_TOLERANCE * max(1, largest magnitude).

    """
    return BASE_TOLERANCE * max([1.0] + [abs(float(magnitude)) for magnitude in magnitudes])


class GNormSpace(LoggerMixin):
    """Models a real vector space equipped with a G-norm ||x, y, z||."""

    def __init__(self, kind, dim, evaluator, p=None, grid_size=None):  # pylint: disable=too-many-arguments
        self.kind = kind
        self.dim = dim
        self.p = p  # pylint: disable=invalid-name
        self.grid_size = grid_size
        self._evaluator = evaluator
        self._gmetric = None
        self.logger.debug('Created %r', self)

    def __repr__(self):
        return f'{self.__class__.__name__}(kind={self.kind!r}, dim={self.dim}, p={self.p}, grid_size={self.grid_size})'

    @property
    def zero(self):
        """The zero vector of the space."""
        return np.zeros(self.dim)

    @property
    def grid(self):
        """The uniform nodes t_i of [0, 1] for the grid space, None for the others."""
        if self.grid_size is None:
            return None
        return np.linspace(0.0, 1.0, self.grid_size)

    def sample_function(self, function):
        """Samples a function of t on the grid nodes.

        Args:
            function (callable): A vectorized function of t in [0, 1].

        Returns:
            vector (numpy.ndarray): The values f(t_i).

        Raises:
            InvalidVector: if the space is not a grid space.

        """
        if self.grid is None:
            raise InvalidVector(f'Space of kind "{self.kind}" has no grid to sample on.')
        return self.vector(np.broadcast_to(function(self.grid), (self.grid_size,)))

    def vector(self, coords):
        """Validates coordinates against the space.

        Args:
            coords (array like): The coordinates.

        Returns:
            vector (numpy.ndarray): A float copy of the coordinates.

        Raises:
            InvalidVector: on empty input, a dimension mismatch or non finite entries.

        """
        try:
            vector = np.atleast_1d(np.array(coords, dtype=float))
        except (TypeError, ValueError):
            raise InvalidVector(f'Could not interpret {coords!r} as a real vector.') from None
        if vector.ndim != 1 or not vector.size:
            raise InvalidVector(f'Expected a non empty flat coordinate list, got shape {vector.shape}.')
        if vector.size != self.dim:
            raise InvalidVector(f'Dimension mismatch, the space has dimension {self.dim} '
                                f'but the vector has {vector.size} coordinates.')
        if not np.all(np.isfinite(vector)):
            raise InvalidVector('Vectors with NaN or infinite coordinates are rejected.')
        return vector

    def vectors(self, *coords):
        """Validates a number of vectors at once."""
        return tuple(self.vector(entry) for entry in coords)

    def evaluate(self, x, y, z):
        """Evaluates the G-norm on already validated vectors or batches of vectors.

        Args:
            x (numpy.ndarray): Array of shape (..., dim).
            y (numpy.ndarray): Array of shape (..., dim).
            z (numpy.ndarray): Array of shape (..., dim).

        Returns:
            values (numpy.ndarray): Array of shape (...) holding ||x, y, z||.

        """
        return self._evaluator(x, y, z)

    def derived(self, x, y, z):
        """Evaluates G(x, y, z) = ||x - y, y - z, z - x|| on already validated (batched) vectors."""
        return self._evaluator(x - y, y - z, z - x)

    @property
    def gmetric(self):
        """The G-metric derived from the G-norm."""
        if self._gmetric is None:
            self._gmetric = GMetric(self.dim, self.derived, name=f'derived[{self.kind}]')
        return self._gmetric


class GMetric(LoggerMixin):
    """Models a G-metric G(x, y, z) on a space of fixed dimension."""

    def __init__(self, dim, evaluator, name='gmetric'):
        self.dim = dim
        self.name = name
        self._evaluator = evaluator
        self.logger.debug('Created %r', self)

    def __repr__(self):
        return f'{self.__class__.__name__}(name={self.name!r}, dim={self.dim})'

    def evaluate(self, x, y, z):
        """Evaluates the G-metric on batches of points, see GNormSpace.evaluate."""
        return self._evaluator(x, y, z)

    def __call__(self, x, y, z):
        x, y, z = (_as_point(point, self.dim) for point in (x, y, z))
        return float(self._evaluator(x, y, z))


def _as_point(coords, dim):
    point = np.atleast_1d(np.array(coords, dtype=float))
    if point.shape != (dim,) or not np.all(np.isfinite(point)):
        raise InvalidVector(f'Expected {dim} finite coordinates, got {coords!r}.')
    return point


def validate_vectors(function):
    """Validation decorator, coerces every positional vector argument after the space."""

    @wraps(function)
    def wrap(space, *vectors):
        """Inner wrapper decorator."""
        logger = logging.getLogger(f'{LOGGER_BASENAME}.validation_decorator')
        logger.debug('Validating %s vector arguments of %s', len(vectors), function.__name__)
        return function(space, *space.vectors(*vectors))

    return wrap


@validate_vectors
def gnorm_eval(space, x, y, z):
    """Evaluates the G-norm ||x, y, z||.

    Args:
        space (GNormSpace): The space.
        x (array like): First argument.
        y (array like): Second argument.
        z (array like): Third argument.

    Returns:
        value (float): The non negative G-norm value.

    Raises:
        InvalidVector: on a dimension mismatch or non finite coordinates.

    """
    return float(space.evaluate(x, y, z))


@validate_vectors
def induced_norm(space, x):
    """The single argument norm ||x, 0, 0|| induced by the G-norm."""
    zero = space.zero
    return float(space.evaluate(x, zero, zero))


@validate_vectors
def derived_gmetric(space, x, y, z):
    """The derived G-metric G(x, y, z) = ||x - y, y - z, z - x||.

    Args:
        space (GNormSpace): The space.
        x (array like): First point.
        y (array like): Second point.
        z (array like): Third point.

    Returns:
        value (float): G(x, y, z).

    """
    return float(space.derived(x, y, z))


@validate_vectors
def dg_metric(space, x, y):
    """The ordinary metric d_G(x, y) = G(x, y, y) + G(x, x, y) whose topology matches the G-metric one."""
    return float(space.derived(x, y, y) + space.derived(x, x, y))


@validate_vectors
def reverse_gap(space, x, y, z, u, v, w):  # pylint: disable=too-many-arguments
    """Slack of the reverse triangle inequality.

    Returns ||x - u, y - v, z - w|| - | ||x, y, z|| - ||u, v, w|| |, which is >= -tau for every G-norm.

    """
    lhs = abs(float(space.evaluate(x, y, z)) - float(space.evaluate(u, v, w)))
    return float(space.evaluate(x - u, y - v, z - w)) - lhs


@validate_vectors
def limit_gap(space, x, y):
    """The quantity ||x - y, 0, y - x|| that vanishes exactly when two limits (or fixed points) coincide."""
    return float(space.evaluate(x - y, space.zero, y - x))


def gball_contains(space, center, radius, y):
    """Membership of y in the G-metric ball B_G(x_0, r) = {y : G(x_0, y, y) < r}."""
    center, y = space.vectors(center, y)
    return bool(float(space.derived(center, y, y)) < radius)


def _window_points(space, window):
    return np.stack([space.vector(point) for point in window.points])


def convergence_residual(space, window, candidate_limit):
    """The single index convergence residual of a window towards a candidate limit.

    Args:
        space (GNormSpace): The space.
        window (SequenceWindow): The points x_n inspected.
        candidate_limit (array like): The candidate limit x.

    Returns:
        residual (float): max over the window of ||x_n - x, x_n - x, x_n - x||.

    """
    points = _window_points(space, window)
    difference = points - space.vector(candidate_limit)
    return float(np.max(space.evaluate(difference, difference, difference)))


def triple_convergence_residual(space, window, candidate_limit):
    """The triple index convergence residual max over (l, m, n) of ||x_l - x, x_m - x, x_n - x||."""
    difference = _window_points(space, window) - space.vector(candidate_limit)
    worst = 0.0
    for row in difference:
        values = space.evaluate(row, difference[:, None, :], difference[None, :, :])
        worst = max(worst, float(np.max(values)))
    return worst


def cauchy_residual(space, window, mode=None):
    """The Cauchy residual of a window.

    Args:
        space (GNormSpace): The space.
        window (SequenceWindow): At least two points of the sequence.
        mode (str): "exact" for the max over all triples of ||x_l - x_m, x_m - x_n, x_n - x_l|| or
            "pairwise_bound" for the envelope max ||x_l - x_m, x_m - x_l, 0|| + max ||0, x_l - x_n, x_n - x_l||.
            Defaults to exact for windows of up to 32 points.

    Returns:
        residual (float): The residual, exact <= pairwise_bound always.

    Raises:
        InvalidWindow: for windows of less than two points or an unknown mode.

    """
    if len(window) < 2:
        raise InvalidWindow('The Cauchy residual needs a window of at least two points.')
    if mode is None:
        mode = 'exact' if len(window) <= EXACT_CAUCHY_WINDOW_LIMIT else 'pairwise_bound'
    if mode not in CAUCHY_MODES:
        raise InvalidWindow(f'Unknown Cauchy residual mode "{mode}", expected one of {CAUCHY_MODES}.')
    points = _window_points(space, window)
    if mode == 'exact':
        worst = 0.0
        for x_l in points:
            x_m = points[:, None, :]
            x_n = points[None, :, :]
            values = space.evaluate(x_l - x_m, x_m - x_n, x_n - x_l)
            worst = max(worst, float(np.max(values)))
        return worst
    differences = points[:, None, :] - points[None, :, :]
    zero = np.zeros_like(differences)
    first = float(np.max(space.evaluate(differences, -differences, zero)))
    second = float(np.max(space.evaluate(zero, differences, -differences)))
    return first + second


def all_permutations(x, y, z):
    """The six orderings of a triple."""
    return list(permutations((x, y, z)))
