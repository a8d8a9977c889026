#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: topology.py
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
Ball geometry and convexity probes of G-normed spaces.

Ball membership is always measured with ||x_0 - y, y - e, e - x_0||, other argument orders found in the literature
coincide with it by permutation invariance.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import numpy as np

from .gnormlib import tolerance
from .gnormlibexceptions import PointOutsideBall, InvalidCoefficients, PreconditionFailed
from .resources import LOGGER, Ball, BallSample, ClosureVerdict
from .resources.configuration import BALL_SAMPLE_ATTEMPT_FACTOR, BALL_SAMPLE_MIN_ATTEMPTS, TRIAL_CHUNK_SIZE

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

INSIDE_CLOSED_BALL = 'inside_closed_ball'
SEPARATED = 'separated'


def _checked_ball(space, ball):
    space.vectors(ball.center, ball.anchor)
    return ball


def ball_values(space, ball, points):
    """The membership values ||x_0 - y, y - e, e - x_0|| of a batch of points.

    Args:
        space (GNormSpace): The space.
        ball (Ball): The ball.
        points (numpy.ndarray): Array of shape (..., dim).

    Returns:
        values (numpy.ndarray): Array of shape (...).

    """
    center, anchor = ball.center, ball.anchor
    return space.evaluate(center - points, points - anchor, anchor - center)


def ball_members(space, ball, points):
    """Vectorized membership of a batch of points, strict for open balls."""
    values = ball_values(space, ball, points)
    return values <= ball.radius if ball.closed else values < ball.radius


def ball_contains(space, ball, y):
    """Whether y lies in the ball.

    Open balls use the strict comparison with no tolerance, closed balls the non strict one.

    Args:
        space (GNormSpace): The space.
        ball (Ball): The ball.
        y (array like): The point.

    Returns:
        result (bool): True if y is a member.

    """
    _checked_ball(space, ball)
    return bool(ball_members(space, ball, space.vector(y)))


def witness_radius(space, ball, z):
    """A radius r_1 such that B_e(z, r_1) lies inside the open ball B_e(x_0, r).

    Args:
        space (GNormSpace): The space.
        ball (Ball): An open ball.
        z (array like): A member of the ball.

    Returns:
        radius (float): r_1 = r - ||x_0 - z, 0, z - x_0||, always positive.

    Raises:
        PointOutsideBall: if z is not a member of the open ball.

    """
    z = space.vector(z)
    open_ball = Ball(center=ball.center, anchor=ball.anchor, radius=ball.radius)
    if not ball_contains(space, open_ball, z):
        raise PointOutsideBall('The witness radius is only defined for members of the open ball.')
    radius = ball.radius - float(space.evaluate(ball.center - z, space.zero, z - ball.center))
    LOGGER.debug('Witness radius of %s inside ball of radius %s is %s', z, ball.radius, radius)
    return radius


def scaling_check(space, anchor, radius, y):
    """Checks B_e(0, r) = r B_e'(0, 1) with e' = e / r at one point.

    Returns:
        result (bool): Whether y in B_e(0, r) agrees with y / r in B_e'(0, 1).

    """
    anchor, y = space.vectors(anchor, y)
    zero = space.zero
    scaled_ball = Ball(center=zero, anchor=anchor, radius=radius)
    unit_ball = Ball(center=zero, anchor=anchor / radius, radius=1.0)
    return ball_contains(space, scaled_ball, y) == ball_contains(space, unit_ball, y / radius)


def _origin_ball(space, radius, closed=False):
    zero = space.zero
    return Ball(center=zero, anchor=zero, radius=radius, closed=closed)


def _require_interior(space, ball, point, name):
    value = float(ball_values(space, ball, point))
    margin = tolerance(value)
    inside = value <= ball.radius - margin if ball.closed else value < ball.radius - margin
    if not inside:
        raise PointOutsideBall(f'{name} with membership value {value} is not an interior member of the ball '
                               f'of radius {ball.radius}.')


def convex_combination_probe(space, radius, x, y, alpha, beta, closed=False):  # pylint: disable=too-many-arguments
    """Checks that alpha x + beta y stays in B_0(0, r) (or B_0[0, r]) for members x, y.

    Args:
        space (GNormSpace): The space.
        radius (float): The radius r.
        x (array like): A member of the ball, membership value ||x, -x, 0|| below r.
        y (array like): A member of the ball.
        alpha (float): First coefficient.
        beta (float): Second coefficient, |alpha| + |beta| <= 1.
        closed (bool): Probe the closed ball instead.

    Returns:
        result (bool): Whether the combination is a member.

    Raises:
        PointOutsideBall: if x or y is not an interior member.
        InvalidCoefficients: if |alpha| + |beta| > 1.

    """
    x, y = space.vectors(x, y)
    ball = _origin_ball(space, radius, closed)
    if abs(alpha) + abs(beta) > 1.0:
        raise InvalidCoefficients(f'|alpha| + |beta| = {abs(alpha) + abs(beta)} exceeds 1.')
    _require_interior(space, ball, x, 'x')
    _require_interior(space, ball, y, 'y')
    return bool(ball_members(space, ball, alpha * x + beta * y))


def convex_probe(space, radius, x, y, alpha, closed=False):  # pylint: disable=too-many-arguments
    """Checks plain convexity, alpha x + (1 - alpha) y in B_0(0, r) for alpha in (0, 1)."""
    if not 0.0 < alpha < 1.0:
        raise InvalidCoefficients(f'alpha must lie in (0, 1) for a convex combination, got {alpha}.')
    return convex_combination_probe(space, radius, x, y, alpha, 1.0 - alpha, closed)


def closure_convexity_probe(space, radius, x, y, alpha, beta, n_terms=40):  # pylint: disable=too-many-arguments
    """Checks that the closure of B_0(0, r) stays absolutely convex along approximating sequences.

    Builds x_n = (1 - 2^-n) x and y_n = (1 - 2^-n) y inside the open ball from members x, y of the closed ball and
    verifies that every alpha x_n + beta y_n is a member of the open ball and that the combinations converge to
    alpha x + beta y in the derived G-metric.

    Returns:
        result (bool): True when both hold for all terms.

    """
    x, y = space.vectors(x, y)
    if abs(alpha) + abs(beta) > 1.0:
        raise InvalidCoefficients(f'|alpha| + |beta| = {abs(alpha) + abs(beta)} exceeds 1.')
    closed_ball = _origin_ball(space, radius, closed=True)
    for name, point in (('x', x), ('y', y)):
        if not ball_contains(space, closed_ball, point):
            raise PointOutsideBall(f'{name} is not a member of the closed ball of radius {radius}.')
    open_ball = _origin_ball(space, radius)
    weights = 1.0 - 2.0 ** -np.arange(1, n_terms + 1)
    x_n = weights[:, None] * x[None, :]
    y_n = weights[:, None] * y[None, :]
    combinations = alpha * x_n + beta * y_n
    members = ball_members(space, open_ball, combinations)
    limit = alpha * x + beta * y
    distances = space.derived(combinations, limit, limit)
    margin = tolerance(distances[0])
    converging = np.all(np.diff(distances) <= margin) and distances[-1] <= margin
    return bool(np.all(members) and converging)


def ball_sample(space, ball, n, seed=0):
    """Members of a ball found by rejection sampling from the box centered at (x_0 + e) / 2 with half width r.

    Args:
        space (GNormSpace): The space.
        ball (Ball): The ball.
        n (int): The number of members wanted, at least 1.
        seed (int): The seed of the random generator.

    Returns:
        sample (BallSample): Up to n members and the number of candidates drawn up to the last accepted one.

    Raises:
        PreconditionFailed: if n is below 1.

    """
    _checked_ball(space, ball)
    if n < 1:
        raise PreconditionFailed(f'The number of requested samples must be at least 1, got {n}.')
    rng = np.random.default_rng(seed)
    middle = (ball.center + ball.anchor) / 2.0
    max_attempts = max(BALL_SAMPLE_MIN_ATTEMPTS, n * BALL_SAMPLE_ATTEMPT_FACTOR)
    accepted = []
    attempts = 0
    while len(accepted) < n and attempts < max_attempts:
        size = min(TRIAL_CHUNK_SIZE, max_attempts - attempts)
        candidates = middle + rng.uniform(-ball.radius, ball.radius, size=(size, space.dim))
        hits = np.flatnonzero(ball_members(space, ball, candidates))
        needed = n - len(accepted)
        if len(hits) >= needed:
            # attempts stop at the candidate giving the n-th member
            attempts += int(hits[needed - 1]) + 1
            accepted.extend(candidates[hits[:needed]])
            break
        attempts += size
        accepted.extend(candidates[hits])
    if not accepted:
        LOGGER.warning('No member of the ball found in %s attempts, the ball may be empty.', attempts)
    else:
        LOGGER.debug('Accepted %s of %s candidates', len(accepted), attempts)
    return BallSample(points=list(accepted), attempts=attempts, seed=seed)


def closure_probe(space, ball, y, n_samples=1000, seed=0):
    """Decides whether y lies in the closed ball B_e[a, r], which contains the closure of B_e(a, r).

    Outside the closed ball the separation radius eps = r_1 - r with r_1 = ||y - a, a - e, e - y|| is returned and
    a sample of B_y(y, eps) is checked to miss the open ball.

    Args:
        space (GNormSpace): The space.
        ball (Ball): The open ball B_e(a, r).
        y (array like): The point.
        n_samples (int): The number of neighbours of y to sample.
        seed (int): The seed of the random generator.

    Returns:
        verdict (ClosureVerdict): inside_closed_ball or separated with the separation radius.

    """
    y = space.vector(y)
    _checked_ball(space, ball)
    value = float(ball_values(space, ball, y))
    if value <= ball.radius:
        return ClosureVerdict(verdict=INSIDE_CLOSED_BALL, value=value)
    separation = value - ball.radius
    neighbourhood = Ball(center=y, anchor=y, radius=separation)
    sample = ball_sample(space, neighbourhood, n_samples, seed)
    open_ball = Ball(center=ball.center, anchor=ball.anchor, radius=ball.radius)
    intrusions = 0
    if sample.points:
        intrusions = int(np.count_nonzero(ball_members(space, open_ball, np.stack(sample.points))))
    if intrusions:
        LOGGER.error('%s sampled neighbours of %s entered the open ball.', intrusions, y)
    return ClosureVerdict(verdict=SEPARATED,
                          value=value,
                          separation_radius=separation,
                          sampled=len(sample.points),
                          intrusions=intrusions)
