#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: resources.py
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
resources module.

Models the records passed around by the gnormlib modules: space specifications, sequence windows, balls,
solver configuration, traces and the reports.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from gnormlib.gnormlibexceptions import (InvalidSpaceSpec,
                                         InvalidConfiguration,
                                         InvalidWindow,
                                         PreconditionFailed)
from .configuration import DEFAULT_GRID_SIZE

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

SPACE_KINDS = ('sum_pnorm', 'grid_maxsum', 'max_candidate')


def to_float_list(vector):
    """Turns an array like into a plain list of python floats for serialization."""
    return [float(value) for value in np.asarray(vector, dtype=float).ravel()]


def _encode_p(p):
    if p is None:
        return None
    return 'inf' if math.isinf(p) else float(p)


def _decode_p(value):
    if value is None:
        return None
    if isinstance(value, str):
        if value.lower() not in ('inf', 'infinity'):
            raise InvalidSpaceSpec(f'space.p: unsupported value "{value}"')
        return math.inf
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidSpaceSpec(f'space.p: expected a number or "inf", got {value!r}')
    return float(value)


def _positive_int(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidSpaceSpec(f'{name}: expected an integer >= {minimum}, got {value!r}')
    return value


@dataclass(frozen=True)
class SpaceSpec:
    """Configuration record of one of the built in G-normed spaces."""

    kind: str
    dim: int
    p: Optional[float] = None
    grid_size: Optional[int] = None

    def __post_init__(self):
        if self.kind not in SPACE_KINDS:
            raise InvalidSpaceSpec(f'space.kind: expected one of {SPACE_KINDS}, got {self.kind!r}')
        _positive_int(self.dim, 'space.dim')
        if self.kind == 'sum_pnorm':
            if self.p is None:
                raise InvalidSpaceSpec('space.p: required for the sum_pnorm space')
            if math.isnan(self.p) or self.p < 1:
                raise InvalidSpaceSpec(f'space.p: must be >= 1 for subadditivity to hold, got {self.p}')
        if self.kind == 'grid_maxsum':
            _positive_int(self.grid_size, 'space.grid_size', minimum=2)
            if self.dim != self.grid_size:
                raise InvalidSpaceSpec('space.dim: must equal space.grid_size for the grid space')

    @classmethod
    def from_dict(cls, data):
        """Parses a space specification out of its JSON representation.

        Args:
            data (dict): The "space" section of a run configuration.

        Returns:
            spec (SpaceSpec): The validated specification.

        Raises:
            InvalidSpaceSpec: naming the offending field.

        """
        if not isinstance(data, dict):
            raise InvalidSpaceSpec(f'space: expected an object, got {type(data).__name__}')
        kind = data.get('kind')
        grid_size = data.get('grid_size')
        if kind == 'grid_maxsum' and grid_size is None:
            grid_size = DEFAULT_GRID_SIZE
        dim = data.get('dim', grid_size if kind == 'grid_maxsum' else None)
        if dim is None:
            raise InvalidSpaceSpec('space.dim: required')
        return cls(kind=kind, dim=dim, p=_decode_p(data.get('p')), grid_size=grid_size)

    def to_dict(self):
        """The JSON representation of the specification."""
        data = {'kind': self.kind, 'dim': self.dim}
        if self.p is not None:
            data['p'] = _encode_p(self.p)
        if self.grid_size is not None:
            data['grid_size'] = self.grid_size
        return data


@dataclass
class SequenceWindow:
    """A finite window <x_n>, n = start_index, start_index + 1, ... of a sequence."""

    points: list
    start_index: int = 0

    def __post_init__(self):
        if not len(self.points):  # pylint: disable=len-as-condition
            raise InvalidWindow('A sequence window needs at least one point.')
        if self.start_index < 0:
            raise InvalidWindow(f'Start index must be non negative, got {self.start_index}.')

    def __len__(self):
        return len(self.points)

    @property
    def indices(self):
        """The sequence indices covered by the window."""
        return list(range(self.start_index, self.start_index + len(self.points)))


@dataclass
class Ball:
    """The ball B_e(x_0, r) (open) or B_e[x_0, r] (closed) with center x_0 and anchor e."""

    center: np.ndarray
    anchor: np.ndarray
    radius: float
    closed: bool = False

    def __post_init__(self):
        self.center = np.asarray(self.center, dtype=float)
        self.anchor = np.asarray(self.anchor, dtype=float)
        if not self.radius > 0 or not math.isfinite(self.radius):
            raise PreconditionFailed(f'Ball radius must be a positive finite number, got {self.radius}.')
        if self.center.shape != self.anchor.shape:
            raise PreconditionFailed('Ball center and anchor must share the same dimension.')

    @classmethod
    def from_dict(cls, data):
        """Parses a ball out of its JSON representation."""
        try:
            return cls(center=data['center'],
                       anchor=data.get('anchor', data['center']),
                       radius=float(data['radius']),
                       closed=bool(data.get('closed', False)))
        except KeyError as missing:
            raise InvalidConfiguration(f'ball.{missing.args[0]}', 'required') from None
        except (TypeError, ValueError) as error:
            raise InvalidConfiguration('ball', str(error)) from None

    def to_dict(self):
        """The JSON representation of the ball."""
        return {'center': to_float_list(self.center),
                'anchor': to_float_list(self.anchor),
                'radius': float(self.radius),
                'closed': self.closed}


@dataclass
class BallSample:
    """Members of a ball found by rejection sampling."""

    points: List[np.ndarray]
    attempts: int
    seed: int

    @property
    def acceptance_rate(self):
        """Accepted over attempted candidates."""
        return len(self.points) / self.attempts if self.attempts else 0.0

    @property
    def is_empty(self):
        """Nothing was accepted."""
        return not self.points


@dataclass
class ClosureVerdict:
    """Outcome of probing whether a point lies in the closed ball containing the closure of an open ball."""

    verdict: str
    value: float
    separation_radius: Optional[float] = None
    sampled: int = 0
    intrusions: int = 0

    @property
    def certified(self):
        """No sampled neighbour of the point entered the open ball."""
        return self.intrusions == 0


@dataclass
class SolveConfig:
    """Initial point and stopping parameters of the fixed point solvers."""

    tol: float
    max_iter: int
    x0: np.ndarray

    def __post_init__(self):
        if isinstance(self.tol, bool) or not isinstance(self.tol, (int, float)) or not self.tol > 0:
            raise InvalidConfiguration('solver.tol', f'must be a positive number, got {self.tol!r}')
        if isinstance(self.max_iter, bool) or not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise InvalidConfiguration('solver.max_iter', f'must be an integer >= 1, got {self.max_iter!r}')
        try:
            self.x0 = np.atleast_1d(np.asarray(self.x0, dtype=float))
        except (TypeError, ValueError):
            raise InvalidConfiguration('solver.x0', f'must be a list of numbers, got {self.x0!r}') from None

    @classmethod
    def from_dict(cls, data):
        """Parses the "solver" section of a run configuration."""
        if not isinstance(data, dict):
            raise InvalidConfiguration('solver', 'expected an object')
        for name in ('tol', 'max_iter', 'x0'):
            if name not in data:
                raise InvalidConfiguration(f'solver.{name}', 'required')
        return cls(tol=data['tol'], max_iter=data['max_iter'], x0=data['x0'])

    def to_dict(self):
        """The JSON representation of the solver configuration."""
        return {'tol': self.tol, 'max_iter': self.max_iter, 'x0': to_float_list(self.x0)}


@dataclass
class IterationTrace:
    """Per step iterates, G-residuals and a-priori bounds of a solver run."""

    iterates: List[np.ndarray] = field(default_factory=list)
    step_residuals: List[float] = field(default_factory=list)
    apriori_bounds: List[float] = field(default_factory=list)

    def record(self, iterate, residual, bound):
        """Appends one step keeping the lists aligned."""
        self.iterates.append(iterate)
        self.step_residuals.append(float(residual))
        self.apriori_bounds.append(float(bound))

    def __len__(self):
        return len(self.step_residuals)

    @property
    def rows(self):
        """(n, residual, bound) rows of the trace."""
        return list(zip(range(len(self)), self.step_residuals, self.apriori_bounds))

    def to_dict(self):
        """The JSON representation of the trace."""
        return {'iterates': [to_float_list(iterate) for iterate in self.iterates],
                'step_residuals': list(self.step_residuals),
                'apriori_bounds': list(self.apriori_bounds)}


@dataclass
class SolveReport:  # pylint: disable=too-many-instance-attributes
    """Outcome of a fixed point solver run."""

    method: str
    fixed_point: np.ndarray
    iterations: int
    final_residual: float
    converged: bool
    bound_respected: bool
    trace: IterationTrace
    constant: float
    constant_estimated: bool = False
    affine_extension: bool = False
    residuals: dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    seed: Optional[int] = None

    def to_dict(self):
        """The JSON representation of the report."""
        return {'method': self.method,
                'fixed_point': to_float_list(self.fixed_point),
                'iterations': self.iterations,
                'final_residual': float(self.final_residual),
                'converged': self.converged,
                'bound_respected': self.bound_respected,
                'constant': float(self.constant),
                'constant_estimated': self.constant_estimated,
                'affine_extension': self.affine_extension,
                'residuals': {name: float(value) for name, value in self.residuals.items()},
                'notes': list(self.notes),
                'seed': self.seed,
                'trace': self.trace.to_dict()}


@dataclass
class AxiomReport:
    """Verdict of a sampled verification of one axiom or proposition."""

    axiom_id: str
    samples: int
    passed: bool
    worst_violation: float
    seed: int
    counterexample: Optional[List[List[float]]] = None

    def to_dict(self):
        """The JSON representation of the report."""
        return {'axiom_id': self.axiom_id,
                'samples': self.samples,
                'passed': self.passed,
                'worst_violation': float(self.worst_violation),
                'counterexample': self.counterexample,
                'seed': self.seed}
