#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: solvers.py
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
Fixed point solvers of G-normed spaces.

Three procedures are offered: Picard iteration of a contraction, iteration of the inverse of an expansive mapping
and the Jungck scheme y_n = T x_n = S x_{n+1} for a commuting pair. Every run records the step residuals
G(x_n, x_{n+1}, x_{n+1}) next to the a-priori bounds k^n / (1 - k) ||x_0 - x_1, x_1 - x_0, 0||.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import warnings

import numpy as np
from scipy.linalg import lu_factor, lu_solve, LinAlgWarning

from .gnormlib import tolerance
from .gnormlibexceptions import (InvalidConfiguration,
                                 InvalidContractionConstant,
                                 InvalidExpansionConstant,
                                 InvalidRelativeConstant,
                                 NotInvertible,
                                 UnsupportedMapping,
                                 RangeInclusionViolation,
                                 DegenerateSample)
from .resources import LOGGER, LoggerMixin, IterationTrace, SolveReport
from .resources.configuration import (SINGULAR_PIVOT_RATIO,
                                      CONTRACTION_ESTIMATE_SAMPLES,
                                      CONTRACTION_INFLATION,
                                      COMMUTATIVITY_SAMPLES,
                                      DEFAULT_SEED)
from .verify import sampled_ratio, commutativity_residual

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

AFFINE = 'affine'
BLACKBOX = 'blackbox'


def affine_inverse(matrix, offset=None):
    """Inverts x -> A x + b by dense LU factorization with partial pivoting.

    A is declared singular when its smallest pivot is below 1e-12 times its largest row norm.

    Args:
        matrix (array like): The square matrix A.
        offset (array like): The offset b, zero when omitted.

    Returns:
        inverse (tuple): The matrix and offset of y -> A^-1 (y - b).

    Raises:
        NotInvertible: if A is singular or not finite.

    """
    matrix = np.asarray(matrix, dtype=float)
    offset = np.zeros(matrix.shape[0]) if offset is None else np.asarray(offset, dtype=float)
    scale = float(np.max(np.sum(np.abs(matrix), axis=1))) if matrix.size else 0.0
    if not scale > 0 or not np.isfinite(scale):
        raise NotInvertible(f'Matrix with largest row norm {scale} is not invertible.')
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LinAlgWarning)
        factors = lu_factor(matrix)
    smallest_pivot = float(np.min(np.abs(np.diag(factors[0]))))
    if smallest_pivot < SINGULAR_PIVOT_RATIO * scale:
        raise NotInvertible(f'Smallest pivot {smallest_pivot} is negligible against row norm {scale}.')
    inverse_matrix = lu_solve(factors, np.eye(matrix.shape[0]))
    return inverse_matrix, -inverse_matrix @ offset


class Mapping(LoggerMixin):
    """A self mapping of R^dim, either affine x -> A x + b or an arbitrary pure function."""

    def __init__(self, function, kind=BLACKBOX, known_k=None, known_q=None, inverse=None, name=None):  # pylint: disable=too-many-arguments
        self._function = function
        self.kind = kind
        self.known_k = known_k
        self.known_q = known_q
        self._inverse = inverse
        self.name = name or kind
        self.matrix = None
        self.offset = None

    def __repr__(self):
        return f'Mapping(name={self.name!r}, kind={self.kind!r})'

    @classmethod
    def affine(cls, matrix, offset=None, known_k=None, known_q=None, name=AFFINE):  # pylint: disable=too-many-arguments
        """Creates the affine mapping x -> A x + b.

        Args:
            matrix (array like): Square matrix A.
            offset (array like): Offset b, zero when omitted.
            known_k (float): Contraction constant if known.
            known_q (float): Expansion constant if known.
            name (str): Label used in logs and reports.

        Returns:
            mapping (Mapping): The mapping.

        Raises:
            InvalidConfiguration: if A is not square or b does not match it.

        """
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidConfiguration('mapping.matrix', f'must be a square matrix, got shape {matrix.shape}')
        offset = np.zeros(matrix.shape[0]) if offset is None else np.atleast_1d(np.asarray(offset, dtype=float))
        if offset.shape != (matrix.shape[0],):
            raise InvalidConfiguration('mapping.offset', f'must have length {matrix.shape[0]}, got {offset.shape}')
        if not (np.all(np.isfinite(matrix)) and np.all(np.isfinite(offset))):
            raise InvalidConfiguration('mapping', 'matrix and offset must be finite')
        mapping = cls(lambda x: matrix @ x + offset, kind=AFFINE, known_k=known_k, known_q=known_q, name=name)
        mapping.matrix, mapping.offset = matrix, offset
        return mapping

    @classmethod
    def blackbox(cls, function, inverse=None, known_k=None, known_q=None, name=BLACKBOX):  # pylint: disable=too-many-arguments
        """Wraps a pure function, optionally with an inverse (or preimage) oracle."""
        return cls(function, kind=BLACKBOX, known_k=known_k, known_q=known_q, inverse=inverse, name=name)

    @property
    def is_affine(self):
        """True for x -> A x + b."""
        return self.kind == AFFINE

    @property
    def has_offset(self):
        """True for an affine mapping with b != 0, which is not linear."""
        return self.is_affine and bool(np.any(self.offset != 0))

    @property
    def has_inverse(self):
        """Whether an inverse can be provided without solving a nonlinear problem."""
        return self.is_affine or self._inverse is not None

    def __call__(self, x):
        return np.asarray(self._function(np.asarray(x, dtype=float)), dtype=float)

    def apply_batch(self, points):
        """Applies the mapping to every row of an array of shape (n, dim)."""
        points = np.asarray(points, dtype=float)
        if self.is_affine:
            return points @ self.matrix.T + self.offset
        return np.stack([self(point) for point in points.reshape(-1, points.shape[-1])]).reshape(points.shape)

    def inverse_mapping(self):
        """The inverse mapping, from the oracle or by LU factorization of an affine mapping.

        Raises:
            NotInvertible: if an affine mapping is singular.
            UnsupportedMapping: if a black box mapping has no inverse oracle.

        """
        if not self.has_inverse:
            raise UnsupportedMapping(f'{self!r} has no inverse oracle.')
        if self._inverse is not None:
            return Mapping.blackbox(self._inverse, inverse=self._function, name=f'{self.name}^-1')
        matrix, offset = affine_inverse(self.matrix, self.offset)
        self.logger.debug('Inverted %s by LU factorization', self.name)
        return Mapping.affine(matrix, offset, name=f'{self.name}^-1')


def _step(space, mapping, x):
    return space.vector(mapping(x))


def _contraction_constant(space, mapping, seed):
    if mapping.known_k is not None:
        constant = mapping.known_k
        if isinstance(constant, bool) or not 0 <= constant < 1:
            raise InvalidContractionConstant(f'Contraction constant must lie in [0, 1), got {constant}.')
        return float(constant), False
    estimate = contraction_estimate(space, mapping, CONTRACTION_ESTIMATE_SAMPLES, seed)
    constant = estimate * CONTRACTION_INFLATION
    LOGGER.warning('No contraction constant given for %s, using sampled estimate %s inflated to %s',
                   mapping.name, estimate, constant)
    if constant >= 1:
        LOGGER.error('Estimated contraction constant %s is not below 1', constant)
        raise InvalidContractionConstant(f'Inflated sampled contraction constant {constant} is not below 1.')
    return constant, True


def _tail_respects_bounds(space, trace, final):
    iterates = np.stack(trace.iterates)
    bounds = np.array(trace.apriori_bounds)
    tails = space.derived(iterates, final, final)
    return bool(np.all(tails <= bounds + tolerance(*bounds, *tails)))


def _iterate(space, step, x0, constant, cfg):
    """Runs x_{n+1} = step(x_n) recording residuals and bounds, returns the trace and the last iterate."""
    zero = space.zero
    trace = IterationTrace()
    current = x0
    initial_gap = None
    for index in range(cfg.max_iter):
        following = step(current)
        if initial_gap is None:
            initial_gap = float(space.evaluate(current - following, following - current, zero))
        residual = float(space.derived(current, following, following))
        bound = constant ** index / (1.0 - constant) * initial_gap
        trace.record(current, residual, bound)
        current = following
        if residual <= cfg.tol or bound <= cfg.tol:
            break
    return trace, current


def picard_solve(space, mapping, cfg, seed=DEFAULT_SEED):
    """Finds the fixed point of a contraction by Picard iteration x_{n+1} = T x_n.

    Iteration stops when the step residual G(x_n, x_{n+1}, x_{n+1}) or the a-priori bound drops to the tolerance, or
    after max_iter steps.

    Args:
        space (GNormSpace): The space.
        mapping (Mapping): T, with known_k in [0, 1) or None to estimate it.
        cfg (SolveConfig): Initial point, tolerance and iteration cap.
        seed (int): Seed of the contraction estimate, used only when known_k is None.

    Returns:
        report (SolveReport): The fixed point and the trace, converged is False when max_iter ran out.

    Raises:
        InvalidContractionConstant: if the given or inflated estimated constant is not in [0, 1).
        InvalidVector: if x0 or an iterate does not fit the space.

    """
    constant, estimated = _contraction_constant(space, mapping, seed)
    x0 = space.vector(cfg.x0)
    trace, fixed_point = _iterate(space, lambda x: _step(space, mapping, x), x0, constant, cfg)
    final_residual = trace.step_residuals[-1]
    converged = final_residual <= cfg.tol
    notes = []
    if estimated:
        notes.append('contraction constant is a sampled estimate, the a-priori bound is heuristic')
    if not converged:
        LOGGER.info('Picard iteration of %s stopped after %s steps with residual %s', mapping.name, len(trace),
                    final_residual)
    return SolveReport(method='picard',
                       fixed_point=fixed_point,
                       iterations=len(trace),
                       final_residual=final_residual,
                       converged=converged,
                       bound_respected=_tail_respects_bounds(space, trace, fixed_point),
                       trace=trace,
                       constant=constant,
                       constant_estimated=estimated,
                       residuals={'T': fixed_point_residual(space, mapping, fixed_point)},
                       notes=notes,
                       seed=seed if estimated else None)


def contraction_estimate(space, mapping, n_samples=CONTRACTION_ESTIMATE_SAMPLES, seed=DEFAULT_SEED):
    """The largest sampled ratio ||Tx - Ty, Ty - Tz, Tz - Tx|| / ||x - y, y - z, z - x||.

    Args:
        space (GNormSpace): The space.
        mapping (Mapping): T.
        n_samples (int): The number of sampled triples.
        seed (int): The base seed.

    Returns:
        constant (float): A lower bound of the Lipschitz constant of T.

    Raises:
        DegenerateSample: if every sampled triple was degenerate.

    """
    def numerator(x, y, z):
        return space.derived(mapping.apply_batch(x), mapping.apply_batch(y), mapping.apply_batch(z))

    return sampled_ratio(numerator, space.derived, space.dim, n_samples, seed)


def relative_contraction_estimate(space, first, second, n_samples=CONTRACTION_ESTIMATE_SAMPLES, seed=DEFAULT_SEED):
    """The largest sampled ratio ||Tx - Ty, Ty - Tz, Tz - Tx|| / ||Sx - Sy, Sy - Sz, Sz - Sx||."""
    def numerator(x, y, z):
        return space.derived(first.apply_batch(x), first.apply_batch(y), first.apply_batch(z))

    def denominator(x, y, z):
        return space.derived(second.apply_batch(x), second.apply_batch(y), second.apply_batch(z))

    return sampled_ratio(numerator, denominator, space.dim, n_samples, seed)


def fixed_point_residual(space, mapping, u):
    """G(T u, u, u), zero exactly at fixed points of T."""
    u = space.vector(u)
    return float(space.derived(mapping(u), u, u))


def expansive_solve(space, mapping, cfg, seed=DEFAULT_SEED):
    """Finds the fixed point of an expansive mapping by Picard iteration of its inverse.

    The inverse of a mapping with ||Tx - Ty, Ty - Tz, Tz - Tx|| >= q ||x - y, y - z, z - x|| is a contraction with
    k = 1 / q. Affine mappings with a non zero offset are accepted and flagged as an extension of the linear case.

    Args:
        space (GNormSpace): The space.
        mapping (Mapping): T, affine with invertible matrix or carrying an inverse oracle, known_q > 1 optional.
        cfg (SolveConfig): Initial point, tolerance and iteration cap.
        seed (int): Seed of the contraction estimate of the inverse when known_q is None.

    Returns:
        report (SolveReport): The fixed point u, residuals of both T and its inverse.

    Raises:
        InvalidExpansionConstant: if known_q is not above 1.
        NotInvertible: if the affine matrix is singular.
        UnsupportedMapping: if a black box mapping has no inverse oracle.

    """
    expansion = mapping.known_q
    if expansion is not None and (isinstance(expansion, bool) or not expansion > 1):
        raise InvalidExpansionConstant(f'Expansion constant must exceed 1, got {expansion}.')
    inverse = mapping.inverse_mapping()
    inverse.known_k = None if expansion is None else 1.0 / expansion
    report = picard_solve(space, inverse, cfg, seed)
    report.method = 'expansive'
    report.constant = 1.0 / report.constant if report.constant > 0 else float('inf')
    report.residuals = {'T': fixed_point_residual(space, mapping, report.fixed_point),
                        'T_inverse': report.residuals['T']}
    report.affine_extension = mapping.has_offset
    if report.affine_extension:
        report.notes.append('affine mapping with non zero offset, the guarantee is stated for linear mappings')
    return report


def _preimage(space, inverse, second, value):
    try:
        point = space.vector(inverse(value))
    except Exception as error:  # pylint: disable=broad-except
        LOGGER.error('Preimage oracle failed at %s', value)
        raise RangeInclusionViolation(f'No preimage under S found for {value}: {error}') from error
    image = second(point)
    if not np.all(np.isfinite(image)):
        raise RangeInclusionViolation(f'S is not finite at the preimage of {value}.')
    gap = float(space.derived(image, value, value))
    if gap > tolerance(float(np.max(np.abs(value)))):
        LOGGER.error('Preimage of %s misses it by %s', value, gap)
        raise RangeInclusionViolation(f'S x = {image} does not reproduce T x = {value}, gap {gap}.')
    return point


def jungck_solve(space, first, second, q, cfg, seed=DEFAULT_SEED, n_samples=COMMUTATIVITY_SAMPLES):  # pylint: disable=too-many-arguments
    """Finds a common fixed point of a commuting pair by the scheme y_n = T x_n = S x_{n+1}.

    Continuity of S is assumed and never checked. Inclusion of the range of T in the range of S is only detected
    through preimage failures. Both facts are recorded in the report notes.

    Args:
        space (GNormSpace): The space.
        first (Mapping): T.
        second (Mapping): S, affine with invertible matrix or with a preimage oracle.
        q (float): Relative contraction constant in (0, 1).
        cfg (SolveConfig): Initial point, tolerance and iteration cap.
        seed (int): Seed of the commutativity and relative contraction samples.
        n_samples (int): Number of points sampled for the commutativity residual.

    Returns:
        report (SolveReport): The common fixed point u with the residuals of T, S and the commutativity residual.

    Raises:
        InvalidRelativeConstant: if q is not in (0, 1).
        UnsupportedMapping: if S has no preimage oracle.
        RangeInclusionViolation: if a preimage under S cannot be found.

    """
    if q is None or isinstance(q, bool) or not 0 < q < 1:
        raise InvalidRelativeConstant(f'Relative contraction constant must lie in (0, 1), got {q}.')
    inverse = second.inverse_mapping()
    x0 = space.vector(cfg.x0)
    y0 = _step(space, first, x0)

    def step(value):
        return _step(space, first, _preimage(space, inverse, second, value))

    trace, common = _iterate(space, step, y0, float(q), cfg)
    final_residual = trace.step_residuals[-1]
    notes = ['continuity of S is assumed, not checked',
             'T(X) within S(X) is only detected through preimage failures']
    commutativity = commutativity_residual(space, first, second, n_samples, seed)
    if commutativity > tolerance(commutativity):
        notes.append(f'T and S do not commute on sampled points, residual {commutativity!r}')
    try:
        observed = relative_contraction_estimate(space, first, second, n_samples, seed)
        if observed > q + tolerance(q):
            notes.append(f'sampled relative contraction ratio {observed!r} exceeds q')
    except DegenerateSample:
        notes.append('relative contraction ratio could not be sampled, S collapses every sampled triple')
    LOGGER.info('Jungck iteration stopped after %s steps with residual %s', len(trace), final_residual)
    return SolveReport(method='jungck',
                       fixed_point=common,
                       iterations=len(trace),
                       final_residual=final_residual,
                       converged=final_residual <= cfg.tol,
                       bound_respected=_tail_respects_bounds(space, trace, common),
                       trace=trace,
                       constant=float(q),
                       residuals={'T': fixed_point_residual(space, first, common),
                                  'S': fixed_point_residual(space, second, common),
                                  'commutativity': commutativity},
                       notes=notes,
                       seed=seed)
