#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: verify.py
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
Property based verification of the G-norm and G-metric axioms, the propositions built on them and counterexample
search with shrinking.

Trials are drawn in chunks, chunk i using the generator seeded with seed ^ i, and reduced with max only, so a report
depends on nothing but (target, axiom, number of samples, seed).

Every violation is expressed relative to max(1, magnitude of the operands) so an axiom passes when its worst
violation does not exceed BASE_TOLERANCE.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
from collections import namedtuple

import numpy as np

from .gnormlib import GNormSpace, all_permutations
from .gnormlibexceptions import UnknownAxiom, DegenerateSample, PreconditionFailed
from .resources import LOGGER, AxiomReport, to_float_list
from .resources.configuration import (BASE_TOLERANCE,
                                      AXIOM_IDS,
                                      GNORM_AXIOMS,
                                      GMETRIC_AXIOMS,
                                      CONTINUITY_AXIOMS,
                                      G2_SCALES,
                                      HOMOGENEITY_RTOL,
                                      SHRINK_ROUNDS,
                                      TRIAL_CHUNK_SIZE,
                                      CONTINUITY_TERMS,
                                      CONTINUITY_CHECK_INDEX,
                                      DEFAULT_SAMPLE_SCALE)

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

Axiom = namedtuple('Axiom', ['axiom_id', 'shapes', 'violation', 'structure'])
BoundedContext = namedtuple('BoundedContext', ['space_x', 'space_y', 'mapping', 'delta', 'epsilon'])


def _relative(lhs, rhs):
    return (lhs - rhs) / np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))


def _spread(values, base):
    return np.abs(values - base) / np.maximum(1.0, np.abs(base))


def _batch_tolerance(*arrays):
    magnitude = np.max(np.abs(np.concatenate(arrays, axis=-1)), axis=-1)
    return BASE_TOLERANCE * np.maximum(1.0, magnitude)


def _positivity(value, x, y):
    # distinct points further apart than 10 tau need a value above tau, closer ones a positive value
    separation = np.max(np.abs(x - y), axis=-1)
    tau = _batch_tolerance(x, y)
    floor = np.where(separation > 10 * tau, tau, 0.0)
    return np.where((separation > 0) & ~(value > floor), 1.0, 0.0)


def _chunks(n_samples, seed):
    for index, offset in enumerate(range(0, n_samples, TRIAL_CHUNK_SIZE)):
        yield offset, min(TRIAL_CHUNK_SIZE, n_samples - offset), np.random.default_rng(seed ^ index)


# Structured cases, written over the leading rows of the first chunk.

def _generic_structure(arrays):
    vectors = [array for array in arrays if array.shape[1] == arrays[0].shape[1]]
    count = len(vectors)
    if vectors[0].shape[0] < 8:
        return
    for vector in vectors:
        vector[0] = 0.0
        vector[1] = vectors[0][1]
        vector[5] *= 1e-7
    if count > 1:
        vectors[1][2] = -vectors[0][2]
    for position, vector in enumerate(vectors[1:], start=1):
        vector[3] = (position + 1) * (-1) ** position * vectors[0][3]
    for position, vector in enumerate(vectors):
        vector[4] = 0.0
        if position < 2:
            vector[4][0] = 1.0


def _homogeneity_structure(arrays):
    _generic_structure(arrays[:3])
    alpha = arrays[3]
    fixed = np.array([0.0, 1.0, -1.0, 1e-6, -1e6, 1e6])
    count = min(len(fixed), alpha.shape[0])
    alpha[:count, 0] = fixed[:count]


def _separation_structure(arrays):
    x, y, a = arrays[0], arrays[1], arrays[3]
    _generic_structure(arrays)
    if x.shape[0] >= 8:
        x[7] = 0.0
        y[7] = 1.0
        arrays[2][7] = 1.0
        a[7] = 0.5


# Violation functions, one per axiom, evaluated on batches.

def _n1(space, x, y, z):
    value = space.evaluate(x, y, z)
    magnitude = np.max(np.abs(np.concatenate([x, y, z], axis=-1)), axis=-1)
    violation = -value
    violation = np.where(magnitude == 0.0, np.maximum(violation, value), violation)
    return np.where(magnitude > 10 * BASE_TOLERANCE, np.maximum(violation, 2 * BASE_TOLERANCE - value), violation)


def _n2(space, x, y, z):
    base = space.evaluate(x, y, z)
    differs = np.any([space.evaluate(*order) != base for order in all_permutations(x, y, z)], axis=0)
    return np.where(differs, 1.0, 0.0)


def _n3(space, x, y, z, alpha):
    lhs = space.evaluate(alpha * x, alpha * y, alpha * z)
    rhs = np.abs(alpha[..., 0]) * space.evaluate(x, y, z)
    return np.abs(_relative(lhs, rhs)) * (BASE_TOLERANCE / HOMOGENEITY_RTOL)


def _n4(space, x, y, z, x_prime, y_prime, z_prime):  # pylint: disable=too-many-arguments
    lhs = space.evaluate(x + x_prime, y + y_prime, z + z_prime)
    return _relative(lhs, space.evaluate(x, y, z) + space.evaluate(x_prime, y_prime, z_prime))


def _n5(space, x, y, z):
    return _relative(space.evaluate(x + y, np.zeros_like(x), z), space.evaluate(x, y, z))


def _reverse(space, x, y, z, u, v, w):  # pylint: disable=too-many-arguments
    lhs = np.abs(space.evaluate(x, y, z) - space.evaluate(u, v, w))
    return _relative(lhs, space.evaluate(x - u, y - v, z - w))


def _dg(space, x, y):
    return space.derived(x, y, y) + space.derived(x, x, y)


def _metric_dg(space, x, y, z):
    d_xy = _dg(space, x, y)
    symmetry = _spread(_dg(space, y, x), d_xy)
    identity = _dg(space, x, x)
    triangle = _relative(_dg(space, x, z), d_xy + _dg(space, y, z))
    positivity = _positivity(d_xy, x, y)
    return np.max([symmetry, identity, triangle, positivity], axis=0)


def _g1(metric, x):
    return metric.evaluate(x, x, x)


def _g2(metric, x, y):
    return _positivity(metric.evaluate(x, x, y), x, y)


def _g3(metric, x, y, z):
    return _relative(metric.evaluate(x, x, y), metric.evaluate(x, y, z))


def _g4(metric, x, y, z):
    base = metric.evaluate(x, y, z)
    return np.max([_spread(metric.evaluate(*order), base) for order in all_permutations(x, y, z)], axis=0)


def _g5(metric, x, y, z, a):
    return _relative(metric.evaluate(x, y, z), metric.evaluate(x, a, a) + metric.evaluate(a, y, z))


def _steps():
    return 2.0 ** -np.arange(CONTINUITY_TERMS)


def _sequence_verdict(residuals, envelopes, monotone):
    """Combines the per term residuals and envelopes, both of shape (terms, rows), into row violations."""
    scale = np.maximum(1.0, envelopes)
    domination = np.max((residuals - envelopes) / scale, axis=0)
    decay = residuals[CONTINUITY_CHECK_INDEX] / np.maximum(1.0, np.maximum(residuals[0], envelopes[0]))
    violation = np.maximum(domination, decay)
    if monotone is not None:
        steps = np.diff(monotone, axis=0) / np.maximum(1.0, monotone[:-1])
        violation = np.maximum(violation, np.max(steps, axis=0))
    return violation


def _conv(space, difference):
    return space.evaluate(difference, difference, difference)


def _continuity_add(space, x, y, d, e):
    residuals, envelopes = [], []
    for step in _steps():
        x_n, y_n = x + step * d, y + step * e
        residuals.append(_conv(space, (x_n + y_n) - (x + y)))
        envelopes.append(_conv(space, x_n - x) + _conv(space, y_n - y))
    residuals = np.array(residuals)
    return _sequence_verdict(residuals, np.array(envelopes), residuals)


def _continuity_scalar(space, x, d, lam, dlam):
    residuals, envelopes = [], []
    for step in _steps():
        lam_n, x_n = lam + step * dlam, x + step * d
        residuals.append(_conv(space, lam_n * x_n - lam * x))
        envelopes.append(np.abs(lam_n[..., 0]) * _conv(space, x_n - x) +
                         np.abs(lam_n - lam)[..., 0] * _conv(space, x))
    return _sequence_verdict(np.array(residuals), np.array(envelopes), None)


def _continuity_norm(space, x, y, z, d, e, f):  # pylint: disable=too-many-arguments
    limit = space.evaluate(x, y, z)
    residuals, envelopes = [], []
    for step in _steps():
        x_n, y_n, z_n = x + step * d, y + step * e, z + step * f
        residuals.append(np.abs(space.evaluate(x_n, y_n, z_n) - limit))
        envelopes.append(space.evaluate(x_n - x, y_n - y, z_n - z))
    envelopes = np.array(envelopes)
    return _sequence_verdict(np.array(residuals), envelopes, envelopes)


def _bounded(context, x, y_direction, z_direction, fraction):
    space_x, space_y, mapping = context.space_x, context.space_y, context.mapping
    spread = space_x.evaluate(y_direction - x, x - z_direction, z_direction - x)
    usable = spread > BASE_TOLERANCE
    shrink = np.where(usable, np.abs(fraction[..., 0]) % 1.0 * context.delta / np.where(usable, spread, 1.0), 0.0)
    y = x + shrink[..., None] * (y_direction - x)
    z = x + shrink[..., None] * (z_direction - x)
    image_x, image_y, image_z = (mapping.apply_batch(point) for point in (x, y, z))
    image = space_y.evaluate(image_y - image_x, image_x - image_z, image_z - image_x)
    return (image - context.epsilon) / max(1.0, context.epsilon)


def _vector_shapes(count):
    return ('dim',) * count


AXIOMS = {
    'N1': Axiom('N1', _vector_shapes(3), _n1, _generic_structure),
    'N2': Axiom('N2', _vector_shapes(3), _n2, _generic_structure),
    'N3': Axiom('N3', _vector_shapes(3) + ('scalar',), _n3, _homogeneity_structure),
    'N4': Axiom('N4', _vector_shapes(6), _n4, _generic_structure),
    'N5': Axiom('N5', _vector_shapes(3), _n5, _generic_structure),
    'G1': Axiom('G1', _vector_shapes(1), _g1, None),
    'G2': Axiom('G2', _vector_shapes(2), _g2, None),
    'G3': Axiom('G3', _vector_shapes(3), _g3, _generic_structure),
    'G4': Axiom('G4', _vector_shapes(3), _g4, _generic_structure),
    'G5': Axiom('G5', _vector_shapes(4), _g5, _separation_structure),
    'REV_INEQ': Axiom('REV_INEQ', _vector_shapes(6), _reverse, _generic_structure),
    'METRIC_DG': Axiom('METRIC_DG', _vector_shapes(3), _metric_dg, _generic_structure),
    'CONT_ADD': Axiom('CONT_ADD', _vector_shapes(4), _continuity_add, _generic_structure),
    'CONT_SCALAR': Axiom('CONT_SCALAR', _vector_shapes(2) + ('scalar', 'scalar'), _continuity_scalar, None),
    'CONT_NORM': Axiom('CONT_NORM', _vector_shapes(6), _continuity_norm, _generic_structure),
    'BOUNDED_CONT': Axiom('BOUNDED_CONT', _vector_shapes(3) + ('scalar',), _bounded, None),
}


def _draw(axiom, rng, size, dim, scale, structured):
    arrays = []
    for shape in axiom.shapes:
        width = dim if shape == 'dim' else 1
        arrays.append(rng.normal(0.0, scale, size=(size, width)))
    if axiom.axiom_id == 'N3':
        magnitudes = 10.0 ** rng.uniform(-6.0, 6.0, size=size)
        signs = rng.choice([-1.0, 1.0], size=size)
        heavy = rng.random(size) < 0.5
        arrays[3][heavy, 0] = (signs * magnitudes)[heavy]
    if axiom.axiom_id == 'G2':
        scales = np.resize(np.array(G2_SCALES), size)[:, None]
        arrays[0] *= scales
        arrays[1] = arrays[0] + scales * arrays[1]
    if axiom.axiom_id == 'BOUNDED_CONT':
        arrays[3] = rng.random(size=(size, 1))
    if structured and axiom.structure is not None:
        axiom.structure(arrays)
    return arrays


def _resolve(target, axiom_id):
    if axiom_id not in AXIOMS:
        raise UnknownAxiom(f'Unknown axiom "{axiom_id}", expected one of {AXIOM_IDS}.')
    if axiom_id in GMETRIC_AXIOMS:
        return target.gmetric if isinstance(target, GNormSpace) else target
    if axiom_id == 'BOUNDED_CONT':
        if not isinstance(target, BoundedContext):
            raise UnknownAxiom('BOUNDED_CONT is checked through check_bounded_continuity.')
        return target
    if not isinstance(target, GNormSpace):
        raise UnknownAxiom(f'Axiom "{axiom_id}" needs a G-normed space, got {target!r}.')
    return target


def _dimension(target):
    return target.space_x.dim if isinstance(target, BoundedContext) else target.dim


def _violation_of(axiom, target, sample):
    return float(axiom.violation(target, *(np.asarray(part, dtype=float)[None, :] for part in sample))[0])


def shrink(target, axiom_id, sample):
    """Shrinks a counterexample coordinate by coordinate towards zero while the violation persists.

    Each round tries, for every non zero coordinate, first zeroing it and then halving it, keeping a change only if
    the violation still exceeds BASE_TOLERANCE.

    Args:
        target (GNormSpace|GMetric): The object the axiom is checked on.
        axiom_id (str): The axiom.
        sample (list): The violating arguments, each a flat array.

    Returns:
        sample (list): The shrunk arguments.

    """
    target = _resolve(target, axiom_id)
    axiom = AXIOMS[axiom_id]
    current = [np.array(part, dtype=float) for part in sample]
    for round_ in range(SHRINK_ROUNDS):
        changed = False
        for part_index, part in enumerate(current):
            for coordinate in range(part.size):
                value = current[part_index][coordinate]
                if value == 0.0:
                    continue
                for replacement in (0.0, value / 2.0):
                    candidate = [entry.copy() for entry in current]
                    candidate[part_index][coordinate] = replacement
                    if _violation_of(axiom, target, candidate) > BASE_TOLERANCE:
                        current = candidate
                        changed = True
                        break
        if not changed:
            LOGGER.debug('Shrinking of %s counterexample settled after %s rounds', axiom_id, round_)
            break
    return current


def _search(target, axiom_id, n_samples, seed, scale):
    if n_samples < 1:
        raise PreconditionFailed(f'At least one sample is needed, got {n_samples}.')
    axiom = AXIOMS[axiom_id]
    dim = _dimension(target)
    worst, worst_sample = -np.inf, None
    for offset, size, rng in _chunks(n_samples, seed):
        arrays = _draw(axiom, rng, size, dim, scale, structured=offset == 0)
        violations = axiom.violation(target, *arrays)
        index = int(np.argmax(violations))
        if violations[index] > worst:
            worst = float(violations[index])
            worst_sample = [array[index].copy() for array in arrays]
    return worst, worst_sample


def _report(target, axiom_id, n_samples, seed, scale=DEFAULT_SAMPLE_SCALE):
    target = _resolve(target, axiom_id)
    worst, worst_sample = _search(target, axiom_id, n_samples, seed, scale)
    passed = worst <= BASE_TOLERANCE
    counterexample = None
    if not passed:
        counterexample = [to_float_list(part) for part in shrink(target, axiom_id, worst_sample)]
        LOGGER.info('Axiom %s failed with worst violation %s', axiom_id, worst)
    else:
        LOGGER.debug('Axiom %s passed on %s samples', axiom_id, n_samples)
    return AxiomReport(axiom_id=axiom_id,
                       samples=n_samples,
                       passed=passed,
                       worst_violation=worst,
                       seed=seed,
                       counterexample=counterexample)


def check_axiom(target, axiom_id, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks a single axiom by sampling.

    Args:
        target (GNormSpace|GMetric): The space (or G-metric for G1 to G5).
        axiom_id (str): One of the known axiom identifiers.
        n_samples (int): The number of sampled trials.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        report (AxiomReport): The verdict.

    """
    return _report(target, axiom_id, n_samples, seed, scale)


def check_gnorm_axioms(space, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks N1 to N5 on a candidate G-norm.

    Args:
        space (GNormSpace): The space.
        n_samples (int): Sampled triples (sextuples for N4) per axiom.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        reports (list): One AxiomReport per axiom, failures carry a shrunk counterexample.

    """
    return [_report(space, axiom_id, n_samples, seed, scale) for axiom_id in GNORM_AXIOMS]


def check_gmetric(metric, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks G1 to G5 directly on a G-metric evaluator."""
    return [_report(metric, axiom_id, n_samples, seed, scale) for axiom_id in GMETRIC_AXIOMS]


def check_derived_gmetric(space, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks G1 to G5 on the G-metric derived from the G-norm of a space."""
    return check_gmetric(space.gmetric, n_samples, seed, scale)


def check_reverse_inequality(space, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks | ||x, y, z|| - ||u, v, w|| | <= ||x - u, y - v, z - w|| on sampled sextuples."""
    return _report(space, 'REV_INEQ', n_samples, seed, scale)


def check_metric_dg(space, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Checks symmetry, identity, positivity and the triangle inequality of d_G."""
    return _report(space, 'METRIC_DG', n_samples, seed, scale)


def check_continuity(space, n_sequences, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Probes continuity of addition, scalar multiplication and the G-norm along geometric sequences.

    Sequences x_n = x + 2^-n d are built for sampled x and directions d. For every term the image residual must be
    dominated by the envelope the triangle and reverse inequalities give, the residual of sums and the envelope of
    the G-norm must not grow, and at term 40 the residual must be below tolerance. This is a probe, not a proof.

    Args:
        space (GNormSpace): The space.
        n_sequences (int): Number of sampled sequences per map.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        reports (list): AxiomReports for CONT_ADD, CONT_SCALAR and CONT_NORM.

    """
    return [_report(space, axiom_id, n_sequences, seed, scale) for axiom_id in CONTINUITY_AXIOMS]


def counterexample_search(target, axiom_id, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):
    """Searches for a violation of an axiom and shrinks it.

    Args:
        target (GNormSpace|GMetric): The object to falsify.
        axiom_id (str): The axiom.
        n_samples (int): The number of sampled trials.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        counterexample (list|None): The shrunk violating arguments as lists of floats, None if none was found.

    """
    report = _report(target, axiom_id, n_samples, seed, scale)
    return report.counterexample


def violation(target, axiom_id, sample):
    """Re-evaluates the relative violation of an axiom at given arguments, positive beyond tolerance means broken."""
    target = _resolve(target, axiom_id)
    return _violation_of(AXIOMS[axiom_id], target, sample)


def sampled_ratio(numerator, denominator, dim, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):  # pylint: disable=too-many-arguments
    """The largest sampled ratio numerator(x, y, z) / denominator(x, y, z).

    Args:
        numerator (callable): Batched function of three arrays of shape (n, dim).
        denominator (callable): Batched function of three arrays of shape (n, dim).
        dim (int): The dimension of the sampled vectors.
        n_samples (int): The number of sampled triples.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        ratio (float): The sampled maximum, a lower bound of the supremum.

    Raises:
        DegenerateSample: if every denominator was below tolerance.

    """
    if n_samples < 1:
        raise PreconditionFailed(f'At least one sample is needed, got {n_samples}.')
    best, usable = -np.inf, 0
    for _, size, rng in _chunks(n_samples, seed):
        x, y, z = (rng.normal(0.0, scale, size=(size, dim)) for _ in range(3))
        below = denominator(x, y, z)
        keep = below >= BASE_TOLERANCE
        usable += int(np.count_nonzero(keep))
        if np.any(keep):
            best = max(best, float(np.max(numerator(x[keep], y[keep], z[keep]) / below[keep])))
    if not usable:
        raise DegenerateSample('Every sampled triple had a denominator below tolerance.')
    return best


def boundedness_estimate(space_x, space_y, mapping, n_samples, seed=0):
    """Estimates the best constant K with ||F x, F y, F z||_Y <= K ||x, y, z||_X for a linear map F.

    Returns:
        constant (float): The sampled maximum ratio, a lower bound of the best K.

    """
    def numerator(x, y, z):
        return space_y.evaluate(mapping.apply_batch(x), mapping.apply_batch(y), mapping.apply_batch(z))

    return sampled_ratio(numerator, space_x.evaluate, space_x.dim, n_samples, seed)


def continuity_delta(constant, epsilon):
    """The delta = epsilon / K witnessing continuity of a bounded linear map with bound K."""
    if not constant > 0 or not epsilon > 0:
        raise PreconditionFailed(f'Both the bound and epsilon must be positive, got {constant} and {epsilon}.')
    return epsilon / constant


def check_bounded_continuity(space_x, space_y, mapping, constant, n_samples, seed=0, epsilon=1e-3):  # pylint: disable=too-many-arguments
    """Checks that a map bounded by K is continuous with delta = epsilon / K at sampled points.

    For sampled x, y, z with ||y - x, x - z, z - x|| < delta the image ||F y - F x, F x - F z, F z - F x|| must stay
    below epsilon.

    Returns:
        report (AxiomReport): The BOUNDED_CONT verdict.

    """
    context = BoundedContext(space_x, space_y, mapping, continuity_delta(constant, epsilon), epsilon)
    return _report(context, 'BOUNDED_CONT', n_samples, seed)


def commutativity_residual(space, first, second, n_samples, seed=0, scale=DEFAULT_SAMPLE_SCALE):  # pylint: disable=too-many-arguments
    """The largest sampled G(T S x, S T x, S T x) of a mapping pair, zero for commuting maps.

    Args:
        space (GNormSpace): The space.
        first (Mapping): T.
        second (Mapping): S.
        n_samples (int): The number of sampled points.
        seed (int): The base seed.
        scale (float): Standard deviation of the sampled coordinates.

    Returns:
        residual (float): The sampled maximum.

    """
    worst = 0.0
    for _, size, rng in _chunks(n_samples, seed):
        points = rng.normal(0.0, scale, size=(size, space.dim))
        first_then_second = second.apply_batch(first.apply_batch(points))
        second_then_first = first.apply_batch(second.apply_batch(points))
        values = space.derived(second_then_first, first_then_second, first_then_second)
        worst = max(worst, float(np.max(values)))
    return worst


def reports_to_dicts(reports):
    """JSON ready representation of a list of reports."""
    return [report.to_dict() for report in reports]


def report_to_json(reports):
    """Serializes reports deterministically, same inputs give byte identical output."""
    return json.dumps(reports_to_dicts(reports), sort_keys=True, indent=2)
