#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_gnormlib.py
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
test_gnormlib
----------------------------------
Tests for the core G-norm operations.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from gnormlib import (gnorm_eval,
                      induced_norm,
                      derived_gmetric,
                      dg_metric,
                      reverse_gap,
                      limit_gap,
                      gball_contains,
                      convergence_residual,
                      triple_convergence_residual,
                      cauchy_residual,
                      make_sum_space,
                      make_grid_space,
                      SequenceWindow,
                      InvalidVector,
                      InvalidWindow)
from gnormlib.gnormlib import tolerance

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

coordinates = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
plane_vectors = st.lists(coordinates, min_size=2, max_size=2)


def picard_orbit(index):
    return [2.0 - 2.0 ** (1 - index)]


class TestEvaluation(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        Builds the Euclidean sum plane, the absolute value line and the default grid space.
        """
        self.plane = make_sum_space(2, 2)
        self.line = make_sum_space(1, 1)
        self.grid = make_grid_space(101)

    def tearDown(self):
        """
        Test tear down

        Nothing to release.
        """
        pass

    def test_gnorm_eval(self):
        self.assertEqual(gnorm_eval(self.plane, [3, 4], [0, 0], [0, 0]), 5.0)
        self.assertEqual(gnorm_eval(self.plane, [0, 0], [0, 0], [0, 0]), 0.0)

    def test_creation_is_logged(self):
        with self.assertLogs('gnormlib.GNormSpace', level='DEBUG'):
            make_sum_space(3, 1)
        with self.assertLogs('gnormlib.GMetric', level='DEBUG'):
            _ = make_sum_space(2, 2).gmetric

    def test_gnorm_eval_on_grid(self):
        f = self.grid.sample_function(lambda t: t)
        g = self.grid.sample_function(lambda t: 1 - t)
        self.assertAlmostEqual(gnorm_eval(self.grid, f, g, self.grid.zero), 1.0, places=12)

    def test_rejects_dimension_mismatch(self):
        with self.assertRaises(InvalidVector):
            gnorm_eval(self.plane, [1, 2, 3], [0, 0], [0, 0])

    def test_rejects_non_finite_and_empty(self):
        with self.assertRaises(InvalidVector):
            gnorm_eval(self.plane, [math.nan, 0], [0, 0], [0, 0])
        with self.assertRaises(InvalidVector):
            induced_norm(self.plane, [math.inf, 0])
        with self.assertRaises(InvalidVector):
            induced_norm(self.line, [])

    def test_induced_norm(self):
        self.assertEqual(induced_norm(self.plane, [3, 4]), 5.0)
        self.assertEqual(induced_norm(self.plane, [0, 0]), 0.0)
        self.assertEqual(induced_norm(self.line, [-2]), 2.0)

    def test_derived_gmetric(self):
        self.assertEqual(derived_gmetric(self.line, [1], [2], [4]), 6.0)
        self.assertEqual(derived_gmetric(self.line, [5], [5], [5]), 0.0)
        self.assertEqual(derived_gmetric(self.line, [0], [1], [1]), 2.0)

    def test_dg_metric(self):
        self.assertEqual(dg_metric(self.line, [1], [3]), 8.0)
        self.assertEqual(dg_metric(self.line, [3], [3]), 0.0)
        self.assertEqual(dg_metric(self.plane, [0, 0], [3, 4]), 20.0)

    def test_reverse_gap(self):
        self.assertEqual(reverse_gap(self.line, [1], [2], [3], [1], [2], [3]), 0.0)
        self.assertEqual(reverse_gap(self.line, [1], [0], [0], [0], [0], [0]), 0.0)
        self.assertEqual(reverse_gap(self.line, [1], [2], [3], [3], [2], [1]), 4.0)

    def test_limit_gap(self):
        self.assertEqual(limit_gap(self.line, [2], [2]), 0.0)
        self.assertEqual(limit_gap(self.line, [3], [1]), 4.0)

    def test_gball_contains(self):
        self.assertTrue(gball_contains(self.line, [0], 3, [1]))
        self.assertFalse(gball_contains(self.line, [0], 2, [1]))

    @settings(max_examples=200, deadline=None)
    @given(plane_vectors, plane_vectors, plane_vectors)
    def test_permutation_invariance(self, x, y, z):
        value = gnorm_eval(self.plane, x, y, z)
        for order in ((x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)):
            self.assertEqual(gnorm_eval(self.plane, *order), value)

    @settings(max_examples=200, deadline=None)
    @given(plane_vectors, plane_vectors, plane_vectors,
           st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
    def test_homogeneity(self, x, y, z, alpha):
        scaled = gnorm_eval(self.plane, *(np.asarray(v) * alpha for v in (x, y, z)))
        expected = abs(alpha) * gnorm_eval(self.plane, x, y, z)
        self.assertLessEqual(abs(scaled - expected), 1e-12 * max(1.0, expected))

    @settings(max_examples=200, deadline=None)
    @given(plane_vectors, plane_vectors, plane_vectors, plane_vectors, plane_vectors, plane_vectors)
    def test_reverse_gap_non_negative(self, x, y, z, u, v, w):
        gap = reverse_gap(self.plane, x, y, z, u, v, w)
        self.assertGreaterEqual(gap, -tolerance(gnorm_eval(self.plane, x, y, z), gnorm_eval(self.plane, u, v, w)))


class TestSequences(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        The orbit x_n = 2 - 2^(1 - n) of x -> x / 2 + 1 from 0 on the absolute value line.
        """
        self.line = make_sum_space(1, 1)

    def tearDown(self):
        """
        Test tear down

        Nothing to release.
        """
        pass

    def window(self, *indices):
        return SequenceWindow([picard_orbit(index) for index in indices], start_index=indices[0])

    def test_convergence_residual(self):
        self.assertEqual(convergence_residual(self.line, self.window(3), [2]), 0.75)
        self.assertEqual(convergence_residual(self.line, self.window(5), [2]), 0.1875)

    def test_constant_sequence(self):
        window = SequenceWindow([[1.5]] * 4)
        self.assertEqual(convergence_residual(self.line, window, [1.5]), 0.0)
        self.assertEqual(cauchy_residual(self.line, window, 'exact'), 0.0)
        self.assertEqual(cauchy_residual(self.line, window, 'pairwise_bound'), 0.0)

    def test_triple_residual_dominates_single(self):
        window = self.window(3, 4, 5, 6)
        single = convergence_residual(self.line, window, [2])
        triple = triple_convergence_residual(self.line, window, [2])
        self.assertLessEqual(single, triple)
        self.assertEqual(triple, 0.75)

    def test_cauchy_residual_exact(self):
        self.assertEqual(cauchy_residual(self.line, self.window(3, 4, 5), 'exact'), 0.375)

    def test_pairwise_bound_dominates_exact(self):
        window = self.window(*range(1, 10))
        self.assertGreaterEqual(cauchy_residual(self.line, window, 'pairwise_bound'),
                                cauchy_residual(self.line, window, 'exact'))

    def test_default_mode_switches_on_window_size(self):
        short = self.window(*range(1, 11))
        self.assertEqual(cauchy_residual(self.line, short), cauchy_residual(self.line, short, 'exact'))
        long = self.window(*range(1, 41))
        self.assertEqual(cauchy_residual(self.line, long), cauchy_residual(self.line, long, 'pairwise_bound'))

    def test_small_window_rejected(self):
        with self.assertRaises(InvalidWindow):
            cauchy_residual(self.line, self.window(3))
        with self.assertRaises(InvalidWindow):
            cauchy_residual(self.line, self.window(3, 4), 'approximate')

    def test_window_dimension_checked(self):
        with self.assertRaises(InvalidVector):
            convergence_residual(self.line, SequenceWindow([[1.0, 2.0]]), [2])


if __name__ == '__main__':
    unittest.main()
