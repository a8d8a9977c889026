#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: configuration.py
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
configuration module.

Logging setup and the numeric defaults shared by all gnormlib modules.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""

import logging

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


LOGGER_BASENAME = '''gnormlib'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

# tau = BASE_TOLERANCE * max(1, largest operand magnitude)
BASE_TOLERANCE = 1e-9
HOMOGENEITY_RTOL = 1e-12

DEFAULT_GRID_SIZE = 101
DEFAULT_SEED = 0
DEFAULT_SAMPLE_SCALE = 1.0

EXACT_CAUCHY_WINDOW_LIMIT = 32

CONTRACTION_ESTIMATE_SAMPLES = 10_000
CONTRACTION_INFLATION = 1.05
COMMUTATIVITY_SAMPLES = 1_000

SINGULAR_PIVOT_RATIO = 1e-12

SHRINK_ROUNDS = 60
G2_SCALES = (1e-6, 1.0, 1e6)
TRIAL_CHUNK_SIZE = 4096

CONTINUITY_TERMS = 48
CONTINUITY_CHECK_INDEX = 40

BALL_SAMPLE_ATTEMPT_FACTOR = 200
BALL_SAMPLE_MIN_ATTEMPTS = 10_000

CORRUPTION_OFFSET = 0.5

DEFAULT_CLI_SAMPLES = 10_000
CLI_COMMANDS = ('check-axioms', 'check-gmetric', 'solve', 'estimate-k', 'ball-sample', 'jungck', 'expansive')
OUTPUT_FORMATS = ('json', 'csv')
GMETRIC_SOURCES = ('derived', 'rho', 'corrupted')

GNORM_AXIOMS = ('N1', 'N2', 'N3', 'N4', 'N5')
GMETRIC_AXIOMS = ('G1', 'G2', 'G3', 'G4', 'G5')
CONTINUITY_AXIOMS = ('CONT_ADD', 'CONT_SCALAR', 'CONT_NORM')
AXIOM_IDS = GNORM_AXIOMS + GMETRIC_AXIOMS + ('REV_INEQ',) + CONTINUITY_AXIOMS + ('METRIC_DG', 'BOUNDED_CONT')

TRACE_CSV_HEADER = ('n', 'residual', 'apriori_bound')


class LoggerMixin:  # pylint: disable=too-few-public-methods
    """Logger."""

    @property
    def logger(self):
        """Exposes the logger to be used by objects using the Mixin.

        Returns:
            logger (logger): The properly named logger.

        """
        return logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')
