#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: gnormlibexceptions.py
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
Custom exception code for gnormlib.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class GNormInputError(Exception):
    """The input provided to a gnormlib call is malformed."""


class InvalidVector(GNormInputError):
    """The vector is empty, has non finite entries or does not match the dimension of the space."""


class InvalidSpaceSpec(GNormInputError):
    """The space specification is incomplete or has out of range values."""


class InvalidWindow(GNormInputError):
    """The sequence window does not hold enough points."""


class InvalidConfiguration(GNormInputError):
    """The run configuration does not parse against the schema."""

    def __init__(self, field, message):
        super().__init__(f'{field}: {message}')
        self.field = field


class OutputNotWritable(GNormInputError):
    """The output path cannot be written to."""


class UnknownAxiom(GNormInputError):
    """The axiom identifier is not one the verification engine knows about."""


class InvalidContractionConstant(GNormInputError):
    """The contraction constant is not in [0, 1)."""


class InvalidExpansionConstant(GNormInputError):
    """The expansion constant is not greater than 1."""


class InvalidRelativeConstant(GNormInputError):
    """The relative contraction constant of a mapping pair is not in (0, 1)."""


class NotInvertible(GNormInputError):
    """The affine mapping has a singular matrix."""


class UnsupportedMapping(GNormInputError):
    """The mapping offers no way to compute the inverse or preimage the procedure needs."""


class PreconditionFailed(GNormInputError):
    """A point or coefficient handed to a probe violates its precondition."""


class PointOutsideBall(PreconditionFailed):
    """The point is required to be inside the ball but it is not."""


class InvalidCoefficients(PreconditionFailed):
    """The combination coefficients do not satisfy |alpha| + |beta| <= 1."""


class DegenerateSample(Exception):
    """Every sampled triple had a vanishing denominator so no ratio could be estimated."""


class RangeInclusionViolation(Exception):
    """The preimage oracle failed, so the range of T is not contained in the range of S."""
