#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
gnormlib module.

Import all parts from gnormlib here

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from ._version import __version__
from .gnormlibexceptions import (GNormInputError,
                                 InvalidVector,
                                 InvalidSpaceSpec,
                                 InvalidWindow,
                                 InvalidConfiguration,
                                 OutputNotWritable,
                                 UnknownAxiom,
                                 InvalidContractionConstant,
                                 InvalidExpansionConstant,
                                 InvalidRelativeConstant,
                                 NotInvertible,
                                 UnsupportedMapping,
                                 PreconditionFailed,
                                 PointOutsideBall,
                                 InvalidCoefficients,
                                 DegenerateSample,
                                 RangeInclusionViolation)
from .gnormlib import (GNormSpace,
                       GMetric,
                       gnorm_eval,
                       induced_norm,
                       derived_gmetric,
                       dg_metric,
                       reverse_gap,
                       limit_gap,
                       gball_contains,
                       convergence_residual,
                       triple_convergence_residual,
                       cauchy_residual)
from .spaces import (make_sum_space,
                     make_grid_space,
                     make_max_candidate,
                     make_space,
                     make_rho_oracle,
                     make_corrupted_gmetric)
from .topology import (ball_contains,
                       witness_radius,
                       scaling_check,
                       convex_combination_probe,
                       convex_probe,
                       closure_convexity_probe,
                       ball_sample,
                       closure_probe)
from .solvers import (Mapping,
                      affine_inverse,
                      picard_solve,
                      contraction_estimate,
                      relative_contraction_estimate,
                      expansive_solve,
                      jungck_solve,
                      fixed_point_residual)
from .verify import (check_axiom,
                     check_gnorm_axioms,
                     check_gmetric,
                     check_derived_gmetric,
                     check_reverse_inequality,
                     check_metric_dg,
                     check_continuity,
                     check_bounded_continuity,
                     continuity_delta,
                     boundedness_estimate,
                     commutativity_residual,
                     counterexample_search,
                     report_to_json)
from .resources import (SpaceSpec,
                        SequenceWindow,
                        Ball,
                        BallSample,
                        ClosureVerdict,
                        SolveConfig,
                        IterationTrace,
                        SolveReport,
                        AxiomReport)

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is to 'use' the module(s), so lint doesn't complain
assert __version__
assert GNormInputError
assert InvalidVector
assert InvalidSpaceSpec
assert InvalidWindow
assert InvalidConfiguration
assert OutputNotWritable
assert UnknownAxiom
assert InvalidContractionConstant
assert InvalidExpansionConstant
assert InvalidRelativeConstant
assert NotInvertible
assert UnsupportedMapping
assert PreconditionFailed
assert PointOutsideBall
assert InvalidCoefficients
assert DegenerateSample
assert RangeInclusionViolation

assert GNormSpace
assert GMetric
assert gnorm_eval
assert induced_norm
assert derived_gmetric
assert dg_metric
assert reverse_gap
assert limit_gap
assert gball_contains
assert convergence_residual
assert triple_convergence_residual
assert cauchy_residual

assert make_sum_space
assert make_grid_space
assert make_max_candidate
assert make_space
assert make_rho_oracle
assert make_corrupted_gmetric

assert ball_contains
assert witness_radius
assert scaling_check
assert convex_combination_probe
assert convex_probe
assert closure_convexity_probe
assert ball_sample
assert closure_probe

assert Mapping
assert affine_inverse
assert picard_solve
assert contraction_estimate
assert relative_contraction_estimate
assert expansive_solve
assert jungck_solve
assert fixed_point_residual

assert check_axiom
assert check_gnorm_axioms
assert check_gmetric
assert check_derived_gmetric
assert check_reverse_inequality
assert check_metric_dg
assert check_continuity
assert check_bounded_continuity
assert continuity_delta
assert boundedness_estimate
assert commutativity_residual
assert counterexample_search
assert report_to_json

assert SpaceSpec
assert SequenceWindow
assert Ball
assert BallSample
assert ClosureVerdict
assert SolveConfig
assert IterationTrace
assert SolveReport
assert AxiomReport
