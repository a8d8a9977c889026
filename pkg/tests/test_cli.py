#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_cli.py
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
test_cli
----------------------------------
Tests for the gnorm command line front end.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import csv
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout
from io import StringIO

from gnormlib.cli import run, main, RunConfig, emit_trace_csv, load_config, summary_table
from gnormlib import (make_sum_space,
                      picard_solve,
                      Mapping,
                      SolveConfig,
                      InvalidConfiguration,
                      OutputNotWritable,
                      check_gnorm_axioms,
                      make_max_candidate)

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

LINE = {'kind': 'sum_pnorm', 'dim': 1, 'p': 1}
PLANE = {'kind': 'sum_pnorm', 'dim': 2, 'p': 2}


class TestRun(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        Creates a scratch directory for configurations and outputs.
        """
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        """
        Test tear down

        Removes the scratch directory.
        """
        shutil.rmtree(self.directory)

    def path(self, name):
        return os.path.join(self.directory, name)

    def write_config(self, data, name='config.json'):
        path = self.path(name)
        with open(path, 'w', encoding='utf-8') as config_file:
            if isinstance(data, str):
                config_file.write(data)
            else:
                json.dump(data, config_file)
        return path

    def run_quietly(self, *args, **kwargs):
        with redirect_stdout(StringIO()):
            return run(*args, **kwargs)

    def read_json(self, name='out.json'):
        with open(self.path(name), encoding='utf-8') as output_file:
            return json.load(output_file)

    def test_check_axioms_sum_space(self):
        config = self.write_config({'space': PLANE, 'sampling': {'n_samples': 2_000, 'seed': 0}})
        self.assertEqual(self.run_quietly(config, 'check-axioms', out=self.path('out.json')), 0)
        reports = self.read_json()
        self.assertEqual(len(reports), 5)
        self.assertTrue(all(report['passed'] for report in reports))

    def test_check_axioms_max_candidate(self):
        config = self.write_config({'command': 'check-axioms',
                                    'space': {'kind': 'max_candidate', 'dim': 1},
                                    'sampling': {'n_samples': 10_000},
                                    'output': {'path': self.path('out.json')}})
        self.assertEqual(self.run_quietly(config), 1)
        reports = {report['axiom_id']: report for report in self.read_json()}
        self.assertFalse(reports['N5']['passed'])
        self.assertIsNotNone(reports['N5']['counterexample'])
        self.assertEqual(reports['N5']['seed'], 0)

    def test_check_gmetric_rho(self):
        config = self.write_config({'gmetric': 'rho', 'sampling': {'n_samples': 2_000}})
        self.assertEqual(self.run_quietly(config, 'check-gmetric', out=self.path('out.json')), 0)

    def test_check_gmetric_corrupted(self):
        config = self.write_config({'gmetric': 'corrupted', 'space': LINE, 'sampling': {'n_samples': 2_000}})
        self.assertEqual(self.run_quietly(config, 'check-gmetric', out=self.path('out.json')), 1)

    def test_solve(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'name': 'halving_shift'},
                                    'solver': {'tol': 1e-10, 'max_iter': 100, 'x0': [0]}})
        self.assertEqual(self.run_quietly(config, 'solve', out=self.path('out.json')), 0)
        report = self.read_json()
        self.assertLessEqual(abs(report['fixed_point'][0] - 2.0), 1e-9)
        self.assertTrue(report['converged'])

    def test_solve_not_converged(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'matrix': [[0.5]], 'offset': [1], 'known_k': 0.5},
                                    'solver': {'tol': 1e-10, 'max_iter': 2, 'x0': [0]}})
        self.assertEqual(self.run_quietly(config, 'solve', out=self.path('out.json')), 1)

    def test_solve_csv_trace(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'name': 'halving_shift'},
                                    'solver': {'tol': 1e-10, 'max_iter': 100, 'x0': [0]},
                                    'output': {'path': self.path('trace.csv'), 'format': 'csv'}})
        self.assertEqual(self.run_quietly(config, 'solve'), 0)
        with open(self.path('trace.csv'), encoding='utf-8') as trace_file:
            rows = list(csv.reader(trace_file))
        self.assertEqual(rows[0], ['n', 'residual', 'apriori_bound'])
        self.assertEqual(rows[1], ['0', '2.0', '4.0'])
        bounds = [float(row[2]) for row in rows[1:]]
        self.assertEqual(bounds, sorted(bounds, reverse=True))

    def test_estimate_k(self):
        config = self.write_config({'space': LINE, 'mapping': {'name': 'halving'}, 'sampling': {'n_samples': 500}})
        self.assertEqual(self.run_quietly(config, 'estimate-k', out=self.path('out.json'), seed=3), 0)
        payload = self.read_json()
        self.assertEqual(payload['estimate'], 0.5)
        self.assertEqual(payload['seed'], 3)

    def test_expansive(self):
        config = self.write_config({'space': PLANE,
                                    'mapping': {'name': 'rotation_scale'},
                                    'solver': {'tol': 1e-10, 'max_iter': 100, 'x0': [1, 1]}})
        self.assertEqual(self.run_quietly(config, 'expansive', out=self.path('out.json')), 0)
        self.assertFalse(self.read_json()['affine_extension'])

    def test_jungck(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'name': 'halving_shift'},
                                    'mapping_s': {'name': 'double_shift_down'},
                                    'q': 0.25,
                                    'solver': {'tol': 1e-8, 'max_iter': 200, 'x0': [0]}})
        self.assertEqual(self.run_quietly(config, 'jungck', out=self.path('out.json')), 0)
        self.assertLessEqual(abs(self.read_json()['fixed_point'][0] - 2.0), 1e-7)

    def test_ball_sample(self):
        config = self.write_config({'space': PLANE,
                                    'ball': {'center': [0, 0], 'anchor': [2, 0], 'radius': 5},
                                    'sampling': {'n_samples': 50, 'seed': 1}})
        self.assertEqual(self.run_quietly(config, 'ball-sample', out=self.path('out.json')), 0)
        payload = self.read_json()
        self.assertEqual(len(payload['points']), 50)
        self.assertEqual(payload['seed'], 1)

    def test_ball_sample_csv(self):
        config = self.write_config({'space': PLANE,
                                    'ball': {'center': [0, 0], 'anchor': [2, 0], 'radius': 5},
                                    'sampling': {'n_samples': 40, 'seed': 1},
                                    'output': {'path': self.path('points.csv'), 'format': 'csv'}})
        self.assertEqual(self.run_quietly(config, 'ball-sample'), 0)
        with open(self.path('points.csv'), encoding='utf-8') as points_file:
            rows = list(csv.reader(points_file))
        self.assertEqual(rows[0], ['x0', 'x1'])
        self.assertEqual(len(rows), 41)
        for row in rows[1:]:
            x, y = (float(value) for value in row)
            self.assertLess((x * x + y * y) ** 0.5 + ((x - 2) ** 2 + y * y) ** 0.5, 3 + 1e-12)

    def test_config_not_utf8(self):
        path = self.path('binary.json')
        with open(path, 'wb') as config_file:
            config_file.write(b'\xff\xfe')
        self.assertEqual(self.run_quietly(path, 'check-axioms'), 2)
        with self.assertRaises(InvalidConfiguration) as context:
            load_config(path, 'check-axioms')
        self.assertEqual(context.exception.field, 'config')

    def test_input_errors(self):
        broken = self.write_config('{"space": ', name='broken.json')
        self.assertEqual(self.run_quietly(broken, 'check-axioms'), 2)
        self.assertEqual(self.run_quietly(self.path('missing.json'), 'check-axioms'), 2)
        no_mapping = self.write_config({'space': LINE, 'solver': {'tol': 1e-10, 'max_iter': 10, 'x0': [0]}})
        self.assertEqual(self.run_quietly(no_mapping, 'solve'), 2)
        mismatch = self.write_config({'space': LINE,
                                      'mapping': {'name': 'halving_shift'},
                                      'solver': {'tol': 1e-10, 'max_iter': 10, 'x0': [0, 1]}})
        self.assertEqual(self.run_quietly(mismatch, 'solve'), 2)
        bad_space = self.write_config({'space': {'kind': 'sum_pnorm', 'dim': 2, 'p': 0.5}})
        self.assertEqual(self.run_quietly(bad_space, 'check-axioms'), 2)
        bad_seed = self.write_config({'space': LINE, 'sampling': {'seed': -1}})
        self.assertEqual(self.run_quietly(bad_seed, 'check-axioms'), 2)

    def test_unwritable_output(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'name': 'halving_shift'},
                                    'solver': {'tol': 1e-10, 'max_iter': 100, 'x0': [0]}})
        target = os.path.join(self.directory, 'missing', 'trace.csv')
        self.assertEqual(self.run_quietly(config, 'solve', out=target), 2)

    def test_singular_second_mapping(self):
        config = self.write_config({'space': LINE,
                                    'mapping': {'name': 'halving_shift'},
                                    'mapping_s': {'matrix': [[0.0]]},
                                    'q': 0.25,
                                    'solver': {'tol': 1e-8, 'max_iter': 10, 'x0': [0]}})
        self.assertEqual(self.run_quietly(config, 'jungck'), 2)

    def test_main(self):
        config = self.write_config({'space': LINE, 'sampling': {'n_samples': 500}})
        with redirect_stdout(StringIO()):
            code = main(['check-axioms', '--config', config, '--out', self.path('out.json'), '--seed', '4',
                         '--log-level', 'error'])
        self.assertEqual(code, 0)
        self.assertTrue(all(report['seed'] == 4 for report in self.read_json()))


class TestConfiguration(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        Creates a scratch directory for trace files.
        """
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        """
        Test tear down

        Removes the scratch directory.
        """
        shutil.rmtree(self.directory)

    def test_round_trip(self):
        data = {'command': 'jungck',
                'space': {'kind': 'grid_maxsum', 'grid_size': 11},
                'mapping': {'matrix': [[0.5] * 11] * 11, 'known_k': 0.5},
                'mapping_s': {'name': 'doubling'},
                'q': 0.25,
                'solver': {'tol': 1e-8, 'max_iter': 50, 'x0': [0] * 11},
                'ball': {'center': [0] * 11, 'radius': 1},
                'sampling': {'n_samples': 10, 'seed': 9},
                'output': {'path': 'report.json', 'format': 'json'}}
        parsed = RunConfig.from_dict(data)
        again = RunConfig.from_dict(json.loads(json.dumps(parsed.to_dict())))
        self.assertEqual(again.to_dict(), parsed.to_dict())
        self.assertEqual(parsed.seed, 9)

    def test_seed_defaults_to_zero(self):
        self.assertEqual(RunConfig.from_dict({'space': {'kind': 'sum_pnorm', 'dim': 1, 'p': 1}},
                                             'check-axioms').seed, 0)

    def test_missing_section_names_field(self):
        with self.assertRaises(InvalidConfiguration) as context:
            RunConfig.from_dict({'space': {'kind': 'sum_pnorm', 'dim': 1, 'p': 1}}, 'solve')
        self.assertEqual(context.exception.field, 'mapping')
        with self.assertRaises(InvalidConfiguration) as context:
            RunConfig.from_dict({'space': {'kind': 'sum_pnorm', 'dim': 1, 'p': 1},
                                 'mapping': {'name': 'unknown'}}, 'estimate-k')
        self.assertEqual(context.exception.field, 'mapping.name')
        with self.assertRaises(InvalidConfiguration):
            load_config(os.path.join(self.directory, 'absent.json'))

    def test_trace_csv_rows(self):
        line = make_sum_space(1, 1)
        mapping = Mapping.affine([[0.5]], [1.0], known_k=0.5)
        report = picard_solve(line, mapping, SolveConfig(1e-10, 100, [2.0]))
        path = os.path.join(self.directory, 'trace.csv')
        emit_trace_csv(report, path)
        with open(path, encoding='utf-8') as trace_file:
            rows = list(csv.reader(trace_file))
        self.assertEqual(rows, [['n', 'residual', 'apriori_bound'], ['0', '0.0', '0.0']])
        with self.assertRaises(OutputNotWritable):
            emit_trace_csv(report, os.path.join(self.directory, 'missing', 'trace.csv'))

    def test_summary_table(self):
        table = summary_table(check_gnorm_axioms(make_max_candidate(1), 1_000))
        self.assertIn('N5', table)
        self.assertIn('FAIL', table)


if __name__ == '__main__':
    unittest.main()
