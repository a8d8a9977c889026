#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
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
Command line front end, ``gnorm <command> --config <path> [--out <path>] [--seed N]``.

Exit codes: 0 on success, 1 when an axiom fails, a solver does not converge or a preimage cannot be found, 2 on any
input or configuration error.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .gnormlibexceptions import (GNormInputError,
                                 InvalidConfiguration,
                                 OutputNotWritable,
                                 DegenerateSample,
                                 RangeInclusionViolation)
from .resources import LOGGER, SpaceSpec, SolveConfig, Ball, to_float_list
from .resources.configuration import (CLI_COMMANDS,
                                      OUTPUT_FORMATS,
                                      GMETRIC_SOURCES,
                                      DEFAULT_CLI_SAMPLES,
                                      DEFAULT_SEED,
                                      CONTRACTION_INFLATION,
                                      TRACE_CSV_HEADER)
from .solvers import Mapping, picard_solve, expansive_solve, jungck_solve, contraction_estimate
from .spaces import make_space, make_rho_oracle, make_corrupted_gmetric
from .topology import ball_sample
from .verify import check_gnorm_axioms, check_gmetric, check_derived_gmetric, report_to_json

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__credits__ = ["gnormlib maintainers"]
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _scaled_identity(factor, shift, known_k=None, known_q=None):
    def build(dim):
        return np.eye(dim) * factor, np.full(dim, float(shift)), known_k, known_q
    return build


def _rotation_scale(dim):
    if dim != 2:
        raise InvalidConfiguration('mapping.name', f'rotation_scale is defined on dimension 2 only, got {dim}')
    return np.array([[0.0, -3.0], [3.0, 0.0]]), np.zeros(2), None, 3.0


NAMED_MAPPINGS = {'halving_shift': _scaled_identity(0.5, 1.0, known_k=0.5),
                  'halving': _scaled_identity(0.5, 0.0, known_k=0.5),
                  'doubling': _scaled_identity(2.0, 0.0, known_q=2.0),
                  'double_shift_down': _scaled_identity(2.0, -2.0, known_q=2.0),
                  'triple_shift': _scaled_identity(3.0, -4.0, known_q=3.0),
                  'rotation_scale': _rotation_scale,
                  'identity': _scaled_identity(1.0, 0.0)}


def _optional_number(data, key, field_name):
    value = data.get(key)
    if value is not None and (isinstance(value, bool) or not isinstance(value, (int, float))):
        raise InvalidConfiguration(field_name, f'expected a number, got {value!r}')
    return value


@dataclass
class MappingSpec:
    """A mapping of the configuration, either a named built in or a row major affine matrix with offset."""

    name: Optional[str] = None
    matrix: Optional[list] = None
    offset: Optional[list] = None
    known_k: Optional[float] = None
    known_q: Optional[float] = None

    @classmethod
    def from_dict(cls, data, section='mapping'):
        """Parses a mapping section naming the offending field on errors."""
        if not isinstance(data, dict):
            raise InvalidConfiguration(section, 'expected an object')
        name, matrix = data.get('name'), data.get('matrix')
        if (name is None) == (matrix is None):
            raise InvalidConfiguration(section, 'exactly one of "name" and "matrix" is required')
        if name is not None and name not in NAMED_MAPPINGS:
            raise InvalidConfiguration(f'{section}.name', f'expected one of {sorted(NAMED_MAPPINGS)}, got {name!r}')
        if matrix is not None and (not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix)):
            raise InvalidConfiguration(f'{section}.matrix', 'expected a list of rows')
        offset = data.get('offset')
        if offset is not None and not isinstance(offset, list):
            raise InvalidConfiguration(f'{section}.offset', 'expected a list of numbers')
        return cls(name=name,
                   matrix=matrix,
                   offset=offset,
                   known_k=_optional_number(data, 'known_k', f'{section}.known_k'),
                   known_q=_optional_number(data, 'known_q', f'{section}.known_q'))

    def to_dict(self):
        """The JSON representation, omitting unset fields."""
        return {key: value for key, value in self.__dict__.items() if value is not None}

    def build(self, dim, section='mapping'):
        """Creates the mapping on R^dim.

        Raises:
            InvalidConfiguration: if the matrix does not match the dimension.

        """
        if self.name is not None:
            matrix, offset, known_k, known_q = NAMED_MAPPINGS[self.name](dim)
            label = self.name
        else:
            try:
                matrix = np.asarray(self.matrix, dtype=float)
                offset = None if self.offset is None else np.asarray(self.offset, dtype=float)
            except (TypeError, ValueError):
                raise InvalidConfiguration(f'{section}.matrix', 'expected numbers only') from None
            known_k, known_q, label = None, None, 'affine'
            if matrix.shape != (dim, dim):
                raise InvalidConfiguration(f'{section}.matrix', f'expected shape ({dim}, {dim}), got {matrix.shape}')
        known_k = known_k if self.known_k is None else self.known_k
        known_q = known_q if self.known_q is None else self.known_q
        return Mapping.affine(matrix, offset, known_k=known_k, known_q=known_q, name=label)


def _section(data, key, parser):
    return None if data.get(key) is None else parser(data[key])


def _sampling(data):
    sampling = data.get('sampling') or {}
    if not isinstance(sampling, dict):
        raise InvalidConfiguration('sampling', 'expected an object')
    n_samples = sampling.get('n_samples', DEFAULT_CLI_SAMPLES)
    seed = sampling.get('seed', DEFAULT_SEED)
    if isinstance(n_samples, bool) or not isinstance(n_samples, int) or n_samples < 1:
        raise InvalidConfiguration('sampling.n_samples', f'expected an integer >= 1, got {n_samples!r}')
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise InvalidConfiguration('sampling.seed', f'expected a non negative integer, got {seed!r}')
    return n_samples, seed


def _output(data):
    output = data.get('output') or {}
    if not isinstance(output, dict):
        raise InvalidConfiguration('output', 'expected an object')
    output_format = output.get('format', 'json')
    if output_format not in OUTPUT_FORMATS:
        raise InvalidConfiguration('output.format', f'expected one of {OUTPUT_FORMATS}, got {output_format!r}')
    return output.get('path'), output_format


@dataclass
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """A parsed run configuration."""

    command: str
    space: Optional[SpaceSpec] = None
    mapping: Optional[MappingSpec] = None
    mapping_s: Optional[MappingSpec] = None
    q: Optional[float] = None
    solver: Optional[SolveConfig] = None
    ball: Optional[Ball] = None
    gmetric: str = 'derived'
    n_samples: int = DEFAULT_CLI_SAMPLES
    seed: int = DEFAULT_SEED
    output_path: Optional[str] = None
    output_format: str = 'json'

    @classmethod
    def from_dict(cls, data, command=None):
        """Parses and validates a configuration document.

        Args:
            data (dict): The decoded JSON document.
            command (str): The command, overriding the "command" field of the document.

        Returns:
            config (RunConfig): The configuration.

        Raises:
            InvalidConfiguration: naming the offending field.
            InvalidSpaceSpec: if the space section is invalid.

        """
        if not isinstance(data, dict):
            raise InvalidConfiguration('config', 'expected a JSON object at the top level')
        command = command or data.get('command')
        if command not in CLI_COMMANDS:
            raise InvalidConfiguration('command', f'expected one of {CLI_COMMANDS}, got {command!r}')
        gmetric = data.get('gmetric', 'derived')
        if gmetric not in GMETRIC_SOURCES:
            raise InvalidConfiguration('gmetric', f'expected one of {GMETRIC_SOURCES}, got {gmetric!r}')
        n_samples, seed = _sampling(data)
        output_path, output_format = _output(data)
        config = cls(command=command,
                     space=_section(data, 'space', SpaceSpec.from_dict),
                     mapping=_section(data, 'mapping', MappingSpec.from_dict),
                     mapping_s=_section(data, 'mapping_s', lambda section: MappingSpec.from_dict(section, 'mapping_s')),
                     q=_optional_number(data, 'q', 'q'),
                     solver=_section(data, 'solver', SolveConfig.from_dict),
                     ball=_section(data, 'ball', Ball.from_dict),
                     gmetric=gmetric,
                     n_samples=n_samples,
                     seed=seed,
                     output_path=output_path,
                     output_format=output_format)
        config.require(*config.required_fields)
        return config

    @property
    def required_fields(self):
        """The sections the command needs."""
        needs = {'check-axioms': ('space',),
                 'check-gmetric': () if self.gmetric == 'rho' else ('space',),
                 'solve': ('space', 'mapping', 'solver'),
                 'estimate-k': ('space', 'mapping'),
                 'ball-sample': ('space', 'ball'),
                 'jungck': ('space', 'mapping', 'mapping_s', 'q', 'solver'),
                 'expansive': ('space', 'mapping', 'solver')}
        return needs[self.command]

    def require(self, *names):
        """Raises InvalidConfiguration for the first missing section."""
        for name in names:
            if getattr(self, name) is None:
                raise InvalidConfiguration(name, f'required by the "{self.command}" command')

    def to_dict(self):
        """The JSON representation, parsing it again gives an equal configuration."""
        data = {'command': self.command,
                'gmetric': self.gmetric,
                'sampling': {'n_samples': self.n_samples, 'seed': self.seed},
                'output': {'format': self.output_format}}
        if self.output_path is not None:
            data['output']['path'] = self.output_path
        for name in ('space', 'mapping', 'mapping_s', 'solver', 'ball'):
            section = getattr(self, name)
            if section is not None:
                data[name] = section.to_dict()
        if self.q is not None:
            data['q'] = self.q
        return data


def load_config(path, command=None):
    """Reads and parses a configuration file.

    Raises:
        InvalidConfiguration: if the file cannot be read or its content is invalid.
        json.JSONDecodeError: if the file is not JSON.

    """
    try:
        with open(path, 'r', encoding='utf-8') as config_file:
            data = json.load(config_file)
    except OSError as error:
        raise InvalidConfiguration('config', f'cannot read {path}: {error.strerror}') from None
    except UnicodeDecodeError as error:
        raise InvalidConfiguration('config', f'{path} is not UTF-8 text: {error.reason}') from None
    return RunConfig.from_dict(data, command)

def emit_trace_csv(report, path):
    """Writes the trace of a solver run as CSV with columns n, residual and apriori_bound.

    Numbers are written in their shortest round trip form.

    Raises:
        OutputNotWritable: if the path cannot be written.

    """
    try:
        with open(path, 'w', encoding='utf-8', newline='') as csv_file:
            writer = csv.writer(csv_file, lineterminator='\n')
            writer.writerow(TRACE_CSV_HEADER)
            for index, residual, bound in report.trace.rows:
                writer.writerow((index, repr(float(residual)), repr(float(bound))))
    except OSError as error:
        raise OutputNotWritable(f'Cannot write trace to {path}: {error.strerror}') from None


def emit_points_csv(sample, dim, path):
    """Writes the points of a ball sample as CSV, one row per point and one column x0, x1, ... per coordinate.

    Raises:
        OutputNotWritable: if the path cannot be written.

    """
    try:
        with open(path, 'w', encoding='utf-8', newline='') as csv_file:
            writer = csv.writer(csv_file, lineterminator='\n')
            writer.writerow([f'x{index}' for index in range(dim)])
            for point in sample.points:
                writer.writerow([repr(float(value)) for value in point])
    except OSError as error:
        raise OutputNotWritable(f'Cannot write points to {path}: {error.strerror}') from None


def _write_text(text, path):
    if path is None:
        sys.stdout.write(text + '\n')
        return
    try:
        with open(path, 'w', encoding='utf-8') as output_file:
            output_file.write(text + '\n')
    except OSError as error:
        raise OutputNotWritable(f'Cannot write report to {path}: {error.strerror}') from None


def _dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


def summary_table(reports):
    """A fixed width text table of axiom reports."""
    lines = [f'{"axiom":<14}{"samples":>10}  {"result":<6}  worst_violation']
    for report in reports:
        result = 'pass' if report.passed else 'FAIL'
        lines.append(f'{report.axiom_id:<14}{report.samples:>10}  {result:<6}  {report.worst_violation!r}')
    return '\n'.join(lines)


def _emit_reports(config, reports):
    _write_text(report_to_json(reports), config.output_path)
    if config.output_path is not None:
        print(summary_table(reports))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILURE


def _emit_solve(config, report):
    if config.output_format == 'csv':
        if config.output_path is None:
            raise InvalidConfiguration('output.path', 'required for csv output')
        emit_trace_csv(report, config.output_path)
    else:
        _write_text(_dumps(report.to_dict()), config.output_path)
    LOGGER.info('%s run finished after %s iterations, converged: %s', report.method, report.iterations,
                report.converged)
    return EXIT_OK if report.converged else EXIT_FAILURE


def _space(config):
    return make_space(config.space)


def _check_axioms(config):
    return _emit_reports(config, check_gnorm_axioms(_space(config), config.n_samples, config.seed))


def _check_gmetric(config):
    if config.gmetric == 'rho':
        reports = check_gmetric(make_rho_oracle(), config.n_samples, config.seed)
    elif config.gmetric == 'corrupted':
        reports = check_gmetric(make_corrupted_gmetric(_space(config)), config.n_samples, config.seed)
    else:
        reports = check_derived_gmetric(_space(config), config.n_samples, config.seed)
    return _emit_reports(config, reports)


def _solve(config):
    space = _space(config)
    report = picard_solve(space, config.mapping.build(space.dim), config.solver, config.seed)
    return _emit_solve(config, report)


def _expansive(config):
    space = _space(config)
    report = expansive_solve(space, config.mapping.build(space.dim), config.solver, config.seed)
    return _emit_solve(config, report)


def _jungck(config):
    space = _space(config)
    report = jungck_solve(space,
                          config.mapping.build(space.dim),
                          config.mapping_s.build(space.dim, 'mapping_s'),
                          config.q,
                          config.solver,
                          config.seed)
    return _emit_solve(config, report)


def _estimate_k(config):
    space = _space(config)
    estimate = contraction_estimate(space, config.mapping.build(space.dim), config.n_samples, config.seed)
    payload = {'estimate': float(estimate),
               'inflated': float(estimate * CONTRACTION_INFLATION),
               'samples': config.n_samples,
               'seed': config.seed}
    _write_text(_dumps(payload), config.output_path)
    return EXIT_OK


def _ball_sample(config):
    space = _space(config)
    sample = ball_sample(space, config.ball, config.n_samples, config.seed)
    if config.output_format == 'csv':
        if config.output_path is None:
            raise InvalidConfiguration('output.path', 'required for csv output')
        emit_points_csv(sample, space.dim, config.output_path)
        LOGGER.info('Wrote %s ball members to %s', len(sample.points), config.output_path)
        return EXIT_OK
    payload = {'ball': config.ball.to_dict(),
               'points': [to_float_list(point) for point in sample.points],
               'attempts': sample.attempts,
               'acceptance_rate': sample.acceptance_rate,
               'seed': sample.seed}
    _write_text(_dumps(payload), config.output_path)
    return EXIT_OK


COMMANDS = {'check-axioms': _check_axioms,
            'check-gmetric': _check_gmetric,
            'solve': _solve,
            'estimate-k': _estimate_k,
            'ball-sample': _ball_sample,
            'jungck': _jungck,
            'expansive': _expansive}


def run(config_path, command=None, out=None, seed=None):
    """Executes the command a configuration file describes.

    Args:
        config_path (str): Path of the JSON configuration.
        command (str): The command, defaults to the "command" field of the configuration.
        out (str): Output path overriding output.path.
        seed (int): Seed overriding sampling.seed.

    Returns:
        exit_code (int): 0 on success, 1 on verification or convergence failure, 2 on input errors.

    """
    try:
        config = load_config(config_path, command)
        if out is not None:
            config.output_path = out
        if seed is not None:
            if seed < 0:
                raise InvalidConfiguration('seed', f'expected a non negative integer, got {seed}')
            config.seed = seed
        LOGGER.debug('Running %s with seed %s', config.command, config.seed)
        return COMMANDS[config.command](config)
    except json.JSONDecodeError as error:
        LOGGER.error('Configuration %s is not valid JSON: %s', config_path, error)
        return EXIT_INPUT_ERROR
    except InvalidConfiguration as error:
        LOGGER.error('Invalid configuration field "%s": %s', error.field, error)
        return EXIT_INPUT_ERROR
    except (GNormInputError, DegenerateSample) as error:
        LOGGER.error('%s: %s', type(error).__name__, error)
        return EXIT_INPUT_ERROR
    except RangeInclusionViolation as error:
        LOGGER.error('Range inclusion violated: %s', error)
        return EXIT_FAILURE


def setup_logging(level):
    """Installs console logging, coloured when coloredlogs is available."""
    try:
        import coloredlogs  # pylint: disable=import-outside-toplevel
        coloredlogs.install(level=level.upper())
    except ImportError:
        root = logging.getLogger()
        handler = logging.StreamHandler()
        handler.setLevel(level.upper())
        handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        root.addHandler(handler)
        root.setLevel(level.upper())


def get_arguments(argv=None):
    """Parses the command line."""
    parser = argparse.ArgumentParser(prog='gnorm', description='G-normed space numerics toolkit.')
    parser.add_argument('command', choices=CLI_COMMANDS, help='The command to run.')
    parser.add_argument('--config', required=True, help='Path of the JSON run configuration.')
    parser.add_argument('--out', default=None, help='Output path, overrides output.path of the configuration.')
    parser.add_argument('--seed', type=int, default=None, help='Seed, overrides sampling.seed of the configuration.')
    parser.add_argument('--log-level',
                        default='info',
                        choices=('debug', 'info', 'warning', 'error', 'critical'),
                        help='Console logging level.')
    return parser.parse_args(argv)


def main(argv=None):
    """Entry point of the gnorm console script."""
    args = get_arguments(argv)
    setup_logging(args.log_level)
    return run(args.config, command=args.command, out=args.out, seed=args.seed)


if __name__ == '__main__':
    sys.exit(main())
