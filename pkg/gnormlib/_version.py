#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: _version.py
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
Reads the package version out of the .VERSION file.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

from pathlib import Path

__author__ = '''gnormlib maintainers'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, gnormlib maintainers'''
__license__ = '''MIT'''
__maintainer__ = '''gnormlib maintainers'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

_PACKAGE_DIRECTORY = Path(__file__).resolve().parent
VERSION_FILE_CANDIDATES = (_PACKAGE_DIRECTORY.parent / '.VERSION', _PACKAGE_DIRECTORY / '.VERSION')


def _read_version():
    for candidate in VERSION_FILE_CANDIDATES:
        if candidate.is_file():
            return candidate.read_text(encoding='utf-8').strip()
    return '0.0.0'


__version__ = _read_version()
