#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# get the requirements from the requirements.txt
requirements = [line.strip()
                for line in open('requirements.txt').readlines()
                if line.strip() and not line.startswith('#')]
# get the test requirements from the dev-requirements.txt
test_requirements = [line.strip()
                     for line in
                     open('dev-requirements.txt').readlines()
                     if line.strip() and not line.startswith('#')]

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')
version = open('.VERSION').read().strip()


setup(
    name='''gnormlib''',
    version=version,
    description='''Numerics for generalized normed spaces: G-norms, derived G-metrics, ball geometry, fixed point solvers and property based axiom verification.''',
    long_description=readme + '\n\n' + history,
    author='''gnormlib maintainers''',
    packages=find_packages(where='.', exclude=('tests', 'examples*')),
    package_dir={'''gnormlib''':
                 '''gnormlib'''},
    include_package_data=True,
    install_requires=requirements,
    entry_points={'console_scripts': ['gnorm = gnormlib.cli:main']},
    license='MIT',
    zip_safe=False,
    keywords='''gnormlib G-norm G-metric fixed-point''',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    test_suite='tests',
    tests_require=test_requirements
)
