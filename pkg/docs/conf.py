#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# gnormlib documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os
import sphinx_rtd_theme

# The project root is the parent of the docs directory.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Regenerate the module pages so new modules show up without manual edits.
import sphinx.ext.apidoc

sphinx.ext.apidoc.main(argv=['-f', '-o', os.path.join(project_root, 'docs'),
                             os.path.join(project_root, '''gnormlib''')])

sys.path.insert(0, project_root)

import gnormlib

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax'
]

napoleon_google_docstring = True

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'''gnormlib'''
copyright = u'''2026, gnormlib maintainers'''

version = gnormlib.__version__
release = gnormlib.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = []
htmlhelp_basename = '''gnormlibdoc'''

# -- Options for LaTeX and manual page output --------------------------

latex_documents = [
    ('index', '''gnormlib.tex''',
     u'''gnormlib Documentation''',
     u'''gnormlib maintainers''', 'manual'),
]

man_pages = [
    ('index', '''gnormlib''',
     u'''gnormlib Documentation''',
     [u'''gnormlib maintainers'''], 1)
]
