#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# fovclutter documentation build configuration file. The API pages are
# generated by sphinx-autoapi from the package sources.

import os
import sys
ORIGIN_PATH = os.path.abspath('..')
sys.path.insert(0, ORIGIN_PATH)

SRC_PATH = os.path.abspath('../fovclutter')

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.intersphinx',
              'sphinx.ext.viewcode',
              'sphinx.ext.mathjax',
              'autoapi.extension']

autoapi_dirs = [SRC_PATH]

source_suffix = '.rst'
master_doc = 'index'

project = 'fovclutter'
author = 'fovclutter team'
copyright = '2024, ' + author

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'fovclutterdoc'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pandas': ('https://pandas.pydata.org/docs', None),
}
