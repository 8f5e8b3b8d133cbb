# -*- coding: utf-8 -*-
#
# hamgraphon documentation build configuration file.

import sys, os

# the package is imported from the checkout, not from site-packages
sys.path.insert(0, os.path.abspath('..'))

import hamgraphon

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

source_suffix = '.rst'
master_doc = 'index'

project = 'hamgraphon'
copyright = '2026, hamgraphon Authors'

# The short X.Y version and the full version, including alpha/beta tags.
version = hamgraphon.get_version()
release = hamgraphon.get_version()

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# Documents both the class docstring and the __init__ docstring.
autoclass_content = 'both'
autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'nature'

html_sidebars = {
    'index': ['globaltoc.html', 'searchbox.html'],
    '**': ['localtoc.html', 'relations.html', 'searchbox.html']
}

htmlhelp_basename = 'hamgraphondoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'hamgraphon.tex', 'hamgraphon Documentation',
   'hamgraphon Authors', 'manual'),
]
