# Configuration file for the Sphinx documentation builder of khrot.
#
# Build locally with:
#   sphinx-build -ab html ./docs ./khrot-rtd

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

import khrot

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
    'docs.ext.hidden_code_block',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'khrot'
copyright = u'2026, khrot contributors'
author = u'khrot contributors'

version = u'latest'
release = khrot.__version__

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = True

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'display_version': True,
}
html_title = 'khrot - Khovanov homology with rotation numbers'
html_short_title = 'khrot'
htmlhelp_basename = 'khrotdoc'

# -- Options for other builders -------------------------------------------

latex_documents = [
    (master_doc, 'khrot.tex', u'khrot Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'khrot', u'khrot Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'khrot', u'khrot Documentation', author, 'khrot',
     'Local Khovanov homology of alternating tangles with rotation numbers.', 'Mathematics'),
]
