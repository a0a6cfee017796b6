# Copyright 2019 Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: MIT-0
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this
# software and associated documentation files (the "Software"), to deal in the Software
# without restriction, including without limitation the rights to use, copy, modify,
# merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
# INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A
# PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

# Sphinx configuration for the pytsanomaly docs; build with the package installed (`pip install -e .`).
import guzzle_sphinx_theme

import pytsanomaly

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'guzzle_sphinx_theme']
source_suffix = '.rst'
master_doc = 'index'

project = 'pytsanomaly Docs'
copyright = '2026, pytsanomaly developers'
version = pytsanomaly.__version__
release = pytsanomaly.__version__

exclude_patterns = []
pygments_style = 'sphinx'
autoclass_content = 'both'

html_translator_class = 'guzzle_sphinx_theme.HTMLTranslator'
html_theme_path = guzzle_sphinx_theme.html_theme_path()
html_theme = 'guzzle_sphinx_theme'
html_theme_options = {
    'project_nav_name': 'pytsanomaly',
}
html_show_sourcelink = False
html_sidebars = {
    '**': ['logo-text.html',
           'globaltoc.html',
           'searchbox.html']
}
htmlhelp_basename = 'pytsanomalyDocs'

latex_documents = [
    ('index', 'pytsanomaly.tex', 'pytsanomaly Documentation', 'pytsanomaly developers', 'manual'),
]
man_pages = [
    ('index', 'pytsanomaly', 'pytsanomaly Documentation', ['pytsanomaly developers'], 1),
]
texinfo_documents = [
    ('index', 'pytsanomaly', 'pytsanomaly Documentation', 'pytsanomaly developers', 'pytsanomaly',
     'Trend and period aware time series anomaly detection.', 'Miscellaneous'),
]
