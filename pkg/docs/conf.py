# -*- coding: utf-8 -*-

import twinlab


def _short_version(release):
    parts = release.split('.')
    return '.'.join(parts[:2])


extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'twinlab'
copyright = u'2026, the twinlab developers'
author = u'the twinlab developers'

release = twinlab.__version__
version = _short_version(release)

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'twinlabdoc'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

# Numpydoc configuration
numpydoc_show_class_members = False
