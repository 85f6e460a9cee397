# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

from os import path
import sys

# -- Project information -----------------------------------------------------

project = 'rubancf'
copyright = '2025, The rubancf developers'
author = 'Lourens Veen'

release = '0.1.0.dev0'

# -- General configuration ---------------------------------------------------

# autodoc needs to be able to import rubancf
here = path.dirname(__file__)
sys.path.insert(0, path.abspath(path.join(here, '..', '..')))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon', 'sphinx.ext.mathjax']

autodoc_default_options = {
        'special-members': '__init__'
        }

autodoc_mock_imports = ['mpmath', 'sympy']

templates_path = ['_templates']
exclude_patterns = []

root_doc = 'index'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
