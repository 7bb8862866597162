# Sphinx configuration for the xmodcat documentation.
import os
import sys
import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath("../"))

project = "xmodcat"
copyright = "2023, Evyn Machi"
author = "Evyn Machi"
release = "v0.1.0"

extensions = [
    "sphinx.ext.viewcode",
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

autodoc_typehints = "none"
autodoc_member_order = "bysource"
napoleon_google_docstring = True

templates_path = ["_templates"]
exclude_patterns = ["_build"]

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = False
html_static_path = ["_static"]
