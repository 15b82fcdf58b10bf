"""
Conf file for the ZnSDC docs.
"""
import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath("../../"))
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

# -- Project information -----------------------------------------------------

project = "ZnSDC"
copyright = "2026, Zincwarecode"
author = "Zincwarecode"
release = "2026"

master_doc = "index"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "numpydoc",
    "sphinx_copybutton",
    "sphinx.ext.autosectionlabel",
]

autosectionlabel_prefix_document = True
autosummary_generate = True
numpydoc_show_class_members = False

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
}

templates_path = ["_templates"]
exclude_patterns = []
pygments_style = "sphinx"

autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
}

# -- HTML output -------------------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {"display_version": False}
html_static_path = []

# -- LaTeX and man output ----------------------------------------------------

latex_documents = [
    (master_doc, "ZnSDC.tex", "ZnSDC Documentation", "zincwarecode", "manual"),
]
man_pages = [(master_doc, "znsdc", "ZnSDC Documentation", [author], 1)]
