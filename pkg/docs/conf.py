"""Leaguerank documentation build configuration file"""


import os
import sys
from importlib.metadata import version as get_version

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__) + "/../"))


# -- Custom Sphinx object types -----------------------------------------------


def setup(app):
    app.add_object_type(
        "confval",
        "confval",
        objname="configuration value",
        indextemplate="pair: %s; configuration value",
    )


# -- General configuration ----------------------------------------------------

needs_sphinx = "1.3"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
]

source_suffix = ".rst"
master_doc = "index"

project = "Leaguerank"
copyright = "2024, Leaguerank contributors"

release = get_version("Leaguerank")
version = ".".join(release.split(".")[:2])

# To make the build reproducible, avoid using today's date in the manpages
today = "2024"

exclude_trees = ["_build"]

pygments_style = "sphinx"

modindex_common_prefix = ["leaguerank."]


# -- Options for HTML output --------------------------------------------------

html_theme = "sphinx_rtd_theme"

html_use_modindex = True
html_use_index = True
html_split_index = False
html_show_sourcelink = True

htmlhelp_basename = "Leaguerank"


# -- Options for manpages output ----------------------------------------------

man_pages = [
    ("command", "leaguerank", "rank uncertainty for league tables", "", "1"),
]


# -- Options for intersphinx extension ----------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pykka": ("https://pykka.readthedocs.io/en/latest/", None),
}
