"""Causes, repairs and diagnoses for conjunctive-query answers.

Thin re-export of the compiled core; see the README for the data model.
"""

from causerep._core import *  # noqa: F401,F403
from causerep._core import __version__  # noqa: F401
