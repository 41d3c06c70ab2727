"""Commuting graphs of Coxeter groups and of the finite subgroups of SL(2,C)."""

from ._core import *  # noqa: F401,F403
from ._core import Error, Graph, Group, CoxeterMatrix  # noqa: F401

__version__ = "0.1.0"
