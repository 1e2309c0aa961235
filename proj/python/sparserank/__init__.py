"""Rank and matching number of sparse random graphs."""

from ._sparserank import *  # noqa: F401,F403
from ._sparserank import SparserankError

__all__ = [name for name in dir() if not name.startswith("_")]
