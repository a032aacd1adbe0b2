"""Exact certificates for the q_j / P_j polynomial family.

Polynomials are passed and returned as ascending coefficient lists.
"""

from ._core import *  # noqa: F401,F403
from ._core import CyclocertError, DEFAULT_SEED

__all__ = [name for name in dir() if not name.startswith("_")]
