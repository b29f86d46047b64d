"""Generalized composition numbers c_m(n,k), invert transforms and
brute-force restricted-word counts, backed by an exact C++ core."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    DEFAULT_BUDGET,
    EnumerationTooLargeError,
    InsufficientSeedError,
    InvalidSeedError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
