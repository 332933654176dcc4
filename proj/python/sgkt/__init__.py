"""Constructible ideals, enveloping groups and K-theory decompositions for
multiplicative and ax+b semigroups over Z and imaginary quadratic orders."""

from ._sgkt import *  # noqa: F401,F403
from ._sgkt import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
