"""Wreath products of finite permutation groups.

Element arithmetic, conjugacy testing with verified witnesses, conjugacy-class
sizes and representatives, and centralisers, all through the disjoint
wreath-cycle decomposition.
"""

from ._core import (
    Context,
    Element,
    WreathError,
    centraliser,
    conjugator,
    is_conjugate,
    load_context,
)

__all__ = [
    "Context",
    "Element",
    "WreathError",
    "centraliser",
    "conjugator",
    "is_conjugate",
    "load_context",
]
