"""nokwidth.weyl

Weyl group machinery: simple reflections, lengths and reduced words, longest
elements of Levi subgroups, and the three ways of enumerating Phi_P^+
(good ordering, reduced-word readings, Levi telescope).

    from nokwidth.weyl import enumeration_from_word, good_ordering

    e = enumeration_from_word(rs, {1, 2}, (1, 2, 1), "suffix")
"""

from .enumerations import (
    VARIANTS,
    default_word,
    enumeration_from_word,
    good_ordering,
    is_good_ordering,
)
from .errors import (
    InternalInvariant,
    InvalidSimpleIndex,
    NotBijective,
    NotReduced,
    UnsupportedType,
)
from .group import (
    element_from_word,
    identity,
    inverse,
    is_reduced,
    length,
    longest_element,
    reduced_word,
    simple_element,
    simple_reflection,
)
from .telescope import telescope_enumeration, telescope_relabeling
from .types import PROVENANCES, Enumeration, ReducedWord, Telescope, WeylElement

__all__ = [
    "PROVENANCES",
    "VARIANTS",
    "Enumeration",
    "InternalInvariant",
    "InvalidSimpleIndex",
    "NotBijective",
    "NotReduced",
    "ReducedWord",
    "Telescope",
    "UnsupportedType",
    "WeylElement",
    "default_word",
    "element_from_word",
    "enumeration_from_word",
    "good_ordering",
    "identity",
    "inverse",
    "is_good_ordering",
    "is_reduced",
    "length",
    "longest_element",
    "reduced_word",
    "simple_element",
    "simple_reflection",
    "telescope_enumeration",
    "telescope_relabeling",
]
