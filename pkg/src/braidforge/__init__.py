"""Braid groups and finitely presented groups: normal forms, presentations, trajectories."""

from .braid import (
    BraidWord,
    DeltaVariant,
    FullTwistVariant,
    Permutation,
    PureGenerator,
    conjugate_by_delta,
    delta_word,
    expand_pure_generator,
    exponent_sum,
    free_reduce,
    full_twist_word,
    permutation_of,
    shift,
)
from .errors import BraidForgeError
from .garside import NormalForm, SimpleElement, braids_equal, is_pure, normal_form, permutation_to_simple

__version__ = "0.1.0"

__all__ = [
    "BraidForgeError", "BraidWord", "DeltaVariant", "FullTwistVariant", "NormalForm",
    "Permutation", "PureGenerator", "SimpleElement", "braids_equal", "conjugate_by_delta",
    "delta_word", "expand_pure_generator", "exponent_sum", "free_reduce", "full_twist_word",
    "is_pure", "normal_form", "permutation_of", "permutation_to_simple", "shift",
]
