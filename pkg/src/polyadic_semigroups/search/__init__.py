"""Decision procedures: reducibility, adjunction of a neutral element, IN-semigroups."""

from polyadic_semigroups.search.adjunctions import find_adjunctions
from polyadic_semigroups.search.decisions import is_in_semigroup
from polyadic_semigroups.search.oracles import brute_force_adjunctions, brute_force_reductions
from polyadic_semigroups.search.outcome import InSemigroupVerdict, SearchOutcome
from polyadic_semigroups.search.reductions import (
    find_reductions,
    is_irreducible,
    is_reducible,
)

__all__ = [
    "SearchOutcome",
    "InSemigroupVerdict",
    "find_reductions",
    "find_adjunctions",
    "is_reducible",
    "is_irreducible",
    "is_in_semigroup",
    "brute_force_reductions",
    "brute_force_adjunctions",
]
