"""Finite operation tables and the basic n-ary semigroup operations."""

from polyadic_semigroups.core.algfile import (
    AlgDocument,
    dump_alg,
    load_alg,
    parse_alg,
    save_alg,
)
from polyadic_semigroups.core.associativity import (
    AssocCounterexample,
    check_associativity,
    is_associative,
    is_associative_binary,
)
from polyadic_semigroups.core.errors import AlgebraError
from polyadic_semigroups.core.extension import (
    NotClosed,
    is_reduction,
    nary_extension,
    restrict,
)
from polyadic_semigroups.core.neutral import (
    adjoin_identity,
    kfold_law_holds,
    neutral_elements,
    reduce_via_neutral,
)
from polyadic_semigroups.core.tables import (
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    Universe,
    apply,
    flat_index,
    relabel,
    relabel_monoid,
    unflat_index,
)

__all__ = [
    # Types
    "Universe",
    "FiniteNaryOp",
    "BinaryOpDesc",
    "MonoidDesc",
    "AssocCounterexample",
    "NotClosed",
    "AlgebraError",
    "AlgDocument",
    # Tables
    "apply",
    "flat_index",
    "unflat_index",
    "relabel",
    "relabel_monoid",
    # Associativity
    "check_associativity",
    "is_associative",
    "is_associative_binary",
    # Extensions and reductions
    "nary_extension",
    "is_reduction",
    "restrict",
    # Neutral elements
    "neutral_elements",
    "reduce_via_neutral",
    "kfold_law_holds",
    "adjoin_identity",
    # .alg files
    "parse_alg",
    "load_alg",
    "dump_alg",
    "save_alg",
]
