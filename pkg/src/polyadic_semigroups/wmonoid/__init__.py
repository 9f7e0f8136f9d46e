"""W-monoids: recognition, the Rees criterion, constructions and decomposition."""

from polyadic_semigroups.wmonoid.bitranslation import (
    Bitranslation,
    BitranslationViolation,
    decompose,
    enumerate_bitranslations,
    ex46_bitranslation,
    from_bitranslation,
    inner_bitranslation,
    verify_bitranslation,
)
from polyadic_semigroups.wmonoid.in_semigroup import in_semigroup_from_w_monoid
from polyadic_semigroups.wmonoid.involution import from_involution
from polyadic_semigroups.wmonoid.rees import ReesCheck, check_rees_T_iso
from polyadic_semigroups.wmonoid.witness import (
    WChecks,
    WMonoidFailure,
    WMonoidWitness,
    check_w_monoid,
    find_unit_triple_factorization,
    is_w_monoid,
    parity_check,
    standard_placement,
    unit_factorizations,
    w1_holds,
    w2_holds,
)

__all__ = [
    # Types
    "WMonoidWitness",
    "WMonoidFailure",
    "WChecks",
    "Bitranslation",
    "BitranslationViolation",
    "ReesCheck",
    # Recognition
    "check_w_monoid",
    "is_w_monoid",
    "w1_holds",
    "w2_holds",
    "parity_check",
    "find_unit_triple_factorization",
    "unit_factorizations",
    "standard_placement",
    "check_rees_T_iso",
    # Constructions
    "from_involution",
    "from_bitranslation",
    "verify_bitranslation",
    "decompose",
    "enumerate_bitranslations",
    "inner_bitranslation",
    "ex46_bitranslation",
    "in_semigroup_from_w_monoid",
]
