"""Rees quotient criterion: I = M - {a, e} is an ideal and M/I is {-1, 0, 1}."""

from dataclasses import dataclass

import numpy as np

from polyadic_semigroups.core.errors import AlgebraError
from polyadic_semigroups.core.tables import MonoidDesc

# Quotient classes in table order: [a], [0] (the collapsed ideal), [e]
CLASS_A, CLASS_ZERO, CLASS_E = 0, 1, 2
CLASS_VALUES = (-1, 0, 1)

# {-1, 0, 1} under multiplication, written in class indices
T_TABLE: tuple[tuple[int, ...], ...] = tuple(
    tuple(CLASS_VALUES.index(x * y) for y in CLASS_VALUES) for x in CLASS_VALUES
)


@dataclass(frozen=True)
class ReesCheck:
    """Outcome of the ideal and quotient test.

    degenerate is True when I is empty (order 2); the ideal condition then
    holds vacuously and there is no quotient to compare.
    """

    ideal_ok: bool
    quotient_table: tuple[tuple[int, ...], ...] | None
    iso_to_T: bool
    degenerate: bool = False


def check_rees_T_iso(monoid: MonoidDesc, a: int, e: int) -> ReesCheck:
    monoid.universe.check(a)
    monoid.universe.check(e)
    if a == e:
        raise AlgebraError(f"a and e must differ, both are {a}")

    m = monoid.op.matrix
    ideal = [x for x in range(monoid.order) if x not in (a, e)]
    if not ideal:
        return ReesCheck(ideal_ok=True, quotient_table=None, iso_to_T=False, degenerate=True)

    in_ideal = np.zeros(monoid.order, dtype=bool)
    in_ideal[ideal] = True
    ideal_ok = bool(in_ideal[m[ideal, :]].all() and in_ideal[m[:, ideal]].all())
    if not ideal_ok:
        return ReesCheck(ideal_ok=False, quotient_table=None, iso_to_T=False)

    def cls(x: int) -> int:
        return CLASS_A if x == a else CLASS_E if x == e else CLASS_ZERO

    representative = (a, ideal[0], e)
    quotient = tuple(
        tuple(cls(int(m[x, y])) for y in representative) for x in representative
    )
    return ReesCheck(ideal_ok=True, quotient_table=quotient, iso_to_T=quotient == T_TABLE)
