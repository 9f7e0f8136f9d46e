"""Recognising W-monoids.

A monoid (M, *, e) is a W-monoid for the element a when
  W1: x * y = e  iff  (x, y) is (a, a) or (e, e)
  W2: x * y = a  iff  (x, y) is (a, e) or (e, a)
  W3: a is noncentral.
W1 pins a down uniquely.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from polyadic_semigroups.core.errors import AlgebraError
from polyadic_semigroups.core.tables import MonoidDesc, relabel_monoid

Condition = Literal["W1", "W2", "W3"]

# W3 needs a third element to witness noncentrality
MIN_W_MONOID_ORDER = 4


@dataclass(frozen=True)
class WChecks:
    w1: bool
    w2: bool
    w3: bool


@dataclass(frozen=True)
class WMonoidWitness:
    """A monoid certified as a W-monoid for the element `a`."""

    monoid: MonoidDesc
    a: int
    checks: WChecks = WChecks(True, True, True)

    @property
    def e(self) -> int:
        return self.monoid.neutral

    @property
    def order(self) -> int:
        return self.monoid.order

    def core_elements(self) -> list[int]:
        """M without a and e, in ascending order."""
        return [x for x in range(self.order) if x not in (self.a, self.e)]


@dataclass(frozen=True)
class WMonoidFailure:
    """Which condition broke first, with a violating pair where one exists."""

    condition: Condition
    reason: str
    witness: tuple[int, int] | None = None


def _factorizations(monoid: MonoidDesc, target: int) -> list[tuple[int, int]]:
    return [(int(x), int(y)) for x, y in np.argwhere(monoid.op.matrix == target)]


def w1_holds(monoid: MonoidDesc, a: int) -> bool:
    e = monoid.neutral
    return a != e and sorted(_factorizations(monoid, e)) == sorted({(a, a), (e, e)})


def w2_holds(monoid: MonoidDesc, a: int) -> bool:
    e = monoid.neutral
    return a != e and sorted(_factorizations(monoid, a)) == sorted({(a, e), (e, a)})


def w3_holds(monoid: MonoidDesc, a: int) -> bool:
    m = monoid.op.matrix
    return not np.array_equal(m[a, :], m[:, a])


def check_w_monoid(monoid: MonoidDesc) -> WMonoidWitness | WMonoidFailure:
    """Find the special element a and check W1, W2 and W3 in that order.

    Below order 4 the result is always a failure whose reason says "too small".
    """
    result = _check_conditions(monoid)
    if monoid.order >= MIN_W_MONOID_ORDER:
        return result
    too_small = f"order {monoid.order} is too small for a W-monoid"
    if isinstance(result, WMonoidFailure):
        return WMonoidFailure(result.condition, f"{result.reason}; {too_small}", result.witness)
    return WMonoidFailure("W3", too_small)


def _check_conditions(monoid: MonoidDesc) -> WMonoidWitness | WMonoidFailure:
    e = monoid.neutral
    nontrivial = [p for p in _factorizations(monoid, e) if p != (e, e)]
    candidates = [x for x in range(monoid.order) if x != e and w1_holds(monoid, x)]
    assert len(candidates) <= 1, f"W1 holds for several elements: {candidates}"

    if not candidates:
        if not nontrivial:
            return WMonoidFailure("W1", "e has no factorization other than e * e")
        off_diagonal = [(x, y) for x, y in nontrivial if x != y]
        witness = off_diagonal[0] if off_diagonal else nontrivial[1]
        return WMonoidFailure(
            "W1", f"e = {witness[0]} * {witness[1]} is not of the form a * a", witness
        )

    a = candidates[0]
    stray = [p for p in _factorizations(monoid, a) if p not in ((a, e), (e, a))]
    if stray:
        return WMonoidFailure(
            "W2", f"a = {stray[0][0]} * {stray[0][1]} with neither factor e", stray[0]
        )

    if not w3_holds(monoid, a):
        return WMonoidFailure("W3", f"{a} commutes with every element")

    return WMonoidWitness(monoid=monoid, a=a)


def is_w_monoid(monoid: MonoidDesc) -> bool:
    return isinstance(check_w_monoid(monoid), WMonoidWitness)


def find_unit_triple_factorization(monoid: MonoidDesc) -> tuple[int, int, int] | None:
    """First (x, y, z) with x * y * z = e and e not among them.

    Never found in a W-monoid.
    """
    m = monoid.op.matrix
    e = monoid.neutral
    hits = np.argwhere(m[m, :] == e)
    for x, y, z in hits:
        if e not in (x, y, z):
            return int(x), int(y), int(z)
    return None


def unit_factorizations(
    monoid: MonoidDesc, carrier: int | Sequence[int]
) -> list[tuple[int, int]]:
    """Pairs from `carrier` (a count of leading elements, or a list) multiplying to e."""
    elements = range(carrier) if isinstance(carrier, int) else carrier
    inside = set(elements)
    pairs = _factorizations(monoid, monoid.neutral)
    return [(x, y) for x, y in pairs if x in inside and y in inside]


def parity_check(witness: WMonoidWitness, args: Sequence[int]) -> int:
    """Product of a word over {a, e}: a for an odd count of a's, else e."""
    a, e = witness.a, witness.e
    for x in args:
        if x not in (a, e):
            raise AlgebraError(f"parity_check takes only a={a} and e={e}, got {x}")
    product = witness.monoid.fold(args)
    expected = a if sum(1 for x in args if x == a) % 2 else e
    assert product == expected, f"parity rule failed: {product} != {expected}"
    return product


def standard_placement(witness: WMonoidWitness) -> WMonoidWitness:
    """Relabel so the core keeps its relative order, a = |S| and e = |S| + 1."""
    core = witness.core_elements()
    sigma = [0] * witness.order
    for new, old in enumerate(core):
        sigma[old] = new
    sigma[witness.a] = len(core)
    sigma[witness.e] = len(core) + 1
    return WMonoidWitness(
        monoid=relabel_monoid(witness.monoid, sigma), a=len(core), checks=witness.checks
    )
