"""Building n-ary IN-semigroups from W-monoids."""

from polyadic_semigroups.core.errors import EvenArityError
from polyadic_semigroups.core.extension import NotClosed, nary_extension, restrict
from polyadic_semigroups.core.tables import FiniteNaryOp
from polyadic_semigroups.wmonoid.witness import WMonoidWitness


def in_semigroup_from_w_monoid(
    witness: WMonoidWitness, n: int, *, cell_cap: int | None = None
) -> FiniteNaryOp:
    """The n-ary extension of the W-monoid, restricted to M - {e}.

    Only odd n work: for even n the result would have a as a neutral element.
    """
    if n % 2 == 0:
        raise EvenArityError(n)
    if n < 3:
        raise ValueError(f"arity must be odd and at least 3, got {n}")
    extension = nary_extension(witness.monoid, n, cell_cap=cell_cap)
    carrier = [x for x in range(witness.order) if x != witness.e]
    op = restrict(extension, carrier)
    assert not isinstance(op, NotClosed), f"W-monoid extension escapes M - {{e}} at {op}"
    return op
