"""The smallest carrier carrying an n-ary IN-semigroup.

Restricting the n-ary extension of a W-monoid to M - {e} gives an IN-semigroup
on one element fewer, and every IN-semigroup arises that way, so the least
order is (least W-monoid order) - 1.
"""

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core.errors import (
    EnumerationCapError,
    EvenArityError,
    RouteDisagreementError,
)
from polyadic_semigroups.enumerate.catalog import CatalogRecord, nary_record
from polyadic_semigroups.enumerate.survey import EXHAUSTIVE_LIMIT, survey_nary
from polyadic_semigroups.enumerate.wmonoids import enumerate_w_monoids
from polyadic_semigroups.wmonoid.in_semigroup import in_semigroup_from_w_monoid


def minimal_in_semigroup(
    n: int, *, cross_check: bool = True, max_order: int | None = None
) -> tuple[int, CatalogRecord]:
    """Least order of an n-ary IN-semigroup, with the exemplar from the first W-monoid.

    With cross_check, every smaller order that can be surveyed exhaustively
    must have no IN-semigroup at all.
    """
    if n % 2 == 0:
        raise EvenArityError(n)
    cap = max_order if max_order is not None else get_config().w_monoid_max_order
    for order in range(1, cap + 1):
        witnesses = enumerate_w_monoids(order, cross_check=False, max_order=cap)
        if not witnesses:
            continue
        op = in_semigroup_from_w_monoid(witnesses[0], n)
        if cross_check:
            for smaller in range(1, op.order):
                if smaller ** (smaller**n) > EXHAUSTIVE_LIMIT:
                    continue
                report = survey_nary(smaller, n)
                if report.in_classes:
                    raise RouteDisagreementError(
                        f"survey found an {n}-ary IN-semigroup on {smaller} elements"
                    )
        return op.order, nary_record(op, kind="in_semigroup", reductions=0)
    raise EnumerationCapError(f"the search for a {n}-ary IN-semigroup", cap + 1, cap)
