"""W-monoid census, computed along two independent routes.

Route A generates monoids already in standard W-placement (a = order-2,
e = order-1, S closed) and keeps those that pass the W-monoid check.
Route B applies every admissible bitranslation of every semigroup of order
order-2. Both must produce the same isomorphism classes.
"""

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core.errors import EnumerationCapError, RouteDisagreementError
from polyadic_semigroups.enumerate.canonical import CanonicalForm, canonical_form
from polyadic_semigroups.enumerate.generate import (
    enumerate_monoids,
    enumerate_semigroups,
    enumerate_w_shaped,
)
from polyadic_semigroups.wmonoid.bitranslation import (
    decompose,
    enumerate_bitranslations,
    from_bitranslation,
)
from polyadic_semigroups.wmonoid.witness import (
    WMonoidFailure,
    WMonoidWitness,
    check_w_monoid,
    standard_placement,
)


def w_monoids_route_a(order: int, *, jobs: int = 1) -> list[WMonoidWitness]:
    """Filter standard-placed monoid candidates through check_w_monoid."""
    found = []
    for monoid in enumerate_w_shaped(order, jobs=jobs):
        result = check_w_monoid(monoid)
        if isinstance(result, WMonoidWitness):
            found.append(result)
    return found


def w_monoids_by_filtering(
    order: int, *, max_order: int | None = None, jobs: int = 1
) -> list[WMonoidWitness]:
    """Filter the full monoid enumeration; `max_order` overrides the monoid cap."""
    found = []
    for monoid in enumerate_monoids(order, max_order=max_order, jobs=jobs):
        result = check_w_monoid(monoid)
        if isinstance(result, WMonoidWitness):
            found.append(standard_placement(result))
    return found


def w_monoids_route_b(order: int) -> list[WMonoidWitness]:
    """Build from bitranslations of every semigroup of order-2, one per class."""
    if order < 3:
        return []
    seen: dict[CanonicalForm, WMonoidWitness] = {}
    for semigroup in enumerate_semigroups(order - 2):
        for bt in enumerate_bitranslations(semigroup):
            monoid = from_bitranslation(bt)
            key = canonical_form(monoid)
            if key in seen:
                continue
            result = check_w_monoid(monoid)
            if isinstance(result, WMonoidFailure):
                raise RouteDisagreementError(
                    f"bitranslation construction gave a non-W-monoid ({result.condition}): "
                    f"{monoid.op.tolist()}"
                )
            seen[key] = result
    return [seen[key] for key in sorted(seen)]


def classes(witnesses: list[WMonoidWitness]) -> set[CanonicalForm]:
    return {canonical_form(w.monoid) for w in witnesses}


def roundtrips(witness: WMonoidWitness) -> bool:
    """decompose then from_bitranslation gives back the standard placement."""
    rebuilt = from_bitranslation(decompose(witness))
    return rebuilt.op == standard_placement(witness).monoid.op


def enumerate_w_monoids(
    order: int,
    *,
    cross_check: bool = True,
    max_order: int | None = None,
    jobs: int = 1,
) -> list[WMonoidWitness]:
    """All W-monoids of the given order up to isomorphism, standard-placed.

    With cross_check the bitranslation route is computed too and must agree.
    """
    cap = max_order if max_order is not None else get_config().w_monoid_max_order
    if order > cap:
        raise EnumerationCapError("W-monoid enumeration", order, cap)
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")

    route_a = w_monoids_route_a(order, jobs=jobs)
    if cross_check:
        a_classes = classes(route_a)
        b_classes = classes(w_monoids_route_b(order))
        if a_classes != b_classes:
            raise RouteDisagreementError(
                f"order {order}: {len(a_classes - b_classes)} classes only by filtering, "
                f"{len(b_classes - a_classes)} only by bitranslations"
            )
    return route_a
