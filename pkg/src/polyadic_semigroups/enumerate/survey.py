"""Exhaustive surveys of small associative n-ary operations and small monoids."""

from collections.abc import Callable, Iterator
from typing import Literal

from pydantic import BaseModel, Field

from polyadic_semigroups.core.associativity import associative_mask
from polyadic_semigroups.core.errors import CapExceededError
from polyadic_semigroups.core.tables import FiniteNaryOp, MonoidDesc
from polyadic_semigroups.enumerate.canonical import (
    automorphism_count,
    canonical_form,
    permutation_group,
)
from polyadic_semigroups.enumerate.generate import enumerate_associative_nary, enumerate_monoids
from polyadic_semigroups.search.adjunctions import find_adjunctions
from polyadic_semigroups.search.oracles import iter_tables
from polyadic_semigroups.search.reductions import find_reductions
from polyadic_semigroups.wmonoid.rees import check_rees_T_iso
from polyadic_semigroups.wmonoid.witness import WMonoidWitness, check_w_monoid, w1_holds, w2_holds

SurveyMode = Literal["auto", "exhaustive", "backtrack"]

# Full table enumeration is used while order**(order**arity) stays below this
EXHAUSTIVE_LIMIT = 2**16
# Backtracking is only attempted for tables of at most this many cells
BACKTRACK_CELL_LIMIT = 27
EXEMPLAR_LIMIT = 5


class SurveyReport(BaseModel):
    """Tallies over all associative tables of one order and arity.

    Counts named *_classes are up to isomorphism; associative_tables and
    in_tables count labeled tables.
    """

    order: int
    arity: int
    mode: Literal["exhaustive", "backtrack"]
    associative_tables: int = 0
    associative_classes: int = 0
    reducible_classes: int = 0
    adjunction_classes: int = 0
    in_classes: int = 0
    in_tables: int = 0
    undecided_classes: int = 0
    forward_violations: list[list[int]] = Field(default_factory=list)
    even_arity_violations: list[list[int]] = Field(default_factory=list)
    exemplars: list[list[int]] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """No class contradicts the W-monoid correspondence."""
        return not self.forward_violations and not self.even_arity_violations


def _exhaustive(order: int, arity: int) -> Iterator[tuple[FiniteNaryOp, int]]:
    """(class representative, labeled count) by filtering every table."""
    classes: dict[tuple[int, ...], tuple[FiniteNaryOp, int]] = {}
    for tables in iter_tables(order, order**arity):
        for table in tables[associative_mask(tables, order, arity)]:
            op = FiniteNaryOp(order, arity, table)
            key = canonical_form(op).table
            rep, count = classes.get(key, (op, 0))
            classes[key] = (rep, count + 1)
    for key in sorted(classes):
        yield classes[key]


def _backtrack(order: int, arity: int) -> Iterator[tuple[FiniteNaryOp, int]]:
    group = len(permutation_group(order))
    for op in enumerate_associative_nary(order, arity):
        yield op, group // automorphism_count(op)


def survey_nary(
    order: int,
    arity: int,
    predicate: Callable[[FiniteNaryOp], bool] | None = None,
    *,
    mode: SurveyMode = "auto",
    timeout_secs: float | None = None,
) -> SurveyReport:
    """Classify every associative arity-n table on `order` elements.

    For each isomorphism class: is it reducible, which monoids adjoin a
    neutral element, is it an IN-semigroup. Every adjunction monoid of an
    IN-semigroup must be a W-monoid, and for even arity adjunction must
    coincide with reducibility; violations are recorded.

    Args:
        order: Carrier size.
        arity: n >= 2.
        predicate: Optional filter on class representatives.
        mode: "exhaustive" filters all order**(order**arity) tables,
            "backtrack" generates associative tables directly, "auto" picks.
        timeout_secs: Per-search deadline.
    """
    exhaustive_ok = order ** (order**arity) <= EXHAUSTIVE_LIMIT
    if mode == "auto":
        mode = "exhaustive" if exhaustive_ok else "backtrack"
    if mode == "exhaustive" and not exhaustive_ok:
        raise CapExceededError("an exhaustive survey", order ** (order**arity), EXHAUSTIVE_LIMIT)
    if mode == "backtrack" and order**arity > BACKTRACK_CELL_LIMIT:
        raise CapExceededError("a backtracking survey", order**arity, BACKTRACK_CELL_LIMIT)

    report = SurveyReport(order=order, arity=arity, mode=mode)
    source = _exhaustive(order, arity) if mode == "exhaustive" else _backtrack(order, arity)
    for op, labeled in source:
        if predicate is not None and not predicate(op):
            continue
        report.associative_tables += labeled
        report.associative_classes += 1

        reductions = find_reductions(op, 1, timeout_secs=timeout_secs)
        adjunctions = find_adjunctions(op, None, timeout_secs=timeout_secs)
        if not (reductions.exhausted and adjunctions.exhausted):
            report.undecided_classes += 1
            continue

        reducible = bool(reductions.solutions)
        admits = bool(adjunctions.solutions)
        report.reducible_classes += reducible
        report.adjunction_classes += admits
        if arity % 2 == 0 and admits != reducible:
            report.even_arity_violations.append(op.tolist())
        if admits and not reducible:
            report.in_classes += 1
            report.in_tables += labeled
            if len(report.exemplars) < EXEMPLAR_LIMIT:
                report.exemplars.append(op.tolist())
            witnesses = [check_w_monoid(m) for m in adjunctions.solutions]
            if not all(isinstance(w, WMonoidWitness) for w in witnesses):
                report.forward_violations.append(op.tolist())
    return report


def rees_equivalence_counterexample(order: int) -> tuple[MonoidDesc, int] | None:
    """A monoid and element a where W1+W2 and the Rees criterion disagree.

    Orders below 3 are skipped: the ideal is empty there and the criterion
    degenerates.
    """
    if order < 3:
        return None
    for monoid in enumerate_monoids(order):
        for a in range(order):
            if a == monoid.neutral:
                continue
            rees = check_rees_T_iso(monoid, a, monoid.neutral)
            if (w1_holds(monoid, a) and w2_holds(monoid, a)) != (rees.ideal_ok and rees.iso_to_T):
                return monoid, a
    return None
