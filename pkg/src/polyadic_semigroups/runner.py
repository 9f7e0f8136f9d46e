"""Runner for `alg verify-paper`: re-derives every desk-scale claim in stages."""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from polyadic_semigroups.config import get_config
from polyadic_semigroups.core import (
    AlgebraError,
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    adjoin_identity,
    is_associative_binary,
    kfold_law_holds,
    nary_extension,
    neutral_elements,
    reduce_via_neutral,
    restrict,
)
from polyadic_semigroups.core.errors import RouteDisagreementError, UndecidedError
from polyadic_semigroups.core.tables import binary_neutrals
from polyadic_semigroups.enumerate import (
    canonical_form,
    enumerate_associative_nary,
    enumerate_semigroups,
    enumerate_w_monoids,
    minimal_in_semigroup,
    rees_equivalence_counterexample,
    roundtrips,
    survey_nary,
    w_monoids_by_filtering,
)
from polyadic_semigroups.fixtures import load_fixture
from polyadic_semigroups.hooks import SearchHooks, StageHooks
from polyadic_semigroups.report import CommandReport, Verdict
from polyadic_semigroups.search import (
    SearchOutcome,
    brute_force_adjunctions,
    brute_force_reductions,
    find_adjunctions,
    find_reductions,
    is_in_semigroup,
)
from polyadic_semigroups.wmonoid import (
    Bitranslation,
    WMonoidWitness,
    check_w_monoid,
    decompose,
    from_bitranslation,
    from_involution,
    in_semigroup_from_w_monoid,
    inner_bitranslation,
)

# t12 in the S3 fixture
S3_TRANSPOSITION = 1


@dataclass
class VerificationSettings:
    """Knobs for one verification run.

    fast keeps every oracle at order 2, stops the W-monoid enumeration at
    order 5 and skips the order-7 IN-semigroup search.
    """

    fast: bool = False
    timeout_secs: float | None = None
    jobs: int | None = None
    search_hooks: SearchHooks | None = None

    @property
    def oracle_order(self) -> int:
        return min(2 if self.fast else 3, get_config().oracle_max_order)

    @property
    def w_monoid_order(self) -> int:
        return min(5 if self.fast else 6, get_config().w_monoid_max_order)


@dataclass
class StageResult:
    name: str
    verdict: Verdict
    failures: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)


class _Checks:
    """Collects failed expectations for one stage."""

    def __init__(self, settings: VerificationSettings):
        self.settings = settings
        self.failures: list[str] = []
        self.data: dict[str, Any] = {}

    def expect(self, condition: bool, message: str) -> None:
        if not condition:
            self.failures.append(message)

    def reductions(self, op: FiniteNaryOp, limit: int | None = None) -> SearchOutcome[BinaryOpDesc]:
        outcome = find_reductions(
            op,
            limit,
            timeout_secs=self.settings.timeout_secs,
            jobs=self.settings.jobs,
            hooks=self.settings.search_hooks,
        )
        if not outcome.exhausted:
            raise UndecidedError(f"reduction search on order {op.order} timed out")
        return outcome

    def adjunctions(self, op: FiniteNaryOp, limit: int | None = None) -> SearchOutcome[MonoidDesc]:
        outcome = find_adjunctions(
            op,
            limit,
            timeout_secs=self.settings.timeout_secs,
            jobs=self.settings.jobs,
            hooks=self.settings.search_hooks,
        )
        if not outcome.exhausted:
            raise UndecidedError(f"adjunction search on order {op.order} timed out")
        return outcome

    def in_semigroup(self, op: FiniteNaryOp, label: str) -> None:
        verdict = is_in_semigroup(
            op,
            timeout_secs=self.settings.timeout_secs,
            jobs=self.settings.jobs,
            hooks=self.settings.search_hooks,
        )
        if verdict.status == "undecided":
            raise UndecidedError(f"{label}: {verdict.reason}")
        self.expect(verdict.is_yes, f"{label} is not an IN-semigroup ({verdict.reason})")
        if verdict.adjunctions is not None:
            for monoid in verdict.adjunctions.solutions:
                self.expect(
                    isinstance(check_w_monoid(monoid), WMonoidWitness),
                    f"{label}: an adjunction monoid is not a W-monoid",
                )


def _kfold_roundtrips(checks: _Checks) -> None:
    """Reducing at a neutral element recovers the operation, uniquely."""
    checked = 0
    for order in range(1, checks.settings.oracle_order + 1):
        for op in enumerate_associative_nary(order, 3):
            for e in sorted(neutral_elements(op)):
                checked += 1
                b = reduce_via_neutral(op, e).op
                label = f"{op.tolist()} at e={e}"
                checks.expect(is_associative_binary(b), f"{label}: reduction not associative")
                checks.expect(nary_extension(b, 3) == op, f"{label}: extension differs")
                checks.expect(kfold_law_holds(op, b, e), f"{label}: k-fold law fails")
                with_e = [
                    r for r in checks.reductions(op).solutions if e in binary_neutrals(r.matrix)
                ]
                checks.expect(with_e == [b], f"{label}: {len(with_e)} reductions with neutral e")
    checks.data["neutral_pairs"] = checked


def _constructive_adjunction(checks: _Checks) -> None:
    """Every reducible ternary semigroup admits an adjunction."""
    checked = 0
    for order in range(1, checks.settings.oracle_order + 1):
        for b in enumerate_semigroups(order):
            checked += 1
            op = nary_extension(b, 3)
            monoid = adjoin_identity(b)
            back = restrict(nary_extension(monoid, 3), range(order))
            checks.expect(back == op, f"{b.tolist()}: adjoined extension does not restrict to F")
            found = checks.adjunctions(op, 1)
            checks.expect(bool(found.solutions), f"{b.tolist()}: no adjunction found")
    checks.data["semigroups"] = checked


def _affine_irreducible(checks: _Checks) -> None:
    """x - y + z mod 3 is irreducible and admits no adjunction."""
    op = load_fixture("aff3").op
    reductions = checks.reductions(op)
    adjunctions = checks.adjunctions(op)
    checks.expect(not reductions.solutions, "aff3 has a reduction")
    checks.expect(not adjunctions.solutions, "aff3 admits an adjunction")
    if op.order <= checks.settings.oracle_order:
        checks.expect(not brute_force_reductions(op), "aff3 oracle found a reduction")
        checks.expect(not brute_force_adjunctions(op), "aff3 oracle found an adjunction")
        checks.data["oracle"] = True
    else:
        checks.data["oracle"] = False
    checks.data["nodes"] = reductions.nodes_visited + adjunctions.nodes_visited


def _extension_two_reductions(checks: _Checks) -> None:
    """x + y + z mod 2 has exactly the reductions x + y and x + y + 1."""
    op = load_fixture("extz2").op
    found = checks.reductions(op).tables
    checks.expect(found == [[0, 1, 1, 0], [1, 0, 0, 1]], f"extz2 reductions are {found}")
    oracle = [b.tolist() for b in brute_force_reductions(op)]
    checks.expect(oracle == found, "extz2 search and oracle disagree")
    checks.data["reductions"] = found


def _even_arity_survey(checks: _Checks) -> None:
    """On 2 elements, quaternary adjunction coincides with reducibility."""
    report = survey_nary(2, 4, timeout_secs=checks.settings.timeout_secs)
    if report.undecided_classes:
        raise UndecidedError(f"{report.undecided_classes} classes undecided")
    checks.expect(not report.even_arity_violations, "adjunction without reducibility at arity 4")
    checks.expect(report.in_classes == 0, f"{report.in_classes} quaternary IN-semigroups")
    checks.data.update(
        associative_tables=report.associative_tables,
        associative_classes=report.associative_classes,
        reducible_classes=report.reducible_classes,
    )


def _construction_pipelines(checks: _Checks) -> None:
    """The S3, EX46 and W4 construction pipelines end in IN-semigroups."""
    s3 = load_fixture("s3").monoid()
    s3_monoid = from_involution(s3, S3_TRANSPOSITION)
    s3_w = check_w_monoid(s3_monoid)
    checks.expect(isinstance(s3_w, WMonoidWitness), "S3 involution construction is not W")
    if isinstance(s3_w, WMonoidWitness):
        inner = inner_bitranslation(s3, S3_TRANSPOSITION)
        bt = decompose(s3_w)
        checks.expect(
            (bt.left, bt.right) == (inner.left, inner.right),
            "S3 construction does not decompose to the inner bitranslation",
        )
        in7 = in_semigroup_from_w_monoid(s3_w, 3)
        checks.data["in7_order"] = in7.order
        if not checks.settings.fast:
            checks.in_semigroup(in7, "IN7")

    for carrier, expected in (("ex46-s", "ex46"), ("lz2-bt", "w4")):
        doc = load_fixture(carrier)
        assert doc.left is not None and doc.right is not None
        monoid = from_bitranslation(Bitranslation(doc.binary(), doc.left, doc.right))
        witness = check_w_monoid(monoid)
        checks.expect(isinstance(witness, WMonoidWitness), f"{carrier} construction is not W")
        checks.expect(
            canonical_form(monoid) == canonical_form(load_fixture(expected).monoid()),
            f"{carrier} construction differs from the {expected} fixture",
        )
        if isinstance(witness, WMonoidWitness):
            op = in_semigroup_from_w_monoid(witness, 3)
            checks.expect(not neutral_elements(op), f"{expected} restriction has a neutral")
            checks.in_semigroup(op, f"{expected} restriction")
            checks.data[f"{expected}_order"] = monoid.order


def _w_monoid_correspondence(checks: _Checks) -> None:
    """W-monoids give IN-semigroups, and IN-semigroups only come from W-monoids."""
    built = 0
    for order in range(1, checks.settings.w_monoid_order + 1):
        for witness in enumerate_w_monoids(order, cross_check=False):
            checks.in_semigroup(in_semigroup_from_w_monoid(witness, 3), f"W-monoid {order}")
            built += 1
    checks.data["w_monoids"] = built

    for order in range(1, checks.settings.oracle_order + 1):
        report = survey_nary(order, 3, timeout_secs=checks.settings.timeout_secs)
        if report.undecided_classes:
            raise UndecidedError(f"ternary survey at order {order} left classes undecided")
        checks.expect(report.consistent, f"order {order}: adjunction monoid that is not W")
        checks.data[f"in_classes_{order}"] = report.in_classes
    checks.expect(checks.data.get("in_classes_2", 0) == 0, "ternary IN-semigroup on 2 elements")


def _route_agreement(checks: _Checks) -> None:
    """Filtering monoids and applying bitranslations find the same W-monoids."""
    counts: dict[int, int] = {}
    # the full run filters every monoid through the top W-monoid order
    filter_top = 4 if checks.settings.fast else checks.settings.w_monoid_order
    jobs = checks.settings.jobs or get_config().jobs
    for order in range(1, checks.settings.w_monoid_order + 1):
        try:
            witnesses = enumerate_w_monoids(order, cross_check=True, jobs=jobs)
        except RouteDisagreementError as e:
            checks.failures.append(str(e))
            continue
        counts[order] = len(witnesses)
        if order <= filter_top:
            by_filter = w_monoids_by_filtering(order, max_order=filter_top, jobs=jobs)
            filtered = {canonical_form(w.monoid) for w in by_filter}
            checks.expect(
                filtered == {canonical_form(w.monoid) for w in witnesses},
                f"order {order}: full monoid filtering disagrees",
            )
        for w in witnesses:
            checks.expect(roundtrips(w), f"{w.monoid.op.tolist()} does not roundtrip")
    checks.expect(counts.get(4) == 2, f"expected 2 W-monoids of order 4, got {counts.get(4)}")
    checks.data["counts"] = counts
    checks.data["filtered_through"] = filter_top


def _rees_criterion(checks: _Checks) -> None:
    """W1 and W2 together match the Rees quotient criterion."""
    top = 4 if checks.settings.fast else get_config().monoid_max_order
    for order in range(3, top + 1):
        found = rees_equivalence_counterexample(order)
        checks.expect(found is None, f"order {order}: Rees criterion disagrees at {found}")
    checks.data["max_order"] = top


def _involution_separation(checks: _Checks) -> None:
    """The EX46 semigroup has no neutral element, so no involution builds EX46."""
    s = load_fixture("ex46-s").binary()
    neutrals = binary_neutrals(s.matrix)
    checks.expect(not neutrals, f"ex46 carrier has neutral elements {neutrals}")


def _minimal_in(checks: _Checks) -> None:
    """The smallest ternary IN-semigroup has 3 elements."""
    order, record = minimal_in_semigroup(3, cross_check=True)
    checks.expect(order == 3, f"minimal ternary IN-semigroup has order {order}")
    w4_op = in_semigroup_from_w_monoid(_w4_witness(), 3)
    checks.expect(
        canonical_form(record.operation()) == canonical_form(w4_op),
        "exemplar is not the W4 restriction",
    )
    checks.data.update(order=order, table=record.table)


def _w4_witness() -> WMonoidWitness:
    result = check_w_monoid(load_fixture("w4").monoid())
    if not isinstance(result, WMonoidWitness):
        raise AlgebraError("w4 fixture is not a W-monoid")
    return result


STAGES: list[tuple[str, Callable[[_Checks], None]]] = [
    ("kfold-roundtrips", _kfold_roundtrips),
    ("constructive-adjunction", _constructive_adjunction),
    ("aff3-irreducible", _affine_irreducible),
    ("extz2-reductions", _extension_two_reductions),
    ("even-arity", _even_arity_survey),
    ("constructions", _construction_pipelines),
    ("w-monoid-correspondence", _w_monoid_correspondence),
    ("route-agreement", _route_agreement),
    ("rees-criterion", _rees_criterion),
    ("involution-separation", _involution_separation),
    ("minimal-in", _minimal_in),
]


def run_stage(
    name: str, stage: Callable[[_Checks], None], settings: VerificationSettings
) -> StageResult:
    """Run one stage; exceptions become error or undecided verdicts."""
    checks = _Checks(settings)
    try:
        stage(checks)
    except UndecidedError as e:
        return StageResult(name, "undecided", [str(e)], checks.data)
    except AlgebraError as e:
        return StageResult(name, "error", [f"{type(e).__name__}: {e}"], checks.data)
    verdict: Verdict = "fail" if checks.failures else "pass"
    return StageResult(name, verdict, checks.failures, checks.data)


_SEVERITY: tuple[Verdict, ...] = ("fail", "error", "undecided")


def _overall(results: list[StageResult]) -> Verdict:
    verdicts = {r.verdict for r in results}
    return next((v for v in _SEVERITY if v in verdicts), "pass")


def run_verification(
    settings: VerificationSettings | None = None,
    *,
    only: list[str] | None = None,
    hooks: StageHooks | None = None,
) -> CommandReport:
    """Run every stage in order and fold the results into one report.

    Args:
        settings: Run settings (fast mode, timeout, jobs).
        only: Restrict to these stage names.
        hooks: Stage progress hooks.

    Returns:
        A CommandReport whose verdict is the worst stage verdict.
    """
    settings = settings or VerificationSettings()
    hooks = hooks or StageHooks()
    results = []
    for name, stage in STAGES:
        if only and name not in only:
            continue
        hooks.on_stage_start(name)
        result = run_stage(name, stage, settings)
        hooks.on_stage_end(name, result.verdict)
        results.append(result)

    detail = []
    for r in results:
        detail.append(f"{r.verdict.upper():9} {r.name}")
        detail.extend(f"          {f}" for f in r.failures)
    return CommandReport(
        command="verify-paper",
        verdict=_overall(results),
        detail=detail,
        data={
            "fast": settings.fast,
            "stages": [
                {"name": r.name, "verdict": r.verdict, "failures": r.failures, "data": r.data}
                for r in results
            ],
        },
    )
