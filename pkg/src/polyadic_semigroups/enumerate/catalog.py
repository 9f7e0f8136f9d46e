"""Catalog records, one JSON object per line.

Field order on disk: kind, order, arity, table, neutral, certificates.
Tables are flat row-major integer arrays.
"""

from collections.abc import Iterable
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from polyadic_semigroups.core.associativity import is_associative
from polyadic_semigroups.core.errors import AlgebraError, CatalogIOError
from polyadic_semigroups.core.neutral import neutral_elements
from polyadic_semigroups.core.tables import BinaryOpDesc, FiniteNaryOp, MonoidDesc
from polyadic_semigroups.search.adjunctions import find_adjunctions
from polyadic_semigroups.search.reductions import find_reductions
from polyadic_semigroups.wmonoid.bitranslation import decompose
from polyadic_semigroups.wmonoid.witness import WMonoidWitness, check_w_monoid

RecordKind = Literal["semigroup", "monoid", "wmonoid", "nary", "in_semigroup"]


class BitranslationCertificate(BaseModel):
    left: list[int]
    right: list[int]


class Certificates(BaseModel):
    """Facts computed about a table; each one can be re-checked."""

    w_element: int | None = None
    bitranslation: BitranslationCertificate | None = None
    reductions: int | None = None
    adjunctions: int | None = None


class CatalogRecord(BaseModel):
    kind: RecordKind
    order: int = Field(ge=1)
    arity: int = Field(ge=2)
    table: list[int]
    neutral: int | None = None
    certificates: Certificates = Field(default_factory=Certificates)

    def operation(self) -> FiniteNaryOp:
        if self.arity == 2:
            return BinaryOpDesc(self.order, self.table)
        return FiniteNaryOp(self.order, self.arity, self.table)

    def monoid(self) -> MonoidDesc:
        op = self.operation()
        if self.neutral is None or not isinstance(op, BinaryOpDesc):
            raise AlgebraError(f"{self.kind} record has no monoid structure")
        return MonoidDesc(op, self.neutral)

    def verify(self, *, timeout_secs: float | None = None) -> list[str]:
        """Re-check every certificate against the table; returns the problems found.

        Each search runs under `timeout_secs` (default: config). A search cut
        short by its deadline is reported as undecided, never as a mismatch.
        """
        problems: list[str] = []
        try:
            op = self.operation()
            if self.kind in ("monoid", "wmonoid"):
                self.monoid()
            elif not is_associative(op):
                problems.append("table is not associative")
        except AlgebraError as e:
            return [str(e)]

        certs = self.certificates
        if self.kind == "wmonoid":
            result = check_w_monoid(self.monoid())
            if not isinstance(result, WMonoidWitness):
                problems.append(f"not a W-monoid: {result.reason}")
            else:
                if certs.w_element is not None and certs.w_element != result.a:
                    problems.append(f"special element is {result.a}, not {certs.w_element}")
                if certs.bitranslation is not None:
                    bt = decompose(result)
                    if (list(bt.left), list(bt.right)) != (
                        certs.bitranslation.left,
                        certs.bitranslation.right,
                    ):
                        problems.append("bitranslation does not match the decomposition")

        if certs.reductions is not None or self.kind == "in_semigroup":
            reductions = find_reductions(op, timeout_secs=timeout_secs)
            found = len(reductions.solutions)
            if not reductions.exhausted:
                problems.append(f"reductions undecided: timed out after {found} found")
            elif certs.reductions is not None and found != certs.reductions:
                problems.append(f"{found} reductions, not {certs.reductions}")
            if self.kind == "in_semigroup" and reductions.solutions:
                problems.append("IN-semigroup record is reducible")
        if certs.adjunctions is not None or self.kind == "in_semigroup":
            adjunctions = find_adjunctions(op, timeout_secs=timeout_secs)
            found = len(adjunctions.solutions)
            if not adjunctions.exhausted:
                problems.append(f"adjunctions undecided: timed out after {found} found")
            elif certs.adjunctions is not None and found != certs.adjunctions:
                problems.append(f"{found} adjunctions, not {certs.adjunctions}")
            if self.kind == "in_semigroup" and adjunctions.certified_empty:
                problems.append("IN-semigroup record admits no adjunction")
        if self.kind == "in_semigroup" and neutral_elements(op):
            problems.append("IN-semigroup record has a neutral element")
        return problems


def semigroup_record(op: BinaryOpDesc) -> CatalogRecord:
    return CatalogRecord(kind="semigroup", order=op.order, arity=2, table=op.tolist())


def monoid_record(monoid: MonoidDesc) -> CatalogRecord:
    return CatalogRecord(
        kind="monoid",
        order=monoid.order,
        arity=2,
        table=monoid.op.tolist(),
        neutral=monoid.neutral,
    )


def w_monoid_record(witness: WMonoidWitness) -> CatalogRecord:
    bt = decompose(witness)
    return CatalogRecord(
        kind="wmonoid",
        order=witness.order,
        arity=2,
        table=witness.monoid.op.tolist(),
        neutral=witness.e,
        certificates=Certificates(
            w_element=witness.a,
            bitranslation=BitranslationCertificate(left=list(bt.left), right=list(bt.right)),
        ),
    )


def nary_record(
    op: FiniteNaryOp,
    *,
    kind: RecordKind = "nary",
    reductions: int | None = None,
    adjunctions: int | None = None,
) -> CatalogRecord:
    return CatalogRecord(
        kind=kind,
        order=op.order,
        arity=op.arity,
        table=op.tolist(),
        certificates=Certificates(reductions=reductions, adjunctions=adjunctions),
    )


def emit_catalog(records: Iterable[CatalogRecord], destination: Path) -> int:
    """Write records as JSON lines; returns the number written."""
    destination = Path(destination)
    count = 0
    try:
        destination.parent.mkdir(parents=True, exist_ok=True)
        with destination.open("w", encoding="utf-8") as f:
            for record in records:
                f.write(record.model_dump_json() + "\n")
                count += 1
    except OSError as e:
        raise CatalogIOError(destination, e.strerror or str(e)) from e
    return count


def load_catalog(path: Path) -> list[CatalogRecord]:
    """Read a JSON-lines catalog back."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise CatalogIOError(path, e.strerror or str(e)) from e
    records = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            records.append(CatalogRecord.model_validate_json(line))
        except ValidationError as e:
            raise CatalogIOError(path, f"line {lineno}: {e.error_count()} validation errors") from e
    return records
