"""Reading and writing the line-oriented `.alg` text format.

    # comment
    kind=nary            (nary | binary | monoid)
    arity=3              (nary only)
    order=3
    names=a b c          (optional)
    neutral=0            (monoid only)
    table=
    0 1 2 ...            (order**arity integers, row-major, any line breaks)
    bt=                  (optional, binary only)
    1 0                  (left map, `order` integers)
    0 1                  (right map, `order` integers)
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Literal, cast

from polyadic_semigroups.core.errors import AlgFormatError
from polyadic_semigroups.core.tables import (
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    Universe,
    binary_neutrals,
)

Kind = Literal["nary", "binary", "monoid"]

_KINDS: tuple[Kind, ...] = ("nary", "binary", "monoid")
_SCALAR_KEYS = ("kind", "arity", "order", "names", "neutral")
_STANZA_KEYS = ("table", "bt")


@dataclass(frozen=True)
class AlgDocument:
    """A parsed `.alg` file."""

    kind: Kind
    op: FiniteNaryOp
    neutral: int | None = None
    left: tuple[int, ...] | None = None
    right: tuple[int, ...] | None = None

    @property
    def has_bitranslation(self) -> bool:
        return self.left is not None and self.right is not None

    def binary(self) -> BinaryOpDesc:
        """The table as a binary operation; raises for n-ary files."""
        if not isinstance(self.op, BinaryOpDesc):
            raise AlgFormatError(f"expected a binary or monoid file, got kind={self.kind}")
        return self.op

    def monoid(self) -> MonoidDesc:
        """The table as a monoid; raises unless kind=monoid."""
        if self.kind != "monoid" or self.neutral is None:
            raise AlgFormatError(f"expected kind=monoid, got kind={self.kind}")
        return MonoidDesc(self.binary(), self.neutral)


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise AlgFormatError(f"{what}: {token!r} is not an integer", line) from e


def parse_alg(text: str) -> AlgDocument:
    """Parse `.alg` text. Raises AlgFormatError on any malformed input."""
    scalars: dict[str, tuple[str, int]] = {}
    stanzas: dict[str, list[tuple[int, int]]] = {}
    current: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in scalars or key in stanzas:
                raise AlgFormatError(f"duplicate header {key!r}", lineno)
            if key in _SCALAR_KEYS:
                if "table" in stanzas:
                    raise AlgFormatError(f"header {key!r} after table=", lineno)
                scalars[key] = (value, lineno)
                current = None
            elif key in _STANZA_KEYS:
                if key == "bt" and "table" not in stanzas:
                    raise AlgFormatError("bt= before table=", lineno)
                current = key
                stanzas[key] = []
                line = value
            else:
                raise AlgFormatError(f"unknown header {key!r}", lineno)
            if current is None:
                continue
        if current is None:
            raise AlgFormatError(f"unexpected content {line!r}", lineno)
        for token in line.split():
            stanzas[current].append((_parse_int(token, lineno, current), lineno))

    def scalar_int(key: str) -> int | None:
        if key not in scalars:
            return None
        value, lineno = scalars[key]
        return _parse_int(value, lineno, key)

    if "kind" not in scalars:
        raise AlgFormatError("missing kind= header")
    kind_value, kind_line = scalars["kind"]
    if kind_value not in _KINDS:
        raise AlgFormatError(
            f"kind must be one of {', '.join(_KINDS)}, got {kind_value!r}", kind_line
        )
    kind = cast(Kind, kind_value)

    order = scalar_int("order")
    if order is None:
        raise AlgFormatError("missing order= header")
    if order < 1:
        raise AlgFormatError(f"order must be positive, got {order}", scalars["order"][1])

    arity = scalar_int("arity")
    if kind == "nary":
        if arity is None:
            raise AlgFormatError("kind=nary needs an arity= header")
        if arity < 2:
            raise AlgFormatError(f"arity must be at least 2, got {arity}", scalars["arity"][1])
    elif arity is not None:
        raise AlgFormatError(f"arity= is not allowed for kind={kind}", scalars["arity"][1])
    else:
        arity = 2

    names: tuple[str, ...] | None = None
    if "names" in scalars:
        value, lineno = scalars["names"]
        names = tuple(value.split())
        try:
            Universe(order, names)
        except ValueError as e:
            raise AlgFormatError(str(e), lineno) from e
    universe = Universe(order, names)

    if "table" not in stanzas:
        raise AlgFormatError("missing table= stanza")
    cells = stanzas["table"]
    expected = order**arity
    if len(cells) != expected:
        raise AlgFormatError(f"table needs {expected} entries, got {len(cells)}")
    for value, lineno in cells:
        if not 0 <= value < order:
            raise AlgFormatError(f"table entry {value} out of range for order {order}", lineno)
    values = [v for v, _ in cells]

    op: FiniteNaryOp
    op = FiniteNaryOp(universe, arity, values) if kind == "nary" else BinaryOpDesc(universe, values)

    neutral = scalar_int("neutral")
    if neutral is not None and kind != "monoid":
        raise AlgFormatError("neutral= is only allowed for kind=monoid", scalars["neutral"][1])
    if kind == "monoid":
        if neutral is None:
            found = binary_neutrals(op.cube)
            if not found:
                raise AlgFormatError("kind=monoid table has no neutral element")
            neutral = found[0]
        elif not 0 <= neutral < order:
            raise AlgFormatError(f"neutral {neutral} out of range", scalars["neutral"][1])

    left: tuple[int, ...] | None = None
    right: tuple[int, ...] | None = None
    if "bt" in stanzas:
        if kind != "binary":
            raise AlgFormatError("bt= is only allowed for kind=binary")
        bt = stanzas["bt"]
        if len(bt) != 2 * order:
            raise AlgFormatError(f"bt needs {2 * order} entries, got {len(bt)}")
        for value, lineno in bt:
            if not 0 <= value < order:
                raise AlgFormatError(f"bt entry {value} out of range for order {order}", lineno)
        left = tuple(v for v, _ in bt[:order])
        right = tuple(v for v, _ in bt[order:])

    doc = AlgDocument(kind=kind, op=op, neutral=neutral, left=left, right=right)
    if kind == "monoid":
        try:
            doc.monoid()
        except ValueError as e:
            raise AlgFormatError(f"invalid monoid: {e}") from e
    return doc


def load_alg(path: Path) -> AlgDocument:
    """Read and parse an `.alg` file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise AlgFormatError(f"cannot read {path}: {e.strerror or e}") from e
    return parse_alg(text)


def _rows(values: list[int], width: int) -> list[str]:
    return [" ".join(str(v) for v in values[i : i + width]) for i in range(0, len(values), width)]


def dump_alg(
    obj: FiniteNaryOp | MonoidDesc,
    *,
    comment: str | None = None,
    left: tuple[int, ...] | list[int] | None = None,
    right: tuple[int, ...] | list[int] | None = None,
) -> str:
    """Render an operation or monoid as `.alg` text."""
    lines: list[str] = []
    if comment:
        lines.extend(f"# {c}" if c else "#" for c in comment.splitlines())

    op = obj.op if isinstance(obj, MonoidDesc) else obj
    if isinstance(obj, MonoidDesc):
        lines.append("kind=monoid")
    elif isinstance(op, BinaryOpDesc):
        lines.append("kind=binary")
    else:
        lines.append("kind=nary")
        lines.append(f"arity={op.arity}")
    lines.append(f"order={op.order}")
    if op.universe.names:
        lines.append("names=" + " ".join(op.universe.names))
    if isinstance(obj, MonoidDesc):
        lines.append(f"neutral={obj.neutral}")
    lines.append("table=")
    lines.extend(_rows(op.tolist(), op.order))

    if left is not None or right is not None:
        if left is None or right is None or isinstance(obj, MonoidDesc):
            raise AlgFormatError("bt= needs both maps and a binary table")
        lines.append("bt=")
        lines.append(" ".join(str(v) for v in left))
        lines.append(" ".join(str(v) for v in right))
    return "\n".join(lines) + "\n"


def save_alg(
    path: Path,
    obj: FiniteNaryOp | MonoidDesc,
    *,
    comment: str | None = None,
    left: tuple[int, ...] | list[int] | None = None,
    right: tuple[int, ...] | list[int] | None = None,
) -> None:
    """Write `.alg` text to a file."""
    text = dump_alg(obj, comment=comment, left=left, right=right)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise AlgFormatError(f"cannot write {path}: {e.strerror or e}") from e
