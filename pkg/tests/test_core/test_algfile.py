"""Tests for the .alg text format."""

from pathlib import Path

import pytest

from polyadic_semigroups.core import (
    BinaryOpDesc,
    FiniteNaryOp,
    MonoidDesc,
    dump_alg,
    load_alg,
    parse_alg,
    save_alg,
)
from polyadic_semigroups.core.errors import AlgFormatError
from polyadic_semigroups.fixtures import fixture_text

TERNARY = """\
# x + y + z mod 2
kind=nary
arity=3
order=2
table=
0 1 1 0
1 0 0 1
"""


class TestParseAlg:
    """Tests for parse_alg."""

    def test_ternary(self, extz2: FiniteNaryOp) -> None:
        doc = parse_alg(TERNARY)
        assert doc.kind == "nary"
        assert doc.op == extz2
        assert doc.neutral is None

    def test_table_may_span_any_lines(self) -> None:
        doc = parse_alg("kind=binary\norder=2\ntable= 0 1\n1\n0\n")
        assert doc.op == BinaryOpDesc(2, [0, 1, 1, 0])

    def test_names(self) -> None:
        doc = parse_alg(fixture_text("s3"))
        assert doc.op.universe.names == ("id", "t12", "t01", "c120", "c201", "t02")
        assert doc.neutral == 0

    def test_monoid_neutral_is_inferred(self) -> None:
        doc = parse_alg("kind=monoid\norder=2\ntable=\n0 1\n1 0\n")
        assert doc.monoid() == MonoidDesc(BinaryOpDesc(2, [0, 1, 1, 0]), 0)

    def test_bitranslation_stanza(self) -> None:
        doc = parse_alg(fixture_text("lz2-bt"))
        assert doc.has_bitranslation
        assert (doc.left, doc.right) == ((1, 0), (0, 1))

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("order=2\ntable=\n0 0 0 0\n", "missing kind"),
            ("kind=group\norder=2\ntable=\n0 0 0 0\n", "kind must be one of"),
            ("kind=binary\norder=2\norder=2\ntable=\n0 0 0 0\n", "duplicate header"),
            ("kind=binary\norder=2\ncolour=red\ntable=\n0 0 0 0\n", "unknown header"),
            ("kind=binary\norder=2\ntable=\n0 0 0\n", "needs 4 entries"),
            ("kind=binary\norder=2\ntable=\n0 0 0 2\n", "out of range"),
            ("kind=binary\norder=2\ntable=\n0 0 x 0\n", "not an integer"),
            ("kind=nary\norder=2\ntable=\n0 0 0 0\n", "needs an arity"),
            ("kind=binary\narity=2\norder=2\ntable=\n0 0 0 0\n", "not allowed"),
            ("kind=binary\norder=2\nneutral=0\ntable=\n0 1 1 0\n", "only allowed for kind=monoid"),
            ("kind=monoid\norder=2\ntable=\n0 0 1 1\n", "no neutral element"),
            ("kind=monoid\norder=2\nneutral=1\ntable=\n0 1 1 0\n", "invalid monoid"),
            ("kind=binary\norder=2\ntable=\n0 0 0 0\norder=3\n", "duplicate header"),
            ("kind=binary\norder=2\ntable=\n0 0 0 0\nnames=a b\n", "after table"),
            ("kind=binary\norder=2\nbt=\n0 1\n0 1\ntable=\n0 0 0 0\n", "bt= before table="),
            ("kind=binary\norder=2\ntable=\n0 0 1 1\nbt=\n1 0\n", "bt needs 4 entries"),
            ("kind=binary\norder=2\nnames=a a\ntable=\n0 0 0 0\n", "distinct"),
        ],
    )
    def test_rejects(self, text: str, message: str) -> None:
        with pytest.raises(AlgFormatError, match=message):
            parse_alg(text)

    def test_error_carries_line_number(self) -> None:
        with pytest.raises(AlgFormatError) as excinfo:
            parse_alg("kind=binary\norder=2\ntable=\n0 0\n0 5\n")
        assert excinfo.value.line == 5


class TestDumpAlg:
    """Tests for dump_alg, save_alg and load_alg."""

    def test_dump_then_parse(self, aff3: FiniteNaryOp) -> None:
        assert parse_alg(dump_alg(aff3, comment="x - y + z")).op == aff3

    def test_monoid_keeps_neutral(self, s3: MonoidDesc) -> None:
        text = dump_alg(s3)
        assert "kind=monoid" in text
        assert "neutral=0" in text
        assert "names=id t12" in text
        assert parse_alg(text).monoid() == s3

    def test_rows_have_order_entries(self, aff3: FiniteNaryOp) -> None:
        rows = dump_alg(aff3).split("table=\n", 1)[1].splitlines()
        assert len(rows) == 9
        assert rows[0] == "0 1 2"

    def test_bitranslation_needs_binary(self, s3: MonoidDesc) -> None:
        with pytest.raises(AlgFormatError):
            dump_alg(s3, left=[0] * 6, right=[0] * 6)

    def test_save_and_load(self, tmp_path: Path, left_zero: BinaryOpDesc) -> None:
        path = tmp_path / "lz.alg"
        save_alg(path, left_zero, left=[1, 0], right=[0, 1])
        doc = load_alg(path)
        assert doc.op == left_zero
        assert doc.left == (1, 0)

    def test_load_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(AlgFormatError, match="cannot read"):
            load_alg(tmp_path / "missing.alg")
