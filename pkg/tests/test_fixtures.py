"""Tests for the shipped fixtures."""

import pytest

from polyadic_semigroups.core import check_associativity
from polyadic_semigroups.fixtures import FixtureLibrary, fixture_text, list_fixtures, load_fixture


class TestFixtureLibrary:
    """Tests for the FixtureLibrary class."""

    def test_singleton(self) -> None:
        """FixtureLibrary returns the same instance."""
        assert FixtureLibrary() is FixtureLibrary()

    def test_lists_every_fixture(self) -> None:
        assert list_fixtures() == [
            "aff2",
            "aff3",
            "ex46",
            "ex46-s",
            "extz2",
            "lz2",
            "lz2-bt",
            "s3",
            "w4",
        ]

    def test_load_is_cached(self) -> None:
        """The same parsed document comes back until the cache is cleared."""
        first = load_fixture("aff3")
        assert load_fixture("aff3") is first
        FixtureLibrary().clear_cache()
        assert load_fixture("aff3") is not first

    def test_text(self) -> None:
        assert "kind=nary" in fixture_text("aff3")

    def test_missing_fixture_raises(self) -> None:
        with pytest.raises(FileNotFoundError):
            load_fixture("nonexistent")

    @pytest.mark.parametrize("name", ["../etc/passwd", "a b", "aff3.alg"])
    def test_invalid_name_raises(self, name: str) -> None:
        """Names are file stems, never paths."""
        with pytest.raises(ValueError, match="Invalid fixture name"):
            load_fixture(name)

    @pytest.mark.parametrize("name", list_fixtures())
    def test_every_fixture_is_associative(self, name: str) -> None:
        assert check_associativity(load_fixture(name).op) is None

    def test_kinds(self) -> None:
        assert load_fixture("aff3").kind == "nary"
        assert load_fixture("w4").kind == "monoid"
        assert load_fixture("lz2-bt").has_bitranslation
