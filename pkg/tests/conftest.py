"""Pytest fixtures for polyadic-semigroups tests."""

import os
from collections.abc import Iterator
from pathlib import Path

import pytest

from polyadic_semigroups import config as config_module
from polyadic_semigroups.config import get_config
from polyadic_semigroups.core import BinaryOpDesc, FiniteNaryOp, MonoidDesc
from polyadic_semigroups.fixtures import FixtureLibrary, load_fixture
from polyadic_semigroups.wmonoid import WMonoidWitness, check_w_monoid


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point config and catalog directories at a temp dir and drop ALG_* env vars."""
    config_dir = tmp_path / ".config" / "polyadic-semigroups"
    monkeypatch.setattr(config_module, "CONFIG_DIR", config_dir)
    monkeypatch.setattr(config_module, "CONFIG_FILE", config_dir / "config.json")
    monkeypatch.setattr(config_module, "CATALOG_DIR", tmp_path / "catalogs")
    monkeypatch.chdir(tmp_path)
    for name in list(os.environ):
        if name.startswith("ALG_"):
            monkeypatch.delenv(name)
    get_config.cache_clear()
    yield config_dir
    get_config.cache_clear()


@pytest.fixture(autouse=True)
def _clear_fixture_cache() -> None:
    FixtureLibrary().clear_cache()


@pytest.fixture
def aff3() -> FiniteNaryOp:
    """x - y + z mod 3."""
    return load_fixture("aff3").op


@pytest.fixture
def extz2() -> FiniteNaryOp:
    """x + y + z mod 2."""
    return load_fixture("extz2").op


@pytest.fixture
def add2() -> BinaryOpDesc:
    return BinaryOpDesc(2, [0, 1, 1, 0])


@pytest.fixture
def add3() -> BinaryOpDesc:
    return BinaryOpDesc(3, [(x + y) % 3 for x in range(3) for y in range(3)])


@pytest.fixture
def left_zero() -> BinaryOpDesc:
    return load_fixture("lz2").binary()


@pytest.fixture
def s3() -> MonoidDesc:
    return load_fixture("s3").monoid()


@pytest.fixture
def w4() -> WMonoidWitness:
    result = check_w_monoid(load_fixture("w4").monoid())
    assert isinstance(result, WMonoidWitness)
    return result


@pytest.fixture
def ex46() -> WMonoidWitness:
    result = check_w_monoid(load_fixture("ex46").monoid())
    assert isinstance(result, WMonoidWitness)
    return result
