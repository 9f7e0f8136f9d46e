"""Canonical example algebras shipped with the package.

Fixtures are `.alg` files in the data/ directory, addressed by name (the file
stem, e.g. "aff3" or "ex46-s"). Parsed documents are cached per process.
"""

import re
from pathlib import Path

from polyadic_semigroups.core.algfile import AlgDocument, parse_alg

DATA_DIR = Path(__file__).parent / "data"

_VALID_NAME_RE = re.compile(r"^[a-zA-Z0-9_-]+$")


class FixtureLibrary:
    """Loads and caches the shipped `.alg` fixtures."""

    _instance: "FixtureLibrary | None" = None
    _cache: dict[str, AlgDocument]

    def __new__(cls) -> "FixtureLibrary":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._cache = {}
        return cls._instance

    def path(self, name: str) -> Path:
        """Location of a fixture file.

        Raises:
            ValueError: If name doesn't match ^[a-zA-Z0-9_-]+$.
            FileNotFoundError: If no such fixture ships with the package.
        """
        if not _VALID_NAME_RE.match(name):
            raise ValueError(f"Invalid fixture name '{name}': must match ^[a-zA-Z0-9_-]+$")
        path = DATA_DIR / f"{name}.alg"
        if not path.exists():
            raise FileNotFoundError(f"Fixture not found: {path}")
        return path

    def text(self, name: str) -> str:
        """Raw `.alg` text of a fixture."""
        return self.path(name).read_text(encoding="utf-8")

    def get(self, name: str) -> AlgDocument:
        """Parsed fixture, cached after the first load."""
        if name not in self._cache:
            self._cache[name] = parse_alg(self.text(name))
        return self._cache[name]

    def names(self) -> list[str]:
        """Names of every shipped fixture, sorted."""
        return sorted(p.stem for p in DATA_DIR.glob("*.alg"))

    def clear_cache(self) -> None:
        self._cache.clear()


# Module-level convenience functions


def load_fixture(name: str) -> AlgDocument:
    """Convenience wrapper around FixtureLibrary().get()."""
    return FixtureLibrary().get(name)


def fixture_text(name: str) -> str:
    return FixtureLibrary().text(name)


def list_fixtures() -> list[str]:
    return FixtureLibrary().names()
