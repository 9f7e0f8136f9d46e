"""Allow running as `python -m polyadic_semigroups`."""

from polyadic_semigroups.cli import app

if __name__ == "__main__":
    app()
