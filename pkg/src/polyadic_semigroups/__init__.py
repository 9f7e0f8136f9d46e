"""Polyadic semigroups - reducibility, neutral-element adjunction and W-monoids."""

__version__ = "0.1.0"
