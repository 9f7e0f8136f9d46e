"""Tests for polyadic-semigroups."""
