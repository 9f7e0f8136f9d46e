"""Isomorphism-free enumeration, surveys, the minimal IN-semigroup and catalogs."""

from polyadic_semigroups.enumerate.canonical import (
    CanonicalForm,
    automorphism_count,
    canonical_form,
    canonical_op,
)
from polyadic_semigroups.enumerate.catalog import (
    CatalogRecord,
    Certificates,
    emit_catalog,
    load_catalog,
    monoid_record,
    nary_record,
    semigroup_record,
    w_monoid_record,
)
from polyadic_semigroups.enumerate.generate import (
    enumerate_associative_nary,
    enumerate_monoids,
    enumerate_semigroups,
)
from polyadic_semigroups.enumerate.minimal import minimal_in_semigroup
from polyadic_semigroups.enumerate.survey import (
    SurveyReport,
    rees_equivalence_counterexample,
    survey_nary,
)
from polyadic_semigroups.enumerate.wmonoids import (
    enumerate_w_monoids,
    roundtrips,
    w_monoids_by_filtering,
    w_monoids_route_b,
)

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_op",
    "automorphism_count",
    "enumerate_semigroups",
    "enumerate_monoids",
    "enumerate_associative_nary",
    "enumerate_w_monoids",
    "w_monoids_by_filtering",
    "w_monoids_route_b",
    "roundtrips",
    "survey_nary",
    "SurveyReport",
    "rees_equivalence_counterexample",
    "minimal_in_semigroup",
    "CatalogRecord",
    "Certificates",
    "semigroup_record",
    "monoid_record",
    "w_monoid_record",
    "nary_record",
    "emit_catalog",
    "load_catalog",
]
