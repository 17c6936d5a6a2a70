"""Integral j-invariants on X_0(r) and mod-p surjectivity certificates."""

from ._isc import (
    TraceCache,
    WitnessState,
    certify_surjective,
    classify_witness,
    collect_candidate_j,
    enumerate_integral_j,
    evidence_profile,
    f_poly,
    integrality_upgrade,
    is_cm,
    j_map,
    known_sets,
    mazur_isogeny_degrees,
    ns_compatible,
    trace_of_frobenius,
    verify_theorem,
    verify_witness_lemma,
)

__all__ = [
    "TraceCache",
    "WitnessState",
    "certify_surjective",
    "classify_witness",
    "collect_candidate_j",
    "enumerate_integral_j",
    "evidence_profile",
    "f_poly",
    "integrality_upgrade",
    "is_cm",
    "j_map",
    "known_sets",
    "mazur_isogeny_degrees",
    "ns_compatible",
    "trace_of_frobenius",
    "verify_theorem",
    "verify_witness_lemma",
]
