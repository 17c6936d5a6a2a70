import json

import pytest

import isc


def test_enumerate_sizes():
    sizes = {r: len(isc.enumerate_integral_j(r)) for r in (2, 3, 5, 7, 13)}
    assert sizes == {2: 25, 3: 13, 5: 8, 7: 6, 13: 4}
    assert isc.enumerate_integral_j(13) == [-39091613782464, 576, 2101248, 2045023375454208]


def test_enumerate_rejects_positive_genus():
    with pytest.raises(Exception):
        isc.enumerate_integral_j(11)


def test_j_map_and_f_poly():
    assert isc.f_poly(2) == [4096, 768, 48, 1]
    assert isc.j_map(2, "-64") == "1728"
    assert isc.j_map(2, "8") == "1728"


def test_known_sets_and_cm():
    known = isc.known_sets()
    assert sorted(known[11]) == sorted([str(-11 * 131**3), str(-(2**15)), "-121"])
    assert f"{-17 * 373**3}/{2**17}" in known[17]
    assert isc.is_cm("-32768")
    assert not isc.is_cm("4913")
    assert sum(isc.is_cm(j) for j, _ in isc.collect_candidate_j()) == 9


def test_classify_witness():
    assert set(isc.classify_witness(3, 1, 41)) == {"SplitEv", "ExceptionalEv"}
    assert isc.classify_witness(1, 1, 5) == ["NonsplitEv"]
    with pytest.raises(Exception):
        isc.classify_witness(1, 0, 41)


def test_certify_and_evidence():
    cache = isc.TraceCache()
    ok, state = isc.certify_surjective("4913", 41, 1000, cache)
    assert ok and state.complete()
    assert (state.split_ev, state.nonsplit_ev, state.exceptional_ev) == (11, 23, 11)
    assert len(cache) > 0
    evidence = isc.evidence_profile("2045023375454208", 13, 2000, cache)
    assert evidence.nonsplit_ev is None
    assert "NonsplitEv" in evidence.missing()


def test_trace_of_frobenius_matches_naive_count():
    cache = isc.TraceCache()
    ell = 101
    a, b = -3 * 4913 * (4913 - 1728), -2 * 4913 * (4913 - 1728) ** 2
    count = 1 + sum(1 for x in range(ell) for y in range(ell) if (y * y - x**3 - a * x - b) % ell == 0)
    assert isc.trace_of_frobenius("4913", ell, cache) == ell + 1 - count


def test_reduction():
    assert isc.integrality_upgrade(f"{-17 * 373**3}/{2**17}", 41) == "IncompatibleWithNns"
    assert isc.integrality_upgrade("4913", 41) == "IntegralAlready"
    assert isc.ns_compatible(40, 41)
    assert not isc.ns_compatible(2, 41)
    assert isc.mazur_isogeny_degrees() == [2, 3, 5, 7, 11, 13, 17, 37]


def test_witness_lemma_p5():
    result = isc.verify_witness_lemma(5)
    assert result["counterexamples"] == 0
    assert result["subgroups_tested"] > 0


def test_verify_theorem_short_range():
    report = json.loads(isc.verify_theorem(isc.TraceCache(), p_min=38, p_max=50, l_bound=2000))
    assert report["theorem_verified"] is True
    assert report["candidate_count"] == 59
    assert report["cm_count"] == 9
