"""Theorem harness verdicts, census values, and the suite runner."""

import pytest

from modmax import catalog
from modmax.classify import is_supersoluble
from modmax.lattice import lattice_of
from modmax.verify import (
    FAILS,
    HOLDS,
    NOT_EVALUATED,
    VACUOUS,
    UnknownSelector,
    census,
    lemma_2_1_suite,
    reports_for_group,
    run_suite,
    verify_corollaries,
    verify_lemma_2_1,
    verify_lemma_2_2,
    verify_lemma_2_3,
    verify_lemma_2_10,
    verify_prop_2_9,
    verify_prop_2_11,
    verify_prop_3_2,
    verify_sharpness_A,
    verify_sharpness_B,
    verify_theorem_A,
    verify_theorem_B,
    verify_theorem_2_12,
    verify_theorem_3_4,
)


def test_census_values(suite_groups):
    c5 = census(catalog.construct("C5"))
    assert c5.min_n_all_modular == 1
    assert c5.rows[0].total == 1 and c5.rows[0].modular == 1

    a4 = census(suite_groups["A4"])
    assert a4.min_n_all_modular == 3
    assert [r.total for r in a4.rows] == [5, 4, 1]
    assert [r.modular for r in a4.rows] == [1, 1, 1]

    s3 = census(suite_groups["S3"])
    assert s3.min_n_all_modular == 1
    assert s3.rows[0].total == 4 and s3.rows[0].modular == 4

    g24 = census(suite_groups["A4xC2"])
    assert g24.min_n_all_modular == 4


def test_census_counts_match_depth_sets(suite_groups):
    for G in suite_groups.values():
        lat = lattice_of(G)
        for row in census(G).rows:
            assert row.total == len(lat.n_maximal_indices(row.n))
            assert row.neither >= row.total - row.modular - row.s_quasinormal


def test_theorem_A_on_s3(suite_groups):
    r = verify_theorem_A(suite_groups["S3"], 2)
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)


def test_theorem_A_bound_blocks_a4(suite_groups):
    r = verify_theorem_A(suite_groups["A4"], 3)
    assert r.hypothesis == FAILS
    assert any("exceeds the bound" in w for w in r.witnesses)
    # the conclusion genuinely fails there, which is the point of sharpness
    assert r.conclusion == FAILS


def test_theorem_A_holds_on_nilpotent_pq(suite_groups):
    r = verify_theorem_A(suite_groups["C6"], 2)
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)


def test_theorem_B_on_a4(suite_groups):
    r = verify_theorem_B(suite_groups["A4"], 3)
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)


def test_theorem_B_trivial_group_vacuous(suite_groups):
    r = verify_theorem_B(suite_groups["1"], 1)
    assert (r.hypothesis, r.conclusion) == (VACUOUS, HOLDS)


def test_theorem_3_4_bound_blocks_a4xc2(suite_groups):
    r = verify_theorem_3_4(suite_groups["A4xC2"], 4)
    assert r.hypothesis == FAILS
    assert r.conclusion == FAILS  # residual V4 is not Hall: sharpness


def test_theorem_A_implies_2_12(suite_groups):
    """Logical containment, checked mechanically across the suite."""
    for G in suite_groups.values():
        lat = lattice_of(G)
        for n in range(1, max(1, lat.max_chain_length) + 1):
            a = verify_theorem_A(G, n)
            b = verify_theorem_2_12(G, n)
            if a.hypothesis in (HOLDS, VACUOUS):
                assert not a.is_failure()
                assert b.conclusion == a.conclusion
            if b.hypothesis == HOLDS:
                assert not b.is_failure()


def test_prop_2_9(suite_groups):
    r = verify_prop_2_9(suite_groups["S3"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    r = verify_prop_2_9(suite_groups["A4"])
    assert r.hypothesis == VACUOUS and r.conclusion == HOLDS


def test_prop_2_11(suite_groups):
    r = verify_prop_2_11(suite_groups["S3"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    r = verify_prop_2_11(suite_groups["Q8"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    # contrapositive on the order-42 separating example
    r = verify_prop_2_11(suite_groups["hol_C7"])
    assert r.hypothesis == FAILS
    # and on the order-156 one
    r = verify_prop_2_11(suite_groups["hol_C13"])
    assert r.hypothesis == FAILS


def test_prop_3_2(suite_groups):
    r = verify_prop_3_2(suite_groups["A4"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    assert any("p*q^2" in w for w in r.witnesses)
    r = verify_prop_3_2(suite_groups["SL23"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    assert any("quaternion" in w for w in r.witnesses)
    r = verify_prop_3_2(suite_groups["S3"])
    assert (r.hypothesis, r.conclusion) == (FAILS, NOT_EVALUATED)


def test_lemma_2_1_per_subgroup(suite_groups):
    s3 = suite_groups["S3"]
    lat = lattice_of(s3)
    c2 = next(s for s in lat.subgroups if s.order == 2)
    r = verify_lemma_2_1(s3, c2)
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    assert any("decomposition r=1" in w for w in r.witnesses)
    # a non-modular subgroup is out of the lemma's scope
    a4 = suite_groups["A4"]
    lat4 = lattice_of(a4)
    c3 = next(s for s in lat4.subgroups if s.order == 3)
    r = verify_lemma_2_1(a4, c3)
    assert (r.hypothesis, r.conclusion) == (VACUOUS, NOT_EVALUATED)


def test_lemma_suites_hold_everywhere(suite_groups):
    for G in suite_groups.values():
        assert lemma_2_1_suite(G).conclusion == HOLDS, G.name
        assert verify_lemma_2_2(G).conclusion == HOLDS, G.name
        assert verify_lemma_2_3(G).conclusion == HOLDS, G.name
        r = verify_lemma_2_10(G)
        assert not r.is_failure(), (G.name, r.witnesses)


def test_lemma_2_10_examples(suite_groups):
    r = verify_lemma_2_10(suite_groups["hol_C13"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    r = verify_lemma_2_10(suite_groups["A4"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    r = verify_lemma_2_10(suite_groups["S3"])
    assert r.hypothesis == VACUOUS  # nearly nilpotent, out of scope


def test_corollaries(suite_groups):
    for name in ("S3", "Q8", "A4", "SL23"):
        for r in verify_corollaries(suite_groups[name]):
            assert not r.is_failure(), (name, r.theorem, r.witnesses)
    # the quaternion-shape branch of Cor4.4 on the order-24 witness
    r = verify_corollaries(suite_groups["SL23"])[3]
    assert r.theorem == "Cor4.4"
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    # trivial group: everything vacuous or satisfied
    for r in verify_corollaries(suite_groups["1"]):
        assert not r.is_failure()


def test_sharpness_narratives(suite_groups):
    r = verify_sharpness_A(suite_groups["A4"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)
    r = verify_sharpness_B(suite_groups["A4xC2"])
    assert (r.hypothesis, r.conclusion) == (HOLDS, HOLDS)


def test_fast_mode_skips_conclusions(suite_groups):
    r = verify_theorem_A(suite_groups["A4"], 3, fast=True)
    assert r.hypothesis == FAILS and r.conclusion == NOT_EVALUATED


def test_run_suite_soundness_gate():
    result = run_suite("all", "all")
    assert not result.has_failures(), [
        (r.group, r.theorem, r.witnesses) for r in result.failures()]
    counts = result.summary()
    assert counts["fail"] == 0
    assert counts["pass"] > 300


def test_run_suite_selectors():
    result = run_suite("S3,Q8", "theorems")
    groups = {r.group for r in result.reports}
    assert groups == {"S3", "Q8"}
    assert all(r.theorem.startswith("Thm") for r in result.reports)

    sharp = run_suite("all", "sharpness")
    assert {r.theorem for r in sharp.reports} == {"SharpnessA", "SharpnessB"}
    assert {r.group for r in sharp.reports} == {"A4", "A4xC2"}

    empty = run_suite("", "all")
    assert empty.reports == ()
    assert empty.summary() == {"pass": 0, "fail": 0, "vacuous": 0}


def test_run_suite_breadth_beyond_standard_catalog():
    """The gate also holds on groups outside the standard suite, including
    insoluble ones where the theorem hypotheses fail on solubility."""
    result = run_suite("D12,C9,E5^2,pq2_3_2,hol_C11,A5,S5", "all")
    assert not result.has_failures(), [
        (r.group, r.theorem, r.witnesses) for r in result.failures()]
    insoluble = [r for r in result.reports
                 if r.group in ("A5", "S5") and r.theorem.startswith("Thm")]
    assert insoluble
    assert all(r.hypothesis == FAILS for r in insoluble)


def test_run_suite_unknown_selectors():
    with pytest.raises(UnknownSelector):
        run_suite("NoSuchGroup", "all")
    with pytest.raises(UnknownSelector):
        run_suite("all", "nonsense")


def test_run_suite_deterministic_order():
    a = run_suite("S3,A4,Q8", "lemmas")
    b = run_suite("A4,Q8,S3", "lemmas")
    assert [(r.group, r.theorem, r.hypothesis, r.conclusion, r.witnesses)
            for r in a.reports] == \
           [(r.group, r.theorem, r.hypothesis, r.conclusion, r.witnesses)
            for r in b.reports]


def test_run_suite_parallel_matches_serial():
    serial = run_suite("S3,A4,Q8,C6", "lemmas", jobs=1)
    parallel = run_suite("S3,A4,Q8,C6", "lemmas", jobs=2)
    strip = lambda rs: [(r.group, r.theorem, r.hypothesis, r.conclusion,
                         r.witnesses) for r in rs.reports]
    assert strip(serial) == strip(parallel)


def test_depth_set_coherence(suite_groups):
    """Every n-maximal subgroup (n >= 2) is maximal in some (n-1)-maximal
    subgroup, so census rows chain together."""
    for G in suite_groups.values():
        lat = lattice_of(G)
        for n in range(2, lat.max_chain_length + 1):
            for i in lat.n_maximal_indices(n):
                assert any(lat.is_n_maximal(p, n - 1)
                           for p in lat.covers_up[i]), (G.name, n, i)


def test_theorem_B_s4_full_pipeline(suite_groups):
    # hypothesis decided by the census, conclusion computed and reported
    # even though the hypothesis fails on S4 at depth 3
    r = verify_theorem_B(suite_groups["S4"], 3)
    assert r.hypothesis == FAILS
    assert r.conclusion == FAILS
    assert not r.is_failure()
    assert any("residual(order 4)" in w for w in r.witnesses)


def test_reports_for_group_covers_depths(suite_groups):
    reports = reports_for_group("A4", ("ThmA",))
    assert [r.theorem for r in reports] == \
        ["ThmA(n=1)", "ThmA(n=2)", "ThmA(n=3)"]


def test_report_json_shape(suite_groups):
    r = verify_theorem_A(suite_groups["S3"], 2)
    obj = r.to_json_obj()
    assert set(obj) == {"group", "theorem", "hypothesis", "conclusion",
                        "witnesses", "ms"}
    assert obj["ms"] == 0.0
    assert r.to_json_obj(deterministic=False)["ms"] >= 0.0


def test_contrapositive_separating_examples(suite_groups):
    """Where the conclusion is known false, the hypothesis must fail."""
    for name, check in (("hol_C7", verify_prop_2_11),
                        ("hol_C13", verify_prop_2_11)):
        r = check(suite_groups[name])
        assert r.hypothesis == FAILS and r.conclusion == FAILS
        assert not r.is_failure()
    # A4 is not supersoluble, so Cor4.3's hypothesis cannot hold there
    from modmax.verify import verify_corollary_4_3
    r = verify_corollary_4_3(suite_groups["A4"])
    assert not is_supersoluble(suite_groups["A4"])
    assert r.hypothesis == FAILS
