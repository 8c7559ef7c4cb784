import copy
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tritile.analysis import (CONCLUSIONS, TYPE_CONTRIB, RatioResult, Relation,
                              analysis_report, audit_extension_lemmas, boundary_profile,
                              build_gamma_graph, census_identity_check, classify_vertices,
                              closed_form_ratio, commensurability_verdict, deduce_ratios,
                              extract_relations, format_report_text, gamma_graph_checks,
                              normalize_relation, rational_kernel, relation_readings,
                              verdict_from_parts)
from tritile.errors import ClassificationError, InconsistentRelations
from tritile.exact import SymLen, TileSpec
from tritile.generators import (gen_appendix_fixture, gen_equilateral_centers, gen_kite,
                                gen_quadratic, gen_two_strips)

import oracles
from corpus import SPEC_12, SPEC_357, SPEC_SYM, full_corpus, random_motion

SPEC = SPEC_357


def test_type_contributions():
    # alpha + beta - 2 gamma for each wedge multiset
    assert TYPE_CONTRIB == {"simple": 0, "star": 6, "center": -6, "double_star": 12,
                            "gamma_star": 6, "double_simple": 0}


def test_quadratic_census():
    for n in (2, 3, 5):
        cen = classify_vertices(gen_quadratic(n, SPEC))
        # internal vertices of the quadratic tiling are double-simple, edge ones simple
        assert cen.counts["simple"] == 3 * (n - 1)
        assert cen.counts["double_simple"] == (n - 1) * (n - 2) // 2
        assert cen.S == cen.S2 == cen.C == 0
        assert cen.corner_contrib == 0
        assert census_identity_check(cen) == 0


def test_census_matches_coordinate_oracle():
    for name, t in full_corpus():
        cen = classify_vertices(t, strict=False)
        wc = oracles.wedge_counts(t.tiles, t.spec.alpha)
        ref = sum(v[0] + v[1] - 2 * v[2] for v in wc.values())
        assert ref == 0 == census_identity_check(cen), name
        mine = sorted((c[0] + c[1], c[2]) for c in (v.counts() for v in t.vertices) if any(c))
        assert mine == sorted((v[0] + v[1], v[2]) for v in wc.values()), name


@pytest.mark.parametrize("X", [1, 2, 3, 4])
def test_equilateral_census(X):
    cen = classify_vertices(gen_equilateral_centers(SPEC_SYM, X))
    assert cen.C == X * X
    assert cen.corner_contrib == 6
    assert 6 * cen.S + 12 * cen.S2 - 6 * cen.C + 6 == 0
    assert census_identity_check(cen) == 0


def test_strict_classification_rejects_unknown_multiset():
    t = copy.deepcopy(gen_quadratic(3, SPEC))
    vid = next(v.id for v in t.vertices if v.location == "internal-2pi")
    t.vertices[vid].wedges.append((0, "A"))
    with pytest.raises(ClassificationError, match=f"vertex {vid}"):
        classify_vertices(t, strict=True)
    cen = classify_vertices(t, strict=False)
    assert cen.counts["other"] == 1
    assert census_identity_check(cen) == 1


def test_appendix_fixture_graphs():
    for a, b in [(3, 2), (5, 2), (8, 7), (4, 2), (8, 1)]:
        spec = TileSpec.from_sides(a, b)
        t, x = gen_appendix_fixture(spec)
        g = build_gamma_graph(t, "a")
        assert g.in_degree.get(x) == 1 and x not in g.out_degree
        assert classify_vertices(t).types[x] == "star"
        chk = gamma_graph_checks(t, g)
        assert chk["in_degree_at_most_one"] and chk["heads_are_pi_vertices"]
        assert chk["f_sum"] == 0


def test_no_links_in_kites_and_quadratics():
    for t in (gen_kite(SPEC), gen_quadratic(4, SPEC)):
        for lab in "abc":
            assert build_gamma_graph(t, lab).links == []
    with pytest.raises(ValueError):
        build_gamma_graph(gen_kite(SPEC), "d")


def test_two_strip_links_and_relation():
    t = gen_two_strips(SPEC, 5, "a", 3, "b")
    rels = extract_relations(t)
    assert [str(r) for r in rels] == ["5a = 3b"]
    assert rels[0].vector() == (5, -3, 0)
    res = deduce_ratios(rels)
    assert res.a_over_b == Fraction(3, 5) and res.c_over_b is None
    # the ratio agrees with the actual tile only numerically after scaling: 5*3 = 3*5
    assert 5 * SPEC.a == 3 * SPEC.b


def test_relations_invariant_under_motion(rng):
    t = gen_two_strips(SPEC_12, 2, "a", 1, "b")
    ref = [r.key() for r in extract_relations(t)]
    assert ref == [("a", 2, 1, 0)]        # 2a = b
    for _ in range(5):
        assert [r.key() for r in extract_relations(random_motion(t, rng))] == ref


def test_audits_on_appendix_fixture():
    t, x = gen_appendix_fixture(TileSpec.from_sides(3, 2))
    recs = audit_extension_lemmas(t)
    assert recs and all(r.passed for r in recs)


def test_normalize_relation():
    r = normalize_relation(SymLen(2, -1, -1))
    assert (r.kind, r.j, r.p, r.q) == ("a", 2, 1, 1)
    assert str(r) == "2a = b + c"
    assert normalize_relation(-SymLen(2, -1, -1)).key() == r.key()
    assert normalize_relation(SymLen(Fraction(1, 2), Fraction(-3, 2), 1)).key() == ("b", 3, 1, 2)
    assert normalize_relation(SymLen(0, 3, -6)).key() == ("c", 2, 0, 1)   # 2c = b
    assert normalize_relation(SymLen()) is None
    with pytest.raises(InconsistentRelations):
        normalize_relation(SymLen(1, 2, 0))


def test_relation_readings():
    assert relation_readings((2, -1, -1)) == [("a", 2, 1, 1)]
    assert sorted(relation_readings((1, -1, 0))) == [("a", 1, 1, 0), ("b", 1, 1, 0)]
    with pytest.raises(ValueError):
        Relation("a", 0, 1, 1)
    with pytest.raises(ValueError):
        Relation("d", 1, 1, 1)


def test_rational_kernel_against_cross_product():
    rng = random.Random(7)
    for _ in range(200):
        r1 = [rng.randint(-9, 9) for _ in range(3)]
        r2 = [rng.randint(-9, 9) for _ in range(3)]
        ref = oracles.cross_kernel(r1, r2)
        basis = rational_kernel([r1, r2])
        if any(ref):
            assert len(basis) == 1
            v = basis[0]
            # parallel to the cross product
            assert oracles.cross_kernel(v, ref) == (0, 0, 0)
        for v in basis:
            for r in (r1, r2):
                assert sum(x * y for x, y in zip(r, v)) == 0


@given(st.integers(1, 30), st.integers(0, 30), st.integers(1, 30),
       st.integers(1, 30), st.integers(0, 30), st.integers(1, 30))
def test_closed_form_matches_kernel(j, p, q, J, P, Q):
    ra, rb = Relation("a", j, p, q), Relation("b", J, P, Q)
    ref = oracles.ratio_from_rows(ra.vector(), rb.vector())
    if ref is None or ref[0] <= 0 or ref[1] <= 0:
        return
    assert closed_form_ratio(ra, rb) == ref[0]


def test_closed_form_degenerate_branches():
    assert closed_form_ratio(Relation("a", 3, 2, 0), Relation("b", 1, 1, 1)) == Fraction(2, 3)
    assert closed_form_ratio(Relation("a", 1, 1, 1), Relation("b", 4, 3, 0)) == Fraction(4, 3)


def test_worked_pair():
    res = deduce_ratios([Relation("a", 2, 1, 1), Relation("b", 3, 1, 2)])
    assert res.a_over_b == 1 and res.c_over_b == 1 and res.rank == 2
    assert res.closed_form == 1


def test_deduce_ratios_inconsistent():
    with pytest.raises(InconsistentRelations):
        deduce_ratios([(1, -2, 0), (2, -1, 0)])
    res = deduce_ratios([])
    assert res.rank == 0 and not res.determined


def _ratios(a_b=None, c_b=None):
    return RatioResult(a_b, c_b, 0, [])


@pytest.mark.parametrize("kwargs, expect", [
    (dict(pattern="equilateral", all_c_boundary=True, ratios=_ratios(1, 1)),
     "commensurable_sides_forced"),
    (dict(pattern="equilateral", all_c_boundary=True, ratios=_ratios()),
     "exceptional_case_equilateral"),
    (dict(pattern="2a_2b_pi3", all_c_boundary=True, ratios=_ratios()),
     "exceptional_case_2a_2b_pi3"),
    (dict(pattern="2a_2b_pi3", all_c_boundary=False, ratios=_ratios()), "undetermined"),
    (dict(pattern="other", all_c_boundary=False, ratios=_ratios(Fraction(1, 2))),
     "undetermined"),
    (dict(pattern="similar", all_c_boundary=False, ratios=_ratios()), "not_applicable"),
    (dict(pattern="not_a_triangle", all_c_boundary=False, ratios=_ratios()), "not_applicable"),
    (dict(pattern="equilateral", all_c_boundary=True, ratios=None), "inconsistent_tiling"),
    (dict(pattern="equilateral", all_c_boundary=True, ratios=_ratios(), census_identity=6),
     "inconsistent_tiling"),
    (dict(pattern="equilateral", all_c_boundary=True, ratios=_ratios(),
          classification_ok=False), "inconsistent_tiling"),
])
def test_verdict_table(kwargs, expect):
    conclusion, notes = verdict_from_parts(incommensurable=True, **kwargs)
    assert conclusion == expect and conclusion in CONCLUSIONS and notes


def test_verdict_needs_incommensurable_angles():
    c, _ = verdict_from_parts(incommensurable=False, pattern="equilateral",
                              all_c_boundary=True, ratios=_ratios(1, 1))
    assert c == "undetermined"


def test_verdicts_on_corpus():
    got = {name: commensurability_verdict(t).conclusion for name, t in full_corpus()}
    assert got["357/quadratic3"] == "not_applicable"
    assert got["357/kite"] == "not_applicable"
    assert got["sym/equilateral2"] == "undetermined"
    prof = boundary_profile(gen_equilateral_centers(SPEC_SYM, 2))
    assert prof["pattern"] == "equilateral" and prof["all_c_boundary"]
    assert prof["c_counts"] == [2, 2, 2]
    assert boundary_profile(gen_quadratic(2, SPEC))["pattern"] == "similar"


def test_report_round_trip():
    t = gen_two_strips(SPEC, 5, "a", 3, "b")
    rep = analysis_report(t)
    assert rep["tiles"] == 16 and rep["census_identity"] == 0
    assert rep["relations"][0]["text"] == "5a = 3b"
    text = format_report_text(rep)
    assert "5a = 3b" in text and "verdict: not_applicable" in text
