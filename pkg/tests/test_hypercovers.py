import math

import pytest

from covertool.catalog import hypergraph_corpus
from covertool.covers import star_generators
from covertool.graphs import Hypergraph
from covertool.hypercovers import (
    GAP_FAMILY_CAP,
    build_gap_family,
    chromatic_number,
    find_coloring,
    hypergraph_cover_ideal,
    is_proper_coloring,
    verify_gap,
)
from covertool.monomials import (
    Monomial,
    alexander_dual,
    ideal_str,
    minimalize,
)


class TestCoverIdeal:
    def test_single_edge(self):
        h = Hypergraph.build(("a", "b"), [("a", "b")])
        assert ideal_str(hypergraph_cover_ideal(h)) == "[a, b]"

    def test_single_triple(self):
        h = Hypergraph.build(("a", "b", "c"), [("a", "b", "c")])
        assert ideal_str(hypergraph_cover_ideal(h)) == "[a, b, c]"

    def test_h1_matches_star_form(self):
        I = hypergraph_cover_ideal(build_gap_family(1))
        assert ideal_str(I) == "[z, x1*x2, x1*x3, x2*x3]"
        assert I == star_generators(3, 2)

    def test_gap_family_equals_star_form(self):
        for m in (1, 2, 3):
            assert hypergraph_cover_ideal(build_gap_family(m)) == star_generators(
                m + 2, 2
            )

    def test_dual_is_edge_ideal(self):
        # Covers are transversals, so the Alexander dual must recover
        # the generators spanned by the edges themselves.
        for name, h in hypergraph_corpus():
            I = hypergraph_cover_ideal(h)
            edges = minimalize(
                h.vertices,
                [
                    Monomial.from_support([h.index(v) for v in e], h.n)
                    for e in h.edges
                ],
            )
            assert alexander_dual(I) == edges, name


class TestColoring:
    def test_proper_and_improper(self):
        h = build_gap_family(1)
        good = {"z": 1, "x1": 2, "x2": 2, "x3": 2}
        bad = {"z": 2, "x1": 2, "x2": 2, "x3": 1}
        assert is_proper_coloring(h, good)
        assert not is_proper_coloring(h, bad)

    def test_missing_vertex_rejected(self):
        h = build_gap_family(1)
        with pytest.raises(ValueError, match="misses"):
            is_proper_coloring(h, {"z": 1})

    def test_find_coloring_roundtrip(self):
        for name, h in hypergraph_corpus():
            k = chromatic_number(h)
            found = find_coloring(h, k)
            assert found is not None and is_proper_coloring(h, found), name
            if k > 1:
                assert find_coloring(h, k - 1) is None, name

    def test_bad_color_count(self):
        with pytest.raises(ValueError, match="color"):
            find_coloring(build_gap_family(1), 0)


class TestChromaticNumber:
    def test_gap_family_is_two(self):
        for m in (1, 2, 3):
            assert chromatic_number(build_gap_family(m)) == 2

    def test_triangle_is_three(self):
        h = Hypergraph.build(
            ("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")]
        )
        assert chromatic_number(h) == 3

    def test_no_edges_is_one(self):
        assert chromatic_number(Hypergraph.build(("a",), [])) == 1
        assert chromatic_number(Hypergraph.build(("a", "b", "c"), [])) == 1


class TestGapFamily:
    def test_shapes(self):
        h1 = build_gap_family(1)
        assert h1.n == 4 and len(h1.edges) == 3
        h2 = build_gap_family(2)
        assert h2.n == 5 and len(h2.edges) == 6

    def test_edge_count_formula(self):
        for m in (1, 2, 3, 4):
            assert len(build_gap_family(m).edges) == math.comb(m + 2, 2)

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            build_gap_family(0)


class TestVerifyGap:
    def test_m1_is_equality(self):
        report = verify_gap(1)
        assert (report.chi, report.astab, report.gap_bound) == (2, 2, 2)
        assert report.gap_is_equality
        assert report.all_checks_pass

    def test_m2_and_m3(self):
        for m, astab in ((2, 3), (3, 4)):
            report = verify_gap(m)
            assert report.chi == 2
            assert report.astab == astab == report.oracle_astab
            assert report.gap_bound == m + 1
            assert report.all_checks_pass, m

    def test_cap(self):
        with pytest.raises(ValueError, match="force=True"):
            verify_gap(GAP_FAMILY_CAP + 1)

    def test_force_with_short_sweep(self):
        # Overriding the cap but keeping s_max small: the certified gap
        # still holds, while the oracle tail cannot be pinned down yet.
        report = verify_gap(4, s_max=2, force=True)
        assert report.astab == 5 and report.gap_holds
        assert report.oracle_astab is None
        assert not report.all_checks_pass

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            verify_gap(0)


def test_baseline_bound_across_corpus():
    # chi - 1 <= astab whenever the tail is pinned down empirically.
    for name, h in hypergraph_corpus():
        I = hypergraph_cover_ideal(h)
        if I.is_unit or I.is_zero:
            continue
        from covertool.associated import empirical_astab

        report = empirical_astab(I, 4)
        if report.astab_value is None:
            continue
        assert chromatic_number(h) - 1 <= report.astab_value, name
