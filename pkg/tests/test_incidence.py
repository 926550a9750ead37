"""Incidence profiles, t_k spectra, and the inequality checks."""

from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ordconic import (
    DegenerateInput,
    PointConfig,
    PreconditionViolated,
    ProjLine,
    ProjPoint,
    dual_hirzebruch_check,
    gen_random_rational,
    gen_triangle_midpoints_centroid,
    incidence_profile,
    line_through,
    melchior_check,
    ordinary_line_bound_check,
    ordinary_lines,
    primal_hirzebruch_check,
)

P = ProjPoint.make
L = ProjLine.make


def brute_force_tk(cfg: PointConfig) -> dict[int, int]:
    """Independent spectrum: group pairs by the set of points their line carries."""
    groups = set()
    pts = cfg.points
    for a, b in combinations(pts, 2):
        ln = line_through(a, b)
        members = frozenset(p for p in pts if ln.contains(p))
        groups.add(members)
    tk: dict[int, int] = {}
    for members in groups:
        tk[len(members)] = tk.get(len(members), 0) + 1
    return tk


def quad4():
    return PointConfig.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


class TestProfile:
    def test_three_collinear(self):
        cfg = PointConfig.from_coords([(1, 0, 0), (1, 1, 0), (1, 2, 0)])
        prof = incidence_profile(cfg)
        assert prof.tk == {3: 1}
        assert prof.all_collinear

    def test_four_generic(self):
        prof = incidence_profile(quad4())
        assert prof.tk == {2: 6}

    def test_triangle_midpoints_centroid(self):
        cfg = gen_triangle_midpoints_centroid()
        prof = incidence_profile(cfg)
        assert prof.tk == {2: 3, 3: 6}
        assert prof.tk == brute_force_tk(cfg)

    def test_single_point_rejected(self):
        with pytest.raises(DegenerateInput):
            incidence_profile(PointConfig.from_coords([(1, 2, 3)]))

    def test_every_line_lists_its_points(self):
        cfg = gen_random_rational(8, seed=3, bound=6)
        prof = incidence_profile(cfg)
        for ln, pts in prof.lines:
            assert len(pts) >= 2
            assert all(ln.contains(p) for p in pts)
            assert [p for p in cfg.points if ln.contains(p)] == list(pts)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=9))
    def test_pair_counting_identity(self, seed, n):
        cfg = gen_random_rational(n, seed=seed, bound=8)
        prof = incidence_profile(cfg)
        assert sum(comb(k, 2) * t for k, t in prof.tk.items()) == comb(cfg.s, 2)
        assert prof.tk == brute_force_tk(cfg)


class TestOrdinaryLines:
    def test_collinear_has_none(self):
        cfg = PointConfig.from_coords([(1, t, 0) for t in range(4)])
        assert ordinary_lines(cfg) == []

    def test_four_generic_has_six(self):
        assert len(ordinary_lines(quad4())) == 6

    def test_sharp_seven(self):
        assert len(ordinary_lines(gen_triangle_midpoints_centroid())) == 3

    def test_matches_k2_slice(self):
        cfg = gen_random_rational(9, seed=11, bound=7)
        prof = incidence_profile(cfg)
        assert ordinary_lines(cfg) == [(ln, pts) for ln, pts in prof.lines if len(pts) == 2]


class TestMelchior:
    def test_four_generic(self):
        rep = melchior_check(incidence_profile(quad4()))
        assert rep == (True, 6, 3)

    def test_sharp_equality(self):
        rep = melchior_check(incidence_profile(gen_triangle_midpoints_centroid()))
        assert rep.holds and rep.lhs == 3 and rep.rhs == 3

    def test_four_point_line_plus_one(self):
        cfg = PointConfig.from_coords([(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (0, 0, 1)])
        rep = melchior_check(incidence_profile(cfg))
        assert rep == (True, 4, 4)

    def test_collinear_rejected(self):
        cfg = PointConfig.from_coords([(1, t, 0) for t in range(3)])
        with pytest.raises(PreconditionViolated):
            melchior_check(incidence_profile(cfg))


class TestDualHirzebruch:
    def test_four_generic(self):
        rep = dual_hirzebruch_check(incidence_profile(quad4()))
        assert rep == (True, 6, 4)

    def test_sharp_seven(self):
        rep = dual_hirzebruch_check(incidence_profile(gen_triangle_midpoints_centroid()))
        assert rep == (True, 9, 7)

    def test_near_pencil_rejected(self):
        cfg = PointConfig.from_coords([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
        with pytest.raises(PreconditionViolated):
            dual_hirzebruch_check(incidence_profile(cfg))

    def test_triangle_rejected(self):
        # at s = 3 every pair is an "all but one" line
        cfg = PointConfig.from_coords([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        with pytest.raises(PreconditionViolated):
            dual_hirzebruch_check(incidence_profile(cfg))


class TestPrimalHirzebruch:
    def test_four_generic_lines(self):
        lines = [L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1)]
        rep = primal_hirzebruch_check(lines)
        assert rep == (True, 6, 4)

    def test_complete_quadrilateral(self):
        pts = [P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1)]
        lines = [line_through(a, b) for a, b in combinations(pts, 2)]
        rep = primal_hirzebruch_check(lines)
        assert rep == (True, 7, 6)
        # the arrangement has t_2 = 3 (diagonal points) and t_3 = 4

    def test_small_d_rejected(self):
        with pytest.raises(PreconditionViolated):
            primal_hirzebruch_check([L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)])

    def test_pencil_rejected(self):
        lines = [L(1, 0, 0), L(0, 1, 0), L(1, 1, 0), L(1, 2, 0), L(0, 0, 1)]
        # four of the five lines meet at (0:0:1)
        with pytest.raises(PreconditionViolated):
            primal_hirzebruch_check(lines)

    def test_duplicates_rejected(self):
        with pytest.raises(DegenerateInput):
            primal_hirzebruch_check([L(1, 0, 0)] * 4)


class TestOrdinaryLineBound:
    def test_sharp_at_seven(self):
        rep = ordinary_line_bound_check(gen_triangle_midpoints_centroid())
        assert rep.count == 3 and rep.bound == Fraction(3) and rep.holds

    def test_four_generic(self):
        rep = ordinary_line_bound_check(quad4())
        assert rep.count == 6 and rep.bound == Fraction(24, 13) and rep.holds

    def test_six_generic(self):
        cfg = PointConfig.from_coords(
            [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, 5, 1)]
        )
        rep = ordinary_line_bound_check(cfg)
        assert rep.bound == Fraction(36, 13) and rep.holds

    def test_collinear_rejected(self):
        cfg = PointConfig.from_coords([(1, t, 0) for t in range(5)])
        with pytest.raises(PreconditionViolated):
            ordinary_line_bound_check(cfg)


class TestLemmaTrichotomy:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=3, max_value=10))
    def test_t3_or_intersecting_ordinary_pair(self, seed, n):
        cfg = gen_random_rational(n, seed=seed, bound=9)
        prof = incidence_profile(cfg)
        if prof.all_collinear:
            return
        if prof.tk.get(3, 0) >= 1:
            return
        seen = set()
        for _, pair in prof.ordinary():
            if pair[0] in seen or pair[1] in seen:
                return  # two ordinary lines share a configuration point
            seen.update(pair)
        pytest.fail("no 3-point line and all ordinary lines disjoint")


class TestPointConfig:
    def test_sorted_and_deduped(self):
        cfg = PointConfig.from_coords([(0, 0, 1), (1, 0, 0)])
        assert cfg.points[0] == P(0, 0, 1)

    def test_duplicates_rejected(self):
        with pytest.raises(DegenerateInput):
            PointConfig.from_coords([(1, 0, 0), (2, 0, 0)])

    def test_mixed_fields_rejected(self):
        from ordconic import PrimeField

        with pytest.raises(DegenerateInput):
            PointConfig.from_points([P(1, 0, 0), P(0, 1, 0, field=PrimeField(5))])
