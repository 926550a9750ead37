"""The constructive finder: case fixtures, verification, and oracle agreement."""

import pytest

from ordconic import (
    AllOnConic,
    Collinear,
    Conic,
    IntersectingPair,
    InternalInvariantViolation,
    OrdinaryConic,
    PointConfig,
    PreconditionViolated,
    ProjPoint,
    TripleLine,
    UnsupportedField,
    classify_main_case,
    conic_is_singular,
    conic_through_five,
    enumerate_ordinary_conics,
    exists_conic_through_all_bruteforce,
    find_ordinary_conic,
    gen_finite_plane_full,
    gen_random_rational,
    gen_singular_only,
    points_on_conic,
    resolve_cremona_case,
    resolve_triple_line,
)

P = ProjPoint.make
Cfg = PointConfig.from_coords

F, G, H = P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)


def assert_sound(cfg, result):
    """Re-derive the result's claims from scratch."""
    if isinstance(result, AllOnConic):
        assert all(result.conic.contains(p) for p in cfg.points)
        assert exists_conic_through_all_bruteforce(cfg) is not None
    else:
        on = points_on_conic(result.conic, cfg.points)
        assert tuple(on) == result.witness and len(on) == 5
        fit = conic_through_five(result.witness)
        assert fit.determined and fit.conic == result.conic


class TestClassify:
    def test_collinear(self):
        case = classify_main_case(Cfg([(1, t, 0) for t in range(3)]))
        assert isinstance(case, Collinear)

    def test_four_generic_intersecting_pair(self):
        case = classify_main_case(Cfg([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]))
        assert isinstance(case, IntersectingPair)
        assert case.line1.contains(case.vertex) and case.line2.contains(case.vertex)

    def test_three_collinear_plus_one(self):
        # lines from the off-line point are ordinary and meet there
        case = classify_main_case(Cfg([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)]))
        assert isinstance(case, IntersectingPair)
        assert case.vertex == P(0, 0, 1)

    def test_triple_line_over_f3(self):
        # the F_3 plane minus a point has no ordinary line but four 3-point lines
        full = gen_finite_plane_full(3)
        cfg = PointConfig.from_points([p for p in full.points if p.coords != (0, 0, 1)])
        case = classify_main_case(cfg)
        assert isinstance(case, TripleLine)

    def test_no_case_over_full_f3(self):
        with pytest.raises(InternalInvariantViolation):
            classify_main_case(gen_finite_plane_full(3))


class TestResolveTripleLine:
    def test_three_plus_noncollinear_rest(self):
        cfg = Cfg([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1), (1, 1, 1), (2, 1, 1)])
        from ordconic import line_through

        ln = line_through(P(1, 0, 0), P(1, 1, 0))
        res = resolve_triple_line(cfg, ln)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("TripleLine",)
        assert_sound(cfg, res)

    def test_rest_on_one_line(self):
        cfg = Cfg([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1), (0, 1, 2), (0, 1, 5)])
        from ordconic import line_through

        res = resolve_triple_line(cfg, line_through(P(1, 0, 0), P(1, 1, 0)))
        assert isinstance(res, AllOnConic)
        assert_sound(cfg, res)

    def test_single_rest_point(self):
        cfg = Cfg([(1, 0, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
        from ordconic import line_through

        res = resolve_triple_line(cfg, line_through(P(1, 0, 0), P(1, 1, 0)))
        assert isinstance(res, AllOnConic)
        assert_sound(cfg, res)

    def test_wrong_count_rejected(self):
        cfg = Cfg([(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (0, 0, 1)])
        from ordconic import line_through

        with pytest.raises(PreconditionViolated):
            resolve_triple_line(cfg, line_through(P(1, 0, 0), P(1, 1, 0)))

    def test_field_generic_over_f3(self):
        full = gen_finite_plane_full(3)
        cfg = PointConfig.from_points(
            [p for p in full.points if p.coords not in ((0, 0, 1), (0, 1, 0))]
        )
        case = classify_main_case(cfg)
        assert isinstance(case, TripleLine)
        res = resolve_triple_line(cfg, case.line)
        assert isinstance(res, OrdinaryConic)

    def test_residual_without_ordinary_line_over_f3(self):
        # plane minus one point: every residual line carries three points
        full = gen_finite_plane_full(3)
        cfg = PointConfig.from_points([p for p in full.points if p.coords != (0, 0, 1)])
        case = classify_main_case(cfg)
        with pytest.raises(InternalInvariantViolation):
            resolve_triple_line(cfg, case.line)


class TestCremonaSubcases:
    """Hand-built fixtures driving each branch of the case analysis."""

    def test_sub_1a(self):
        # S, T on the conic xy + xz + yz through the base; U breaks GH
        cfg = PointConfig.from_points([F, G, H, P(2, 2, -1), P(3, 6, -2), P(0, 1, 1)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("Sub1a",)
        assert P(0, 1, 1) in res.witness and F in res.witness and G in res.witness
        assert_sound(cfg, res)

    def test_sub_1a_all_on_conic_when_gh_ordinary(self):
        cfg = PointConfig.from_points([F, G, H, P(2, 2, -1), P(3, 6, -2)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, AllOnConic)
        assert res.conic.coeffs == (0, 0, 0, 1, 1, 1)
        assert_sound(cfg, res)

    def test_sub_1b_single_residual_point(self):
        cfg = PointConfig.from_points([F, G, H, P(0, 1, 1), P(1, 1, 1)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, AllOnConic)
        assert_sound(cfg, res)

    def test_sub_1b_line_through_f(self):
        # residual points on the line y = z through F
        cfg = PointConfig.from_points([F, G, H, P(1, 1, 1), P(2, 1, 1)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, AllOnConic)
        assert_sound(cfg, res)

    def test_sub_1c_triple_line(self):
        cfg = PointConfig.from_points([F, G, H, P(0, 1, 1), P(1, 1, 1), P(1, 1, 2)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("Sub1c", "TripleLine")
        assert_sound(cfg, res)

    def test_sub_1c_conic_branch(self):
        cfg = PointConfig.from_points(
            [F, G, H, P(0, 1, 1), P(0, 1, 2), P(1, 1, 1), P(1, 1, 2)]
        )
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("Sub1c",)
        # hand elimination gives (y - z)(2y - z)
        assert res.conic.coeffs == (0, 2, 1, 0, 0, -3)
        assert conic_is_singular(res.conic)
        assert_sound(cfg, res)

    def test_sub_2a(self):
        cfg = PointConfig.from_points(
            [F, G, H, P(2, 2, -1), P(3, 6, -2), P(1, 1, 1)]
        )
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("Sub2a",)
        assert res.conic.coeffs == (0, 0, 0, 1, 1, 1)
        assert {F, G, H}.issubset(res.witness)
        assert_sound(cfg, res)

    def test_sub_2b(self):
        cfg = PointConfig.from_points(
            [F, G, H, P(1, 1, 1), P(2, 2, 1), P(1, 2, 1)]
        )
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, OrdinaryConic)
        assert res.trace == ("Sub2b", "TripleLine")
        assert res.conic.coeffs == (0, 0, 0, 0, 1, -1)  # z(x - y)
        assert_sound(cfg, res)

    def test_not_ordinary_rejected(self):
        cfg = PointConfig.from_points([F, G, H, P(1, 1, 0), P(1, 1, 1)])
        with pytest.raises(PreconditionViolated):
            resolve_cremona_case(cfg, F, G, H)  # FG carries (1:1:0)

    def test_residual_empty(self):
        cfg = PointConfig.from_points([F, G, H, P(0, 1, 1)])
        res = resolve_cremona_case(cfg, F, G, H)
        assert isinstance(res, AllOnConic)
        assert_sound(cfg, res)


class TestFindOrdinaryConic:
    def test_five_points_all_on_conic(self):
        res = find_ordinary_conic(Cfg([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]))
        assert isinstance(res, AllOnConic)

    def test_collinear_all_on_conic(self):
        res = find_ordinary_conic(Cfg([(1, t, 0) for t in range(6)]))
        assert isinstance(res, AllOnConic)

    def test_five_on_conic_plus_one(self):
        pts = [(1, t, t * t) for t in (-2, -1, 0, 1, 2)] + [(1, 3, 5)]
        cfg = Cfg(pts)
        res = find_ordinary_conic(cfg)
        assert isinstance(res, OrdinaryConic)
        assert_sound(cfg, res)
        certs = enumerate_ordinary_conics(cfg)
        assert any(c.subset == res.witness and c.conic == res.conic for c in certs)

    def test_singular_only_configuration(self):
        cfg = gen_singular_only(1, 2, 3)
        res = find_ordinary_conic(cfg)
        assert isinstance(res, OrdinaryConic)
        assert conic_is_singular(res.conic)
        assert res.trace[0] == "MainC"
        assert_sound(cfg, res)

    def test_finite_field_rejected(self):
        with pytest.raises(UnsupportedField):
            find_ordinary_conic(gen_finite_plane_full(3))

    def test_trace_paths_are_valid(self):
        valid = {
            ("MainB", "TripleLine"),
            ("MainC", "Sub1a"),
            ("MainC", "Sub1c"),
            ("MainC", "Sub1c", "TripleLine"),
            ("MainC", "Sub2a"),
            ("MainC", "Sub2b", "TripleLine"),
        }
        for seed in range(60):
            cfg = gen_random_rational(5 + seed % 8, seed=seed, bound=30)
            res = find_ordinary_conic(cfg)
            if isinstance(res, OrdinaryConic):
                assert res.trace in valid

    def test_fuzz_agreement_small(self):
        for seed in range(40):
            cfg = gen_random_rational(6 + seed % 6, seed=seed, bound=12)
            res = find_ordinary_conic(cfg)
            assert_sound(cfg, res)
            if isinstance(res, OrdinaryConic):
                certs = enumerate_ordinary_conics(cfg)
                assert any(
                    c.subset == res.witness and c.conic == res.conic for c in certs
                )

    def test_result_conic_exactly_five(self):
        cfg = gen_random_rational(10, seed=77, bound=25)
        res = find_ordinary_conic(cfg)
        if isinstance(res, OrdinaryConic):
            assert len(points_on_conic(res.conic, cfg.points)) == 5


class TestVerification:
    def test_verify_rejects_wrong_witness(self):
        from ordconic.finder import _verify

        cfg = Cfg([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, 5, 1)])
        bogus = OrdinaryConic(
            Conic.make((1, 0, 0, 0, 0, 0)), tuple(cfg.points[:5]), ("Sub2a",)
        )
        with pytest.raises(InternalInvariantViolation):
            _verify(cfg, bogus)
