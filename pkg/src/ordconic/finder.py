"""Constructive search for an all-containing conic or an ordinary conic.

For a rational point set the search never fails: either some conic contains
every point (checked first by an exact rank computation), or the case
analysis below produces a conic through exactly five of the points that is
uniquely determined by them.  The reduction works by picking two ordinary
lines meeting at a configuration point and transporting the residual set
through the Cremona transformation based at the three points involved; the
image set is then handled by ordinary-line arguments.

Every branch re-verifies its result before returning, so a wrong answer is
impossible: at worst the finder raises InternalInvariantViolation, which for
rational input would mean a genuine bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cremona import (
    CremonaMap,
    R_FG,
    R_FH,
    R_GH,
    cremona_apply_generic,
    cremona_image_of_line,
    cremona_new,
)
from .errors import (
    InternalInvariantViolation,
    PreconditionViolated,
    UnsupportedField,
)
from .fields import RationalField
from .incidence import PointConfig, incidence_profile
from .projective import (
    Conic,
    ProjLine,
    ProjPoint,
    collinear,
    conic_contains_all,
    conic_from_lines,
    conic_through_five,
    line_through,
    points_on_conic,
    points_on_line,
)

# case-trace labels; a trace is a root-to-leaf path in the case tree
MAIN_A = "MainA"  # all points collinear
MAIN_B = "MainB"  # a line with exactly three points
MAIN_C = "MainC"  # two ordinary lines meeting at a configuration point
TRIPLE_LINE = "TripleLine"
SUB_1A = "Sub1a"
SUB_1B = "Sub1b"
SUB_1C = "Sub1c"
SUB_2A = "Sub2a"
SUB_2B = "Sub2b"


@dataclass(frozen=True)
class Collinear:
    line: ProjLine


@dataclass(frozen=True)
class TripleLine:
    line: ProjLine


@dataclass(frozen=True)
class IntersectingPair:
    vertex: ProjPoint
    line1: ProjLine
    line2: ProjLine


MainCase = Collinear | TripleLine | IntersectingPair


@dataclass(frozen=True)
class AllOnConic:
    conic: Conic


@dataclass(frozen=True)
class OrdinaryConic:
    conic: Conic
    witness: tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    trace: tuple[str, ...]


SGConicResult = AllOnConic | OrdinaryConic


def classify_main_case(cfg: PointConfig) -> MainCase:
    """Trichotomy: collinear, or an intersecting ordinary pair, or a 3-point line.

    The intersecting pair is preferred when both alternatives are available.
    Over the rationals one of the three always applies; failure to classify
    is therefore reported as an internal violation.
    """
    profile = incidence_profile(cfg)
    if profile.all_collinear:
        return Collinear(profile.lines[0][0])
    by_vertex: dict[ProjPoint, list[ProjLine]] = {}
    for ln, pts in profile.ordinary():
        for pt in pts:
            by_vertex.setdefault(pt, []).append(ln)
    for pt in cfg.points:
        lns = by_vertex.get(pt, ())
        if len(lns) >= 2:
            return IntersectingPair(pt, lns[0], lns[1])
    for ln, pts in profile.lines:
        if len(pts) == 3:
            return TripleLine(ln)
    raise InternalInvariantViolation(
        "no collinearity, no 3-point line, no intersecting ordinary pair"
    )


def _verify(cfg: PointConfig, result: SGConicResult) -> SGConicResult:
    """Exact post-verification of a result; raises on any discrepancy."""
    if isinstance(result, AllOnConic):
        if any(not result.conic.contains(p) for p in cfg.points):
            raise InternalInvariantViolation("claimed conic misses a point")
        return result
    on = points_on_conic(result.conic, cfg.points)
    if tuple(on) != result.witness:
        raise InternalInvariantViolation(
            f"conic meets the set in {on}, claimed {list(result.witness)}"
        )
    refit = conic_through_five(result.witness)
    if not refit.determined or refit.conic != result.conic:
        raise InternalInvariantViolation("witness does not determine the conic")
    return result


def _witness(points) -> tuple[ProjPoint, ...]:
    return tuple(sorted(points, key=lambda p: p.coords))


def resolve_triple_line(cfg: PointConfig, ln: ProjLine) -> SGConicResult:
    """Resolve the case of a line carrying exactly three configuration points.

    With the three points removed, the rest is either contained in one line M
    (then the union ln * M holds everything) or has an ordinary line M, and
    ln * M is a conic through exactly 3 + 2 points, determined because
    neither component carries four of them.
    """
    on_line = points_on_line(ln, cfg.points)
    if len(on_line) != 3:
        raise PreconditionViolated(f"line carries {len(on_line)} points, need 3")
    rest = [p for p in cfg.points if p not in on_line]
    if not rest:
        return _verify(cfg, AllOnConic(conic_from_lines(ln, ln)))
    if len(rest) == 1:
        other = line_through(rest[0], on_line[0])
        return _verify(cfg, AllOnConic(conic_from_lines(ln, other)))
    if all(collinear(rest[0], rest[1], p) for p in rest[2:]):
        other = line_through(rest[0], rest[1])
        return _verify(cfg, AllOnConic(conic_from_lines(ln, other)))
    sub = PointConfig.from_points(rest)
    ordinary = incidence_profile(sub).ordinary()
    if not ordinary:
        raise InternalInvariantViolation("residual set has no ordinary line")
    other, pair = ordinary[0]
    witness = _witness(on_line + list(pair))
    return _verify(
        cfg, OrdinaryConic(conic_from_lines(ln, other), witness, (TRIPLE_LINE,))
    )


def _image_config(m: CremonaMap, points) -> tuple[PointConfig, dict[ProjPoint, ProjPoint]]:
    back: dict[ProjPoint, ProjPoint] = {}
    for p in points:
        back[cremona_apply_generic(m, p)] = p
    return PointConfig.from_points(back.keys()), back


def _expect_line(obj) -> ProjLine:
    if not isinstance(obj, ProjLine):
        raise InternalInvariantViolation(f"expected a line image, got {obj!r}")
    return obj


def _expect_conic(obj) -> Conic:
    if not isinstance(obj, Conic):
        raise InternalInvariantViolation(f"expected a conic image, got {obj!r}")
    return obj


def resolve_cremona_case(
    cfg: PointConfig, f: ProjPoint, g: ProjPoint, h: ProjPoint
) -> SGConicResult:
    """Resolve the intersecting-ordinary-pair case via the Cremona map at (F, G, H).

    FG and FH must be ordinary lines of the configuration.  The residual
    points (those off the base triangle) are pushed through the map; their
    images are treated with line arguments and the answer is pulled back.
    """
    for p in (f, g, h):
        if p not in cfg:
            raise PreconditionViolated(f"{p} is not a configuration point")
    line_fg = line_through(f, g)
    line_fh = line_through(f, h)
    if set(points_on_line(line_fg, cfg.points)) != {f, g}:
        raise PreconditionViolated("FG is not an ordinary line of the configuration")
    if set(points_on_line(line_fh, cfg.points)) != {f, h}:
        raise PreconditionViolated("FH is not an ordinary line of the configuration")
    line_gh = line_through(g, h)
    on_gh = points_on_line(line_gh, cfg.points)
    residual = [
        p
        for p in cfg.points
        if not (line_fg.contains(p) or line_fh.contains(p) or line_gh.contains(p))
    ]
    if not residual:
        return _verify(cfg, AllOnConic(conic_from_lines(line_gh, line_fg)))
    m = cremona_new(f, g, h)
    images, back = _image_config(m, residual)
    if images.s == 1:
        image_line = line_through(images.points[0], m.r_point(R_GH))
        return _case1(cfg, m, image_line, on_gh, residual)
    profile = incidence_profile(images)
    if profile.all_collinear:
        image_line = profile.lines[0][0]
        return _case1(cfg, m, image_line, on_gh, residual)
    return _case2(cfg, m, profile, back)


def _case1(
    cfg: PointConfig,
    m: CremonaMap,
    image_line: ProjLine,
    on_gh: list[ProjPoint],
    residual: list[ProjPoint],
) -> SGConicResult:
    """All image points on one line: split on which corner points it hits."""
    f, g, h = m.base
    hits = [c for c in (R_GH, R_FH, R_FG) if image_line.contains(m.r_point(c))]
    if len(hits) > 1:
        raise InternalInvariantViolation("image line through two corner points")
    gh_ordinary = len(on_gh) == 2

    if not hits:
        # preimage is a smooth conic through F, G and H carrying the residual set
        back_conic = _expect_conic(cremona_image_of_line(m, image_line))
        if gh_ordinary:
            return _verify(cfg, AllOnConic(back_conic))
        u = next(p for p in on_gh if p not in (g, h))
        s, t = residual[0], residual[1]
        fit = conic_through_five([s, t, u, f, g])
        return _verify(
            cfg, OrdinaryConic(fit.conic, _witness([s, t, u, f, g]), (SUB_1A,))
        )

    corner = hits[0]
    back_line = _expect_line(cremona_image_of_line(m, image_line))
    if corner == R_GH:
        # preimage is a line through F; everything sits on it and on GH
        line_gh = line_through(g, h)
        return _verify(cfg, AllOnConic(conic_from_lines(back_line, line_gh)))

    # corner is R_FG or R_FH: preimage is a line through H (resp. G)
    through = h if corner == R_FG else g
    if not back_line.contains(through):
        raise InternalInvariantViolation("preimage line misses the expected base point")
    if gh_ordinary:
        side = line_through(f, g) if corner == R_FG else line_through(f, h)
        return _verify(cfg, AllOnConic(conic_from_lines(back_line, side)))
    if len(on_gh) == 3:
        line_gh = line_through(g, h)
        inner = resolve_triple_line(cfg, line_gh)
        return _prefix(inner, SUB_1C)
    extras = [p for p in on_gh if p not in (g, h)]
    u, v = extras[0], extras[1]
    s, t = residual[0], residual[1]
    fit = conic_through_five([f, u, v, s, t])
    return _verify(
        cfg, OrdinaryConic(fit.conic, _witness([f, u, v, s, t]), (SUB_1C,))
    )


def _case2(
    cfg: PointConfig,
    m: CremonaMap,
    profile,
    back: dict[ProjPoint, ProjPoint],
) -> SGConicResult:
    """Image points not collinear: classify their ordinary lines by corner hits."""
    f, g, h = m.base
    missing_all = []
    through_fg_fh = []
    for ln, pair in profile.ordinary():
        hits = [c for c in (R_GH, R_FH, R_FG) if ln.contains(m.r_point(c))]
        if len(hits) > 1:
            raise InternalInvariantViolation("ordinary image line through two corners")
        if not hits:
            missing_all.append((ln, pair))
        elif hits[0] in (R_FG, R_FH):
            through_fg_fh.append((ln, pair))
    if missing_all:
        ln, pair = missing_all[0]
        back_conic = _expect_conic(cremona_image_of_line(m, ln))
        s, t = back[pair[0]], back[pair[1]]
        return _verify(
            cfg, OrdinaryConic(back_conic, _witness([s, t, f, g, h]), (SUB_2A,))
        )
    if through_fg_fh:
        ln, _pair = through_fg_fh[0]
        back_line = _expect_line(cremona_image_of_line(m, ln))
        inner = resolve_triple_line(cfg, back_line)
        return _prefix(inner, SUB_2B)
    if not profile.ordinary():
        raise InternalInvariantViolation("image set has no ordinary line")
    raise InternalInvariantViolation(
        "every ordinary line of the image set passes through R_GH"
    )


def _prefix(result: SGConicResult, label: str) -> SGConicResult:
    if isinstance(result, OrdinaryConic):
        return OrdinaryConic(result.conic, result.witness, (label,) + result.trace)
    return result


def find_ordinary_conic(cfg: PointConfig) -> SGConicResult:
    """Either a conic through all points, or a verified ordinary conic.

    Only rational configurations are accepted; over a finite field the
    dichotomy genuinely fails (the full plane over F_5 is a counterexample),
    so such input is rejected up front.
    """
    if not isinstance(cfg.field, RationalField):
        raise UnsupportedField("the ordinary-conic dichotomy holds over the rationals only")
    whole = conic_contains_all(cfg.points)
    if whole is not None:
        return _verify(cfg, AllOnConic(whole))
    case = classify_main_case(cfg)
    if isinstance(case, Collinear):
        # collinear sets always lie on a conic, so the rank check catches them
        raise InternalInvariantViolation("collinear set survived the rank check")
    if isinstance(case, TripleLine):
        return _verify(cfg, _prefix(resolve_triple_line(cfg, case.line), MAIN_B))
    pts1 = points_on_line(case.line1, cfg.points)
    pts2 = points_on_line(case.line2, cfg.points)
    g = next(p for p in pts1 if p != case.vertex)
    h = next(p for p in pts2 if p != case.vertex)
    result = resolve_cremona_case(cfg, case.vertex, g, h)
    return _verify(cfg, _prefix(result, MAIN_C))
