"""Deterministic point-set generators: structured witnesses and fuzz input.

All generators are bit-reproducible functions of their parameters.  The
random ones draw from an explicit xorshift64* stream (documented below) so
that any implementation of the same update equations reproduces identical
configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import DegenerateInput, GenerationFailed
from .incidence import PointConfig
from .oracle import finite_plane
from .projective import ProjPoint, collinear, conic_row

_MASK64 = (1 << 64) - 1
_DEFAULT_STATE = 0x9E3779B97F4A7C15


class XorShift64Star:
    """xorshift64* pseudo-random stream.

    State update per draw (64-bit wrapping arithmetic):

        x ^= x >> 12
        x ^= x << 25
        x ^= x >> 27
        output = (x * 2685821657736338717) mod 2^64

    A zero seed is replaced by the fixed constant 0x9E3779B97F4A7C15 since
    the all-zero state is a fixed point of the update.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64 or _DEFAULT_STATE

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 2685821657736338717) & _MASK64

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] via modular reduction."""
        return lo + self.next_u64() % (hi - lo + 1)


@dataclass(frozen=True)
class GeneratorSpec:
    """Addressable description of a generated configuration."""

    kind: str  # singular-only | general-position | finite-plane | triangle-midpoints-centroid | random
    n: int | None = None
    seed: int | None = None
    bound: int | None = None
    p: int | None = None
    params: tuple[Fraction, ...] | None = None


def generate(spec: GeneratorSpec) -> PointConfig:
    if spec.kind == "singular-only":
        params = spec.params or (Fraction(1), Fraction(2), Fraction(3))
        return gen_singular_only(*params)
    if spec.kind == "general-position":
        return gen_general_position(spec.n or 6, spec.seed or 0)
    if spec.kind == "finite-plane":
        if spec.p is None:
            raise DegenerateInput("finite-plane needs a prime p")
        return gen_finite_plane_full(spec.p)
    if spec.kind == "triangle-midpoints-centroid":
        return gen_triangle_midpoints_centroid()
    if spec.kind == "random":
        return gen_random_rational(spec.n or 8, spec.seed or 0, spec.bound or 10)
    raise DegenerateInput(f"unknown generator kind {spec.kind!r}")


def gen_singular_only(t1, t2, t3) -> PointConfig:
    """Seven points whose ordinary conics are all singular.

    Takes the smooth conic y^2 = xz, the external point S = (0 : 1 : 0) and
    three chords through S.  A chord through S meets the conic in the points
    with parameters t and -t, so the parameters must be nonzero with
    distinct absolute values.  Every conic through five of these points
    contains a full chord and therefore splits.
    """
    ts = [Fraction(t) for t in (t1, t2, t3)]
    if any(t == 0 for t in ts):
        raise DegenerateInput("chord parameters must be nonzero")
    if len({abs(t) for t in ts}) != 3:
        raise DegenerateInput("chord parameters must have distinct absolute values")
    pts = [ProjPoint.make(0, 1, 0)]
    for t in ts:
        pts.append(ProjPoint.make(1, t, t * t))
        pts.append(ProjPoint.make(1, -t, t * t))
    return PointConfig.from_points(pts)


def gen_triangle_midpoints_centroid() -> PointConfig:
    """Triangle, edge midpoints and centroid: the sharp 7-point configuration.

    It has exactly 3 ordinary lines (t_2 = 3, t_3 = 6), attaining both the
    Melchior bound with equality and the 3s/7 ordinary-line bound at s = 7.
    """
    return PointConfig.from_coords(
        [
            (0, 0, 1),
            (1, 0, 1),
            (0, 1, 1),
            (1, 0, 2),
            (0, 1, 2),
            (1, 1, 2),
            (1, 1, 3),
        ]
    )


def gen_finite_plane_full(p: int) -> PointConfig:
    """All p^2 + p + 1 points of the projective plane over F_p."""
    return PointConfig.from_points(finite_plane(p).points)


def _no_conic_through_six(points: list[ProjPoint], candidate: ProjPoint) -> bool:
    row_new = list(conic_row(candidate))
    for five in combinations(points, 5):
        rows = [list(conic_row(q)) for q in five] + [row_new]
        if linalg.rank(rows, candidate.field) < 6:
            return False
    return True


def gen_general_position(n: int, seed: int) -> PointConfig:
    """n rational points with no 3 collinear and no 6 on a common conic.

    Rejection sampling with exact predicates; deterministic per seed.
    """
    if n < 1:
        raise DegenerateInput("need n >= 1")
    rng = XorShift64Star(seed)
    bound = 50 + n * n
    points: list[ProjPoint] = []
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 400 * n:
            raise GenerationFailed(f"no general-position set of size {n} found (seed {seed})")
        cand = ProjPoint.make(1, rng.next_int(-bound, bound), rng.next_int(-bound, bound))
        if cand in points:
            continue
        if any(collinear(cand, q, r) for q, r in combinations(points, 2)):
            continue
        if len(points) >= 5 and not _no_conic_through_six(points, cand):
            continue
        points.append(cand)
    return PointConfig.from_points(points)


def gen_random_rational(n: int, seed: int, bound: int) -> PointConfig:
    """n distinct random points with integer coordinates in [-bound, bound]."""
    if n < 1 or bound < 1:
        raise DegenerateInput("need n >= 1 and bound >= 1")
    rng = XorShift64Star(seed)
    seen: set[tuple[int, int, int]] = set()
    points: list[ProjPoint] = []
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 200 * n + 1000:
            raise GenerationFailed(
                f"grid [-{bound}, {bound}] cannot supply {n} distinct points (seed {seed})"
            )
        triple = tuple(rng.next_int(-bound, bound) for _ in range(3))
        if triple == (0, 0, 0):
            continue
        pt = ProjPoint.make(*triple)
        if pt.coords in seen:
            continue
        seen.add(pt.coords)
        points.append(pt)
    return PointConfig.from_points(points)
