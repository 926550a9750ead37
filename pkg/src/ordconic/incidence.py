"""Arrangement statistics for finite point sets.

A PointConfig is a duplicate-free set of projective points, stored sorted by
canonical coordinates so that every downstream tie-break ("first point",
"first line") is deterministic.  The incidence profile enumerates all lines
determined by the set together with their incidence counts t_k, and the
classical inequality checks are evaluated on top of it with both sides
returned exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, NamedTuple

from .errors import DegenerateInput, InternalInvariantViolation, PreconditionViolated
from .fields import Field, QQ
from .projective import ProjLine, ProjPoint, line_through, meet


@dataclass(frozen=True)
class PointConfig:
    """A finite set of distinct points over one field, in canonical order."""

    points: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise DegenerateInput("a point configuration must be nonempty")
        fld = self.points[0].field
        if any(p.field != fld for p in self.points):
            raise DegenerateInput("mixed ground fields in one configuration")
        if len(set(self.points)) != len(self.points):
            raise DegenerateInput("duplicate points in configuration")
        ordered = tuple(sorted(self.points, key=lambda p: p.coords))
        object.__setattr__(self, "points", ordered)

    @classmethod
    def from_points(cls, points: Iterable[ProjPoint]) -> "PointConfig":
        return cls(tuple(points))

    @classmethod
    def from_coords(cls, triples, fld: Field = QQ) -> "PointConfig":
        return cls(tuple(ProjPoint.make(x, y, z, field=fld) for x, y, z in triples))

    @property
    def field(self) -> Field:
        return self.points[0].field

    @property
    def s(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points


@dataclass(frozen=True)
class IncidenceProfile:
    """All lines determined by a configuration, with their point counts."""

    s: int
    lines: tuple[tuple[ProjLine, tuple[ProjPoint, ...]], ...]
    tk: dict[int, int] = dc_field(compare=False)

    @property
    def all_collinear(self) -> bool:
        return self.tk.get(self.s, 0) == 1

    @property
    def all_but_one_collinear(self) -> bool:
        return self.s >= 3 and self.tk.get(self.s - 1, 0) >= 1

    def ordinary(self) -> list[tuple[ProjLine, tuple[ProjPoint, ProjPoint]]]:
        return [(line, pts) for line, pts in self.lines if len(pts) == 2]


def incidence_profile(cfg: PointConfig) -> IncidenceProfile:
    """Enumerate every determined line of the configuration, exactly.

    Runs over all point pairs, deduplicating lines by canonical form.  The
    result is self-audited against the pair-counting identity
    sum_k C(k,2) t_k = C(s,2).
    """
    if cfg.s < 2:
        raise DegenerateInput("incidence profile needs at least 2 points")
    by_line: dict[ProjLine, set[int]] = {}
    pts = cfg.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            ln = line_through(pts[i], pts[j])
            by_line.setdefault(ln, set()).update((i, j))
    lines = tuple(
        (ln, tuple(pts[i] for i in sorted(members)))
        for ln, members in sorted(by_line.items(), key=lambda kv: kv[0].coeffs)
    )
    tk: dict[int, int] = {}
    for _, members in lines:
        tk[len(members)] = tk.get(len(members), 0) + 1
    if sum(comb(k, 2) * n for k, n in tk.items()) != comb(cfg.s, 2):
        raise InternalInvariantViolation("pair-counting identity failed")
    return IncidenceProfile(cfg.s, lines, tk)


def ordinary_lines(cfg: PointConfig) -> list[tuple[ProjLine, tuple[ProjPoint, ProjPoint]]]:
    """Lines meeting the configuration in exactly two points."""
    return incidence_profile(cfg).ordinary()


class InequalityReport(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


def melchior_check(profile: IncidenceProfile) -> InequalityReport:
    """t_2 >= 3 + sum_{k>=4} (k-3) t_k for non-collinear real configurations."""
    if profile.all_collinear:
        raise PreconditionViolated("all points collinear")
    lhs = profile.tk.get(2, 0)
    rhs = 3 + sum((k - 3) * n for k, n in profile.tk.items() if k >= 4)
    return InequalityReport(lhs >= rhs, lhs, rhs)


def dual_hirzebruch_check(profile: IncidenceProfile) -> InequalityReport:
    """t_2 + t_3 >= s + sum_{k>=5} (k-4) t_k, barring (near-)pencils."""
    if profile.all_collinear:
        raise PreconditionViolated("all points collinear")
    if profile.all_but_one_collinear:
        raise PreconditionViolated("all but one point collinear")
    lhs = profile.tk.get(2, 0) + profile.tk.get(3, 0)
    rhs = profile.s + sum((k - 4) * n for k, n in profile.tk.items() if k >= 5)
    return InequalityReport(lhs >= rhs, lhs, rhs)


def primal_hirzebruch_check(lines: list[ProjLine]) -> InequalityReport:
    """t_2 + t_3 >= d + sum_{k>=5} (k-4) t_k on a line arrangement.

    t_k here counts points where exactly k of the d lines meet.  Requires
    d >= 4 distinct lines and no point on d or d-1 of them.
    """
    d = len(lines)
    if len(set(lines)) != d:
        raise DegenerateInput("duplicate lines in arrangement")
    if d < 4:
        raise PreconditionViolated(f"need at least 4 lines, got {d}")
    through: dict[ProjPoint, set[int]] = {}
    for i in range(d):
        for j in range(i + 1, d):
            pt = meet(lines[i], lines[j])
            through.setdefault(pt, set()).update((i, j))
    tk: dict[int, int] = {}
    for members in through.values():
        tk[len(members)] = tk.get(len(members), 0) + 1
    if tk.get(d, 0) or tk.get(d - 1, 0):
        raise PreconditionViolated("a point lies on d or d-1 of the lines")
    lhs = tk.get(2, 0) + tk.get(3, 0)
    rhs = d + sum((k - 4) * n for k, n in tk.items() if k >= 5)
    return InequalityReport(lhs >= rhs, lhs, rhs)


class OrdinaryBoundReport(NamedTuple):
    count: int
    bound: Fraction
    holds: bool


def ordinary_line_bound_check(cfg: PointConfig) -> OrdinaryBoundReport:
    """Lower bound on the number of ordinary lines: 3s/7 at s = 7, else 6s/13.

    The bound is compared as an exact fraction, never rounded.
    """
    profile = incidence_profile(cfg)
    if profile.all_collinear:
        raise PreconditionViolated("all points collinear")
    count = profile.tk.get(2, 0)
    s = cfg.s
    bound = Fraction(3 * s, 7) if s == 7 else Fraction(6 * s, 13)
    return OrdinaryBoundReport(count, bound, count >= bound)
