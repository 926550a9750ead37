"""Points, lines and conics of the projective plane with exact incidence.

Everything is stored in canonical homogeneous form (see fields.py), so two
objects are projectively equal iff they compare equal as tuples.  All
operations are pure and exact; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import linalg
from .errors import DegenerateInput
from .fields import QQ, Coordinate, Field


@dataclass(frozen=True)
class ProjPoint:
    """A point (x : y : z), canonicalized."""

    field: Field
    coords: tuple[int, int, int]

    @classmethod
    def make(cls, x: Coordinate, y: Coordinate, z: Coordinate, field: Field = QQ) -> "ProjPoint":
        return cls(field, field.normalize_vector((x, y, z)))

    def __repr__(self) -> str:
        return "({} : {} : {})".format(*self.coords)


@dataclass(frozen=True)
class ProjLine:
    """A line [a : b : c], incident to (x : y : z) iff ax + by + cz = 0."""

    field: Field
    coeffs: tuple[int, int, int]

    @classmethod
    def make(cls, a: Coordinate, b: Coordinate, c: Coordinate, field: Field = QQ) -> "ProjLine":
        return cls(field, field.normalize_vector((a, b, c)))

    def contains(self, point: ProjPoint) -> bool:
        a, b, c = self.coeffs
        x, y, z = point.coords
        return self.field.is_zero(a * x + b * y + c * z)

    def __repr__(self) -> str:
        return "[{} : {} : {}]".format(*self.coeffs)


@dataclass(frozen=True)
class Conic:
    """A conic A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0, canonicalized."""

    field: Field
    coeffs: tuple[int, int, int, int, int, int]

    @classmethod
    def make(cls, coeffs, field: Field = QQ) -> "Conic":
        normalized = field.normalize_vector(tuple(coeffs))
        if len(normalized) != 6:
            raise DegenerateInput("a conic needs 6 coefficients")
        return cls(field, normalized)

    def evaluate(self, point: ProjPoint) -> int:
        a, b, c, d, e, f = self.coeffs
        x, y, z = point.coords
        return a * x * x + b * y * y + c * z * z + d * x * y + e * x * z + f * y * z

    def contains(self, point: ProjPoint) -> bool:
        return self.field.is_zero(self.evaluate(point))

    def __repr__(self) -> str:
        names = ("x^2", "y^2", "z^2", "x*y", "x*z", "y*z")
        terms = [f"{c}*{n}" for c, n in zip(self.coeffs, names) if c != 0]
        return "Conic<" + " + ".join(terms) + ">"


def _cross(u: tuple[int, int, int], v: tuple[int, int, int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _require_same_field(*objs) -> Field:
    field = objs[0].field
    for o in objs[1:]:
        if o.field != field:
            raise ValueError("mixed ground fields")
    return field


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (cross product)."""
    field = _require_same_field(p, q)
    if p == q:
        raise DegenerateInput(f"coincident points {p}")
    return ProjLine.make(*_cross(p.coords, q.coords), field=field)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines (dual cross product)."""
    field = _require_same_field(l1, l2)
    if l1 == l2:
        raise DegenerateInput(f"coincident lines {l1}")
    return ProjPoint.make(*_cross(l1.coeffs, l2.coeffs), field=field)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    """True iff the three points lie on a common line (duplicates count)."""
    field = _require_same_field(p, q, r)
    return field.is_zero(linalg.det3((p.coords, q.coords, r.coords)))


def conic_row(p: ProjPoint) -> tuple[int, int, int, int, int, int]:
    """Evaluation row (x^2, y^2, z^2, xy, xz, yz) used for conic interpolation."""
    x, y, z = p.coords
    return (x * x, y * y, z * z, x * y, x * z, y * z)


class FittedConic(NamedTuple):
    conic: Conic
    determined: bool


def conic_through_five(points) -> FittedConic:
    """Interpolate a conic through 5 distinct points.

    The 5x6 incidence system always has a nontrivial kernel; `determined`
    reports whether that kernel is one-dimensional, i.e. whether the five
    points pin down a single conic.  When they do not, the returned conic
    is the lexicographically first canonical kernel basis vector.
    """
    points = list(points)
    if len(points) != 5:
        raise DegenerateInput(f"need exactly 5 points, got {len(points)}")
    if len(set(points)) != 5:
        raise DegenerateInput("duplicate points")
    field = _require_same_field(*points)
    basis = linalg.nullspace_basis([list(conic_row(p)) for p in points], field)
    return FittedConic(Conic(field, basis[0]), len(basis) == 1)


def conic_contains_all(points) -> Conic | None:
    """A conic through every given point, or None if no conic exists.

    For 5 or fewer points some conic always exists.
    """
    points = list(points)
    if not points:
        raise DegenerateInput("empty point set")
    field = _require_same_field(*points)
    basis = linalg.nullspace_basis([list(conic_row(p)) for p in points], field)
    if not basis:
        return None
    return Conic(field, basis[0])


def points_on_conic(conic: Conic, points: Iterable[ProjPoint]) -> list[ProjPoint]:
    """The members of `points` lying on the conic, in their given order."""
    return [p for p in points if conic.contains(p)]


def points_on_line(line: ProjLine, points: Iterable[ProjPoint]) -> list[ProjPoint]:
    return [p for p in points if line.contains(p)]


def conic_is_singular(conic: Conic) -> bool:
    """Determinant test on the doubled Gram matrix (valid in odd characteristic)."""
    a, b, c, d, e, f = conic.coeffs
    det = linalg.det3(((2 * a, d, e), (d, 2 * b, f), (e, f, 2 * c)))
    return conic.field.is_zero(det)


def linear_form_product(
    l1: tuple[int, int, int], l2: tuple[int, int, int]
) -> tuple[int, int, int, int, int, int]:
    """Conic coefficients of the product of two linear forms."""
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return (
        a1 * a2,
        b1 * b2,
        c1 * c2,
        a1 * b2 + a2 * b1,
        a1 * c2 + a2 * c1,
        b1 * c2 + b2 * c1,
    )


def conic_from_lines(l1: ProjLine, l2: ProjLine) -> Conic:
    """The (singular) conic that is the union of two lines."""
    field = _require_same_field(l1, l2)
    return Conic.make(linear_form_product(l1.coeffs, l2.coeffs), field=field)
