"""Quadratic Cremona transformations based at three non-collinear points.

The map is conjugated to the standard involution (x : y : z) -> (yz : xz : xy)
by the coordinate change sending the base triple (F, G, H) to the fundamental
points.  With that choice the map is its own inverse on the generic locus,
and the three contracted lines of the base triangle collapse onto the
opposite base points: line GH -> R_GH = F, line FH -> R_FH = G,
line FG -> R_FG = H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractedCurve, DegenerateInput, NotInGenericLocus
from .fields import Field
from .projective import (
    Conic,
    ProjLine,
    ProjPoint,
    collinear,
    line_through,
    linear_form_product,
)

R_GH = "R_GH"
R_FH = "R_FH"
R_FG = "R_FG"

# corner contracted from each triangle line, indexed by the vanishing
# fundamental coordinate (x = 0 is line GH, y = 0 is FH, z = 0 is FG)
_CORNER_BY_AXIS = (R_GH, R_FH, R_FG)
_BASE_LABELS = ("F", "G", "H")

Matrix3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def _adjugate(m: Matrix3) -> Matrix3:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def _apply(m: Matrix3, v: tuple[int, int, int]) -> tuple[int, int, int]:
    return tuple(sum(m[i][j] * v[j] for j in range(3)) for i in range(3))


def _transpose_apply(m: Matrix3, v: tuple[int, int, int]) -> tuple[int, int, int]:
    return tuple(sum(m[j][i] * v[j] for j in range(3)) for i in range(3))


def _normalize_matrix(m: Matrix3, fld: Field) -> Matrix3:
    flat = fld.normalize_vector([m[i][j] for i in range(3) for j in range(3)])
    return (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))


@dataclass(frozen=True)
class CremonaMap:
    base: tuple[ProjPoint, ProjPoint, ProjPoint]
    to_fundamental: Matrix3
    from_fundamental: Matrix3

    @property
    def field(self) -> Field:
        return self.base[0].field

    def r_point(self, corner: str) -> ProjPoint:
        """The point onto which the named triangle line is contracted."""
        return self.base[(R_GH, R_FH, R_FG).index(corner)]

    @property
    def triangle_lines(self) -> dict[str, ProjLine]:
        f, g, h = self.base
        return {R_GH: line_through(g, h), R_FH: line_through(f, h), R_FG: line_through(f, g)}


@dataclass(frozen=True)
class Generic:
    point: ProjPoint


@dataclass(frozen=True)
class ContractedTo:
    corner: str
    point: ProjPoint


@dataclass(frozen=True)
class Undefined:
    base_label: str
    point: ProjPoint


CremonaImage = Generic | ContractedTo | Undefined


def cremona_new(f: ProjPoint, g: ProjPoint, h: ProjPoint) -> CremonaMap:
    """The Cremona transformation based at three non-collinear points."""
    if len({f, g, h}) != 3:
        raise DegenerateInput("base points must be pairwise distinct")
    if collinear(f, g, h):
        raise DegenerateInput("base points must not be collinear")
    fld = f.field
    columns: Matrix3 = tuple(
        (f.coords[i], g.coords[i], h.coords[i]) for i in range(3)
    )
    from_fundamental = _normalize_matrix(columns, fld)
    to_fundamental = _normalize_matrix(_adjugate(columns), fld)
    return CremonaMap((f, g, h), to_fundamental, from_fundamental)


def _standard_map(u: tuple[int, int, int]) -> tuple[int, int, int]:
    return (u[1] * u[2], u[0] * u[2], u[0] * u[1])


def cremona_apply(m: CremonaMap, p: ProjPoint) -> CremonaImage:
    """Total image of a point: Generic, ContractedTo an R point, or Undefined."""
    fld = m.field
    u = _apply(m.to_fundamental, p.coords)
    zero = [fld.is_zero(c) for c in u]
    nzero = sum(zero)
    if nzero >= 2:
        axis = zero.index(False)
        return Undefined(_BASE_LABELS[axis], m.base[axis])
    if nzero == 1:
        axis = zero.index(True)
        corner = _CORNER_BY_AXIS[axis]
        return ContractedTo(corner, m.r_point(corner))
    image = _apply(m.from_fundamental, _standard_map(u))
    return Generic(ProjPoint.make(*image, field=fld))


def cremona_apply_generic(m: CremonaMap, p: ProjPoint) -> ProjPoint:
    """Image of a point off the base triangle; an involution on that locus."""
    image = cremona_apply(m, p)
    if not isinstance(image, Generic):
        raise NotInGenericLocus(f"{p} lies on the base triangle")
    return image.point


def transform_multiplicity_profile(
    d: int, m1: int, m2: int, m3: int
) -> tuple[int, int, int, int]:
    """Degree and multiplicity law for an irreducible curve under the map.

    A curve of degree d with multiplicities (m1, m2, m3) at the base points
    maps to degree 2d - m1 - m2 - m3 with multiplicities d - m2 - m3 at R_GH,
    d - m1 - m3 at R_FH and d - m1 - m2 at R_FG.
    """
    if d < 1:
        raise DegenerateInput(f"degree must be positive, got {d}")
    if not all(0 <= m <= d for m in (m1, m2, m3)):
        raise DegenerateInput("multiplicities must lie in [0, d]")
    d_image = 2 * d - m1 - m2 - m3
    if d_image <= 0:
        raise ContractedCurve("curve is one of the contracted triangle lines")
    return (d_image, d - m2 - m3, d - m1 - m3, d - m1 - m2)


def cremona_image_of_line(m: CremonaMap, line: ProjLine):
    """Image of a line: a Conic, a ProjLine, or ContractedTo an R point.

    Computed symbolically: pulling the linear form back through the map gives
    a quadratic form; contracted-line factors are divided out by inspecting
    which fundamental coordinates vanish in the transformed form.
    """
    fld = m.field
    a, b, c = _transpose_apply(m.from_fundamental, line.coeffs)
    zero = [fld.is_zero(v) for v in (a, b, c)]
    nzero = sum(zero)
    if nzero == 2:
        # the line is a side of the base triangle
        axis = zero.index(False)
        corner = _CORNER_BY_AXIS[axis]
        return ContractedTo(corner, m.r_point(corner))
    if nzero == 1:
        # one contracted-line factor splits off; the residual is a line
        axis = zero.index(True)
        residual = ((0, c, b), (c, 0, a), (b, a, 0))[axis]
        coeffs = _transpose_apply(m.to_fundamental, residual)
        return ProjLine.make(*coeffs, field=fld)
    # no base point on the line: the image is a conic through all three R points
    n0, n1, n2 = m.to_fundamental
    q = [0] * 6
    for coef, (r1, r2) in ((a, (n1, n2)), (b, (n0, n2)), (c, (n0, n1))):
        prod = linear_form_product(r1, r2)
        q = [acc + coef * term for acc, term in zip(q, prod)]
    return Conic.make(q, field=fld)
