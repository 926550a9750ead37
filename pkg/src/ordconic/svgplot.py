"""Static SVG rendering of a configuration, its lines, and an optional conic.

All geometry is computed with exact rationals and only formatted to fixed
4-decimal strings at the very end, so output bytes depend on nothing but the
input.  The conic is traced implicitly: the affine chart is sampled on a
fixed grid and sign changes are joined by linearly interpolated segments.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RenderError
from .incidence import PointConfig, incidence_profile
from .projective import Conic, ProjPoint

_CHART_AXES = {"x": 0, "y": 1, "z": 2}
SIZE = 640


def _fmt(q: Fraction) -> str:
    """Exactly rounded 4-decimal rendering (half away from zero)."""
    scaled = q.numerator * 10000
    d = q.denominator
    if scaled >= 0:
        r = (2 * scaled + d) // (2 * d)
        sign = ""
    else:
        r = (2 * -scaled + d) // (2 * d)
        sign = "-" if r else ""
    return f"{sign}{r // 10000}.{r % 10000:04d}"


def _affine(p: ProjPoint, axis: int) -> tuple[Fraction, Fraction] | None:
    w = p.coords[axis]
    if w == 0:
        return None
    i, j = [k for k in range(3) if k != axis]
    return Fraction(p.coords[i], w), Fraction(p.coords[j], w)


def _line_affine(coeffs, axis: int) -> tuple[int, int, int]:
    """(cx, cy, c0) with the line being cx*X + cy*Y + c0 = 0 in the chart."""
    i, j = [k for k in range(3) if k != axis]
    return coeffs[i], coeffs[j], coeffs[axis]


def _conic_affine_value(conic: Conic, axis: int, xx: Fraction, yy: Fraction) -> Fraction:
    hom = [Fraction(0)] * 3
    i, j = [k for k in range(3) if k != axis]
    hom[i], hom[j], hom[axis] = xx, yy, Fraction(1)
    a, b, c, d, e, f = conic.coeffs
    x, y, z = hom
    return a * x * x + b * y * y + c * z * z + d * x * y + e * x * z + f * y * z


def _clip_line(cx: int, cy: int, c0: int, box) -> tuple | None:
    x0, x1, y0, y1 = box
    hits: list[tuple[Fraction, Fraction]] = []
    if cy != 0:
        for xv in (x0, x1):
            yv = Fraction(-c0 - cx * xv, cy)
            if y0 <= yv <= y1:
                hits.append((xv, yv))
    if cx != 0:
        for yv in (y0, y1):
            xv = Fraction(-c0 - cy * yv, cx)
            if x0 <= xv <= x1:
                hits.append((xv, yv))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def _trace_conic(conic: Conic, axis: int, box, resolution: int):
    """Marching-squares segments of the conic's zero set inside the box."""
    x0, x1, y0, y1 = box
    dx = Fraction(x1 - x0, resolution)
    dy = Fraction(y1 - y0, resolution)
    values = [
        [_conic_affine_value(conic, axis, x0 + i * dx, y0 + j * dy) for j in range(resolution + 1)]
        for i in range(resolution + 1)
    ]
    segments = []
    for i in range(resolution):
        for j in range(resolution):
            corners = (
                (values[i][j], (x0 + i * dx, y0 + j * dy)),
                (values[i + 1][j], (x0 + (i + 1) * dx, y0 + j * dy)),
                (values[i + 1][j + 1], (x0 + (i + 1) * dx, y0 + (j + 1) * dy)),
                (values[i][j + 1], (x0 + i * dx, y0 + (j + 1) * dy)),
            )
            crossings = []
            for k in range(4):
                va, (xa, ya) = corners[k]
                vb, (xb, yb) = corners[(k + 1) % 4]
                if (va > 0) != (vb > 0):
                    t = Fraction(va, va - vb)
                    crossings.append((xa + t * (xb - xa), ya + t * (yb - ya)))
            if len(crossings) == 2:
                segments.append((crossings[0], crossings[1]))
            elif len(crossings) == 4:
                segments.append((crossings[0], crossings[1]))
                segments.append((crossings[2], crossings[3]))
    return segments


def render_svg(
    cfg: PointConfig,
    conic: Conic | None = None,
    witness: tuple[ProjPoint, ...] = (),
    chart: str = "z",
    resolution: int = 160,
) -> str:
    """Render the configuration to an SVG document string."""
    axis = _CHART_AXES[chart]
    affine = {p: _affine(p, axis) for p in cfg.points}
    finite = {p: a for p, a in affine.items() if a is not None}
    if not finite:
        raise RenderError(f"no configuration point is finite in the {chart} chart")
    xs = [a[0] for a in finite.values()]
    ys = [a[1] for a in finite.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    margin = span * Fraction(15, 100)
    x0, x1 = min(xs) - margin, max(xs) + margin
    y0, y1 = min(ys) - margin, max(ys) + margin
    # keep the viewport square so scales match
    w, h = x1 - x0, y1 - y0
    if w < h:
        pad = (h - w) / 2
        x0, x1 = x0 - pad, x1 + pad
    elif h < w:
        pad = (w - h) / 2
        y0, y1 = y0 - pad, y1 + pad
    box = (x0, x1, y0, y1)

    def px(pt: tuple[Fraction, Fraction]) -> tuple[str, str]:
        return (
            _fmt((pt[0] - x0) / (x1 - x0) * SIZE),
            _fmt(SIZE - (pt[1] - y0) / (y1 - y0) * SIZE),
        )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if cfg.s >= 2:
        for ln, _pts in incidence_profile(cfg).lines:
            seg = _clip_line(*_line_affine(ln.coeffs, axis), box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = px(seg[0]), px(seg[1])
            parts.append(
                f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                f'stroke="#999999" stroke-width="1"/>'
            )
    if conic is not None:
        path = []
        for a, b in _trace_conic(conic, axis, box, resolution):
            (ax, ay), (bx, by) = px(a), px(b)
            path.append(f"M {ax} {ay} L {bx} {by}")
        if path:
            parts.append(
                f'<path d="{" ".join(path)}" stroke="#1f5fbe" stroke-width="2" fill="none"/>'
            )
    witness_set = set(witness)
    for p in cfg.points:
        a = affine[p]
        if a is None:
            continue
        cx, cy = px(a)
        if p in witness_set:
            parts.append(
                f'<circle cx="{cx}" cy="{cy}" r="7" stroke="#c43131" '
                f'stroke-width="2" fill="none"/>'
            )
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
