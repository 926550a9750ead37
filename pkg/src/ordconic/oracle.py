"""Brute-force ground truth for ordinary curves and conic containment.

Everything in this module is exhaustive enumeration or independent linear
algebra, deliberately separate from the constructive finder so the two can
audit each other.  The subset scan is written on raw integer rows for speed;
at desk scale (a few hundred thousand subsets) it completes in seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from math import comb

from .errors import DegenerateInput, UnsupportedDegree, UnsupportedField
from .fields import Field, PrimeField, QQ, _is_odd_prime
from .incidence import PointConfig
from .projective import Conic, ProjPoint, conic_is_singular, conic_row


@dataclass(frozen=True)
class OrdinaryConicCertificate:
    """A 5-point subset that determines a conic meeting the set in exactly it."""

    subset: tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint, ProjPoint]
    conic: Conic
    singular: bool


@dataclass(frozen=True)
class FinitePlane:
    """All p^2 + p + 1 points of the projective plane over F_p."""

    p: int
    points: tuple[ProjPoint, ...]


def finite_plane(p: int) -> FinitePlane:
    if not _is_odd_prime(p):
        raise UnsupportedField(f"need an odd prime, got {p}")
    fld = PrimeField(p)
    pts = [ProjPoint(fld, (1, y, z)) for y in range(p) for z in range(p)]
    pts += [ProjPoint(fld, (0, 1, z)) for z in range(p)]
    pts.append(ProjPoint(fld, (0, 0, 1)))
    return FinitePlane(p, tuple(pts))


def conic_point_count_spectrum(plane: FinitePlane) -> dict[str, int]:
    """Points carried by each kind of conic over F_p.

    Representatives suffice: all smooth conics over F_p are projectively
    equivalent, as are all distinct-line pairs and all double lines.
    """
    fld = PrimeField(plane.p)
    reps = {
        "smooth": Conic.make((0, 1, 0, 0, -1, 0), field=fld),  # y^2 - xz
        "line_pair": Conic.make((0, 0, 0, 1, 0, 0), field=fld),  # xy
        "double_line": Conic.make((1, 0, 0, 0, 0, 0), field=fld),  # x^2
    }
    return {
        kind: sum(1 for pt in plane.points if conic.contains(pt))
        for kind, conic in reps.items()
    }


def _monomial_exponents(d: int) -> list[tuple[int, int, int]]:
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def _curve_row(p: ProjPoint, exponents) -> tuple[int, ...]:
    x, y, z = p.coords
    return tuple(x**i * y**j * z**k for i, j, k in exponents)


def _determined_kernel(rows, ncols: int, p: int | None):
    """Kernel vector of an (ncols-1) x ncols system iff its rank is ncols - 1.

    Returns the raw (un-normalized) kernel vector, or None when the system
    does not pin down a unique curve.  Over the rationals the forward pass
    is fraction-free; mod p it uses unit pivots.
    """
    n = ncols - 1
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    if p is None:
        prev = 1
        for c in range(ncols):
            pr = next((i for i in range(r, n) if m[i][c] != 0), None)
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
            for i in range(r + 1, n):
                mic = m[i][c]
                mrc = m[r][c]
                row_i = m[i]
                row_r = m[r]
                for j in range(c + 1, ncols):
                    row_i[j] = (row_i[j] * mrc - mic * row_r[j]) // prev
                row_i[c] = 0
            prev = m[r][c]
            pivots.append(c)
            r += 1
            if r == n:
                break
        if len(pivots) != n:
            return None
        free = next(c for c in range(ncols) if c not in pivots)
        v: list = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i in reversed(range(n)):
            pc = pivots[i]
            s = sum(m[i][j] * v[j] for j in range(pc + 1, ncols))
            v[pc] = Fraction(-s, m[i][pc])
        return v
    for c in range(ncols):
        pr = next((i for i in range(r, n) if m[i][c] % p != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [val * inv % p for val in m[r]]
        for i in range(r + 1, n):
            if m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    if len(pivots) != n:
        return None
    free = next(c for c in range(ncols) if c not in pivots)
    v = [0] * ncols
    v[free] = 1
    for i in reversed(range(n)):
        pc = pivots[i]
        s = sum(m[i][j] * v[j] for j in range(pc + 1, ncols)) % p
        v[pc] = -s % p
    return v


def _scan_chunk(field: Field, rows, size: int, start: int, stop: int):
    """Scan combination indices [start, stop) for determined exactly-incident subsets."""
    s = len(rows)
    ncols = size + 1
    p = field.p if isinstance(field, PrimeField) else None
    hits = []
    combos = islice(combinations(range(s), size), start, stop)
    if p is None:
        for combo in combos:
            vec = _determined_kernel([rows[i] for i in combo], ncols, None)
            if vec is None:
                continue
            chosen = set(combo)
            for j in range(s):
                if j in chosen:
                    continue
                if sum(r * c for r, c in zip(rows[j], vec)) == 0:
                    break
            else:
                hits.append((combo, field.normalize_vector(vec)))
    else:
        for combo in combos:
            vec = _determined_kernel([rows[i] for i in combo], ncols, p)
            if vec is None:
                continue
            chosen = set(combo)
            for j in range(s):
                if j in chosen:
                    continue
                if sum(r * c for r, c in zip(rows[j], vec)) % p == 0:
                    break
            else:
                hits.append((combo, field.normalize_vector(vec)))
    return hits


def _scan_chunk_star(args):
    return _scan_chunk(*args)


def _scan_all(cfg: PointConfig, rows, size: int, jobs: int = 1):
    total = comb(cfg.s, size)
    if jobs <= 1 or total < 4096:
        return _scan_chunk(cfg.field, rows, size, 0, total)
    import multiprocessing as mp

    nchunks = jobs * 4
    bounds = [total * i // nchunks for i in range(nchunks + 1)]
    tasks = [
        (cfg.field, rows, size, bounds[i], bounds[i + 1])
        for i in range(nchunks)
        if bounds[i] < bounds[i + 1]
    ]
    with mp.get_context("fork").Pool(jobs) as pool:
        chunked = pool.map(_scan_chunk_star, tasks)
    hits = []
    for chunk in chunked:
        hits.extend(chunk)
    return hits


def enumerate_ordinary_conics(cfg: PointConfig, jobs: int = 1) -> list[OrdinaryConicCertificate]:
    """Every 5-subset that determines a conic meeting the set in exactly itself.

    Exhaustive over all C(s, 5) subsets, in lexicographic subset order; the
    result is independent of `jobs`.
    """
    if cfg.s < 5:
        raise DegenerateInput(f"need at least 5 points, got {cfg.s}")
    rows = [conic_row(pt) for pt in cfg.points]
    certs = []
    for combo, vec in _scan_all(cfg, rows, 5, jobs):
        conic = Conic(cfg.field, vec)
        certs.append(
            OrdinaryConicCertificate(
                tuple(cfg.points[i] for i in combo), conic, conic_is_singular(conic)
            )
        )
    return certs


def find_ordinary_curves_deg_d(
    cfg: PointConfig, d: int, jobs: int = 1
) -> list[tuple[tuple[ProjPoint, ...], tuple[int, ...]]]:
    """Degree-d analogue of the conic scan, for d in 1..3.

    Emits (subset, coefficients) pairs where the subset of size
    (d+1)(d+2)/2 - 1 determines a unique degree-d curve meeting the
    configuration in exactly the subset.  Coefficients follow the monomial
    order x^d, x^(d-1)y, x^(d-1)z, ..., z^d (exponents in descending
    lexicographic order).
    """
    if not 1 <= d <= 3:
        raise UnsupportedDegree(f"degree must be 1, 2 or 3, got {d}")
    size = (d + 1) * (d + 2) // 2 - 1
    if cfg.s < size:
        raise DegenerateInput(f"need at least {size} points for degree {d}")
    exponents = _monomial_exponents(d)
    rows = [_curve_row(pt, exponents) for pt in cfg.points]
    return [
        (tuple(cfg.points[i] for i in combo), vec)
        for combo, vec in _scan_all(cfg, rows, size, jobs)
    ]


def exists_conic_through_all_bruteforce(cfg: PointConfig) -> Conic | None:
    """Independent re-check that some conic contains every point.

    Uses its own Gauss-Jordan elimination with the opposite scanning order
    (columns right to left, pivot in the last usable row) so that it shares
    no code path with the primal rank computation.
    """
    rows = [list(conic_row(pt)) for pt in cfg.points]
    ncols = 6
    p = cfg.field.p if isinstance(cfg.field, PrimeField) else None
    if p is None:
        m = [[Fraction(v) for v in row] for row in rows]
    else:
        m = [[v % p for v in row] for row in rows]
    used = [False] * len(m)
    pivots: list[tuple[int, int]] = []  # (column, row)
    for c in range(ncols - 1, -1, -1):
        pr = next(
            (i for i in range(len(m) - 1, -1, -1) if not used[i] and m[i][c] != 0), None
        )
        if pr is None:
            continue
        if p is None:
            piv = m[pr][c]
            m[pr] = [v / piv for v in m[pr]]
        else:
            inv = pow(m[pr][c], -1, p)
            m[pr] = [v * inv % p for v in m[pr]]
        for i in range(len(m)):
            if i != pr and m[i][c] != 0:
                f = m[i][c]
                if p is None:
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
                else:
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[pr])]
        used[pr] = True
        pivots.append((c, pr))
        if len(pivots) == ncols:
            return None
    pivot_cols = {c for c, _ in pivots}
    free = next(c for c in range(ncols - 1, -1, -1) if c not in pivot_cols)
    v = [Fraction(0)] * ncols if p is None else [0] * ncols
    v[free] = Fraction(1) if p is None else 1
    for c, pr in pivots:
        v[c] = -m[pr][free] if p is None else -m[pr][free] % p
    return Conic.make(v, field=cfg.field)
