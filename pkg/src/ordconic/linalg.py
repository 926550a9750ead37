"""Exact linear algebra on small integer matrices.

Over the rationals the forward elimination is fraction-free (Bareiss):
every intermediate entry is a minor of the input matrix, so everything
stays integral and denominators never appear until back-substitution.
Over a prime field the arithmetic is plain modular elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Field, PrimeField


def det3(rows) -> int:
    """Determinant of a 3x3 integer matrix (reduce mod p at the call site)."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def fraction_free_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Bareiss row echelon form of an integer matrix.

    Returns the echelon matrix together with the list of pivot columns.
    Entries below each pivot are zeroed; all divisions are exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivot_cols


def modular_echelon(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form over F_p with unit pivots."""
    m = [[v % p for v in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(r + 1, nrows):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivot_cols


def rank(rows, field: Field) -> int:
    if not rows:
        return 0
    if isinstance(field, PrimeField):
        return len(modular_echelon(rows, field.p)[1])
    return len(fraction_free_echelon(rows)[1])


def nullspace_basis(rows, field: Field) -> list[tuple[int, ...]]:
    """Canonical basis of the right kernel, one vector per free column.

    Each vector is normalized to the field's canonical form and the basis
    is sorted lexicographically, so the result is deterministic.
    """
    ncols = len(rows[0])
    modular = isinstance(field, PrimeField)
    if modular:
        m, pivot_cols = modular_echelon(rows, field.p)
    else:
        m, pivot_cols = fraction_free_echelon(rows)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        if modular:
            v: list = [0] * ncols
            v[fc] = 1
            for i in reversed(range(len(pivot_cols))):
                pc = pivot_cols[i]
                s = sum(m[i][j] * v[j] for j in range(pc + 1, ncols)) % field.p
                v[pc] = -s % field.p  # pivot is 1
        else:
            v = [Fraction(0)] * ncols
            v[fc] = Fraction(1)
            for i in reversed(range(len(pivot_cols))):
                pc = pivot_cols[i]
                s = sum(m[i][j] * v[j] for j in range(pc + 1, ncols))
                v[pc] = Fraction(-s, m[i][pc])
        basis.append(field.normalize_vector(v))
    basis.sort()
    return basis
