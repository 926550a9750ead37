"""Exact elimination and kernel computations, cross-checked three ways."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ordconic import PrimeField, QQ
from ordconic.linalg import det3, fraction_free_echelon, modular_echelon, nullspace_basis

entry = st.integers(min_value=-9, max_value=9)


def matrix(rows, cols):
    return st.lists(
        st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    )


def test_det3_known():
    assert det3(((1, 0, 0), (0, 1, 0), (0, 0, 1))) == 1
    assert det3(((1, 1, 1), (1, 2, 4), (1, 3, 9))) == 2
    assert det3(((1, 2, 3), (2, 4, 6), (1, 0, 0))) == 0


@given(matrix(3, 3))
def test_det3_matches_echelon_rank(m):
    _, pivots = fraction_free_echelon(m)
    assert (det3(tuple(map(tuple, m))) != 0) == (len(pivots) == 3)


@settings(max_examples=80)
@given(matrix(4, 6))
def test_rational_nullspace_vectors_annihilate(m):
    basis = nullspace_basis(m, QQ)
    assert len(basis) >= 2  # 4 rows, 6 cols
    for v in basis:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@settings(max_examples=60)
@given(matrix(4, 6))
def test_modular_nullspace_vectors_annihilate(m):
    f7 = PrimeField(7)
    basis = nullspace_basis(m, f7)
    for v in basis:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) % 7 == 0


@settings(max_examples=60)
@given(matrix(5, 6))
def test_rank_plus_nullity(m):
    _, pivots = fraction_free_echelon(m)
    basis = nullspace_basis(m, QQ)
    assert len(pivots) + len(basis) == 6


def test_echelon_pivots_are_leading():
    m = [[0, 0, 2, 4], [0, 0, 1, 3], [1, 0, 0, 0]]
    ech, pivots = fraction_free_echelon(m)
    assert pivots == [0, 2, 3]


def test_modular_echelon_unit_pivots():
    ech, pivots = modular_echelon([[2, 4, 1], [1, 3, 2]], 5)
    for r, c in enumerate(pivots):
        assert ech[r][c] == 1


def test_fraction_input_normalization():
    v = QQ.normalize_vector([Fraction(1, 2), Fraction(-3, 4), Fraction(0)])
    assert v == (2, -3, 0)
