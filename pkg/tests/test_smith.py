import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariants

from mixsurf.smith import invariant_factors, smith_diagonal


def oracle(rows, ncols):
    facts = [int(d) for d in sympy_invariants(Matrix(rows), domain=ZZ)]
    return [abs(d) for d in facts if d != 0]


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[4, 0], [0, 6]], [2, 12]),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
        ([[0, 0], [0, 0]], []),
        ([[5]], [5]),
    ],
)
def test_known_diagonals(rows, expected):
    assert smith_diagonal(rows) == expected


def test_cokernel_factors():
    assert invariant_factors([[2, 0], [0, 2]], 2) == [2, 2]
    assert invariant_factors([[1, 0], [0, 1]], 2) == []
    assert invariant_factors([], 0) == []


def test_infinite_cokernel_rejected():
    with pytest.raises(ValueError):
        invariant_factors([[2, 0]], 2)


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=1, max_size=4)
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_matches_sympy(rows):
    diag = smith_diagonal(rows)
    assert diag == oracle(rows, len(rows[0]))
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
