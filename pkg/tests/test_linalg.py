from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from quiverpaths import linalg


@st.composite
def int_matrices(draw, max_dim=6):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = st.integers(-3, 3)
    return [[draw(entries) for _ in range(cols)] for _ in range(rows)], cols


@given(int_matrices())
def test_rank_matches_numpy(mc):
    A, cols = mc
    expected = np.linalg.matrix_rank(np.array(A, dtype=float)) if A else 0
    assert linalg.rank(linalg.as_matrix(A), cols) == expected


@given(int_matrices())
def test_nullspace_is_kernel_basis(mc):
    A, cols = mc
    M = linalg.as_matrix(A)
    basis = linalg.nullspace(M, cols)
    assert len(basis) == cols - linalg.rank(M, cols)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in M)
    if basis:
        assert linalg.rank(basis, cols) == len(basis)


@given(int_matrices(), st.integers(1, 5), st.randoms())
def test_matmul_matches_numpy(mc, k, rnd):
    A, inner = mc
    B = [[rnd.randint(-3, 3) for _ in range(k)] for _ in range(inner)]
    got = linalg.matmul(linalg.as_matrix(A), linalg.as_matrix(B), inner, k)
    expected = (np.array(A, dtype=int).reshape(len(A), inner) @ np.array(B, dtype=int)).tolist()
    assert got == [[Fraction(x) for x in row] for row in expected]


def test_helpers():
    I = linalg.identity(3)
    assert linalg.rank(I, 3) == 3
    assert linalg.is_zero(linalg.add(I, I, -1))
    assert linalg.stack([I[:1], I[1:]]) == I
    assert linalg.from_strings(linalg.to_strings([[Fraction(1, 3), Fraction(2)]])) == [[Fraction(1, 3), 2]]
    assert linalg.to_strings([[Fraction(2)]]) == [["2/1"]]
    assert linalg.nullspace([], 2) == [[1, 0], [0, 1]]
