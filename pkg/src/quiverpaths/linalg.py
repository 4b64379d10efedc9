"""Exact linear algebra over the rationals on nested lists of Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]

ZERO = Fraction(0)


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(size: int) -> Matrix:
    out = zeros(size, size)
    for i in range(size):
        out[i][i] = Fraction(1)
    return out


def as_matrix(rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
    out = [[Fraction(x) for x in row] for row in rows]
    if cols is not None and any(len(r) != cols for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(A: Matrix, cols: int) -> tuple[int, int]:
    return len(A), cols


def matmul(A: Matrix, B: Matrix, inner: int, cols: int) -> Matrix:
    """A is (m x inner), B is (inner x cols); explicit sizes allow empty factors."""
    sparse_rows = [[(j, b) for j, b in enumerate(B[k]) if b] for k in range(inner)]
    out = []
    for row in A:
        acc = [ZERO] * cols
        for k, a in enumerate(row):
            if a:
                for j, b in sparse_rows[k]:
                    acc[j] += a * b
        out.append(acc)
    return out


def add(A: Matrix, B: Matrix, scale: int = 1) -> Matrix:
    return [[a + scale * b if b else a for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def is_zero(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def rref(A: Matrix, cols: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; A is not modified."""
    R = [list(row) for row in A]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                factor = R[i][c]
                R[i] = [x - factor * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(A: Matrix, cols: int) -> int:
    return len(rref(A, cols)[1])


def nullspace(A: Matrix, cols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    R, pivots = rref(A, cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def stack(blocks: Sequence[Matrix]) -> Matrix:
    out: Matrix = []
    for b in blocks:
        out.extend(b)
    return out


def to_strings(A: Matrix) -> list[list[str]]:
    """Serialise entries as "p/q" strings (integers keep the "/1")."""
    return [[f"{x.numerator}/{x.denominator}" for x in row] for row in A]


def from_strings(rows: Sequence[Sequence[str]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]
