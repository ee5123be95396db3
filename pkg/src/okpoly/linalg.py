"""Small dense exact linear algebra over Fraction.

Everything here is plumbing for Gram-matrix work: solving orthogonality
systems, definiteness tests via pivots, and exact signatures through the
characteristic polynomial with Descartes sign counting (valid because the
matrices are symmetric, hence real-rooted).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def _rows(a: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for j in range(m):
            out[i][j] = sum((ai[t] * b[t][j] for t in range(k)), Fraction(0))
    return out


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def charpoly(a: Matrix) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(t*I - A), Faddeev-LeVerrier."""
    n = len(a)
    a = _rows(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        c = -trace(m) / k
        coeffs.append(c)
        for i in range(n):
            m[i][i] += c
    return coeffs


def _sign_variations(cs: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in cs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def signature(a: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    Descartes' rule is exact on the characteristic polynomial since all of
    its roots are real.
    """
    cs = charpoly(a)
    n = len(a)
    zero = 0
    while zero < n and cs[n - zero] == 0:
        zero += 1
    pos = _sign_variations(cs)
    neg_cs = [c if (n - i) % 2 == 0 else -c for i, c in enumerate(cs)]
    neg = _sign_variations(neg_cs)
    return pos, neg, zero


def solve_linear(a: Matrix, b: Sequence[Fraction]) -> list[Fraction] | None:
    """Exact solution of A x = b, or None when A is singular."""
    n = len(a)
    if n == 0:
        return []
    m = _rows(a)
    rhs = [Fraction(x) for x in b]
    perm = list(range(n))
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
            rhs[r] -= f * rhs[col]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = rhs[i] - sum((m[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / m[i][i]
    del perm
    return x


def determinant(a: Matrix) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = _rows(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def symmetric_pivots(a: Matrix) -> list[Fraction] | None:
    """Pivots of the LDL^T elimination without row exchanges.

    Returns None if a zero pivot is hit before completion (then the matrix
    is not definite of either sign).  Pivot i equals the ratio of leading
    principal minors Delta_i / Delta_{i-1}.
    """
    n = len(a)
    m = _rows(a)
    pivots: list[Fraction] = []
    for col in range(n):
        p = m[col][col]
        if p == 0:
            return None
        pivots.append(p)
        inv = 1 / p
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return pivots


def leading_principal_minors(a: Matrix) -> list[Fraction]:
    """Determinants of the upper-left i x i blocks, i = 1..n."""
    return [determinant([row[: i + 1] for row in a[: i + 1]]) for i in range(len(a))]


def is_negative_definite_matrix(a: Matrix) -> bool:
    """Sylvester test: (-1)^i * (i-th leading minor) > 0 for every i.

    Implemented through elimination pivots (pivot_i = Delta_i/Delta_{i-1});
    the alternation holds exactly when every pivot is negative.  An empty
    matrix counts as negative definite.
    """
    pivots = symmetric_pivots(a)
    if pivots is None:
        return False
    return all(p < 0 for p in pivots)
