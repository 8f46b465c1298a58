"""Small dense linear algebra over Q with ``fractions.Fraction``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _copy(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of the square system A x = b, or None if A is singular."""
    n = len(A)
    M = _copy(A)
    for i, row in enumerate(M):
        if len(row) != n:
            raise ValueError("solve() needs a square matrix")
        row.append(Fraction(b[i]))
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col]
        inv = 1 / p[col]
        for i in range(col + 1, n):
            row = M[i]
            if row[col]:
                f = row[col] * inv
                for j in range(col, n + 1):
                    row[j] -= f * p[j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = M[i][n] - sum(M[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / M[i][i]
    return x


def det(A: Sequence[Sequence]) -> Fraction:
    M = _copy(A)
    n = len(M)
    out = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            out = -out
        p = M[col]
        out *= p[col]
        for i in range(col + 1, n):
            row = M[i]
            if row[col]:
                f = row[col] / p[col]
                for j in range(col, n):
                    row[j] -= f * p[j]
    return out


def rank(rows: Sequence[Sequence]) -> int:
    M = _copy(rows)
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r]
        for i in range(r + 1, len(M)):
            if M[i][col]:
                f = M[i][col] / p[col]
                for j in range(col, ncols):
                    M[i][j] -= f * p[j]
        r += 1
    return r


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
