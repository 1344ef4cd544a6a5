"""Exact Fraction row reduction, kernels and solves."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def rref(mat: Sequence[Sequence[object]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in r] for r in mat]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def kernel(mat: Sequence[Sequence[object]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : mat @ x = 0}."""
    if ncols is None:
        ncols = len(mat[0])
    if not mat:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def primitive(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers (sign kept)."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints] if g else ints


def solve(mat: Sequence[Sequence[object]], rhs: Sequence[object]) -> list[Fraction]:
    """Unique solution of a square nonsingular system."""
    n = len(mat)
    aug = [list(map(Fraction, mat[i])) + [Fraction(rhs[i])] for i in range(n)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ArithmeticError("singular system")
    return [rows[i][n] for i in range(n)]


def coordinates(mat: Sequence[Sequence[object]], rhs: Sequence[object]) -> list[Fraction] | None:
    """Unique x with mat x = rhs for a full-column-rank matrix, or None if rhs is outside the span."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(mat, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    if pivots != list(range(ncols)):
        raise ArithmeticError("columns are linearly dependent")
    return [rows[i][ncols] for i in range(ncols)]
