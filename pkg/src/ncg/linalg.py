"""Exact Gaussian elimination over any of the scalar fields."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


def _inv(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / c
    return c.inverse()


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form and pivot columns.  Inputs are not modified."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][col])
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def determinant(rows):
    n = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = _inv(m[col][col])
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[col])]
    return det


def nullspace(rows, ncols: Optional[int] = None) -> List[List]:
    """Basis of {x : rows . x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -m[r][f]
        basis.append(vec)
    return basis


def left_nullspace(rows) -> List[List]:
    if not rows:
        return []
    cols = list(map(list, zip(*rows)))
    return nullspace(cols, len(rows))


def solve_affine(rows, rhs) -> Tuple[Optional[List], List[int]]:
    """Solve rows . x = rhs; returns (one solution or None, pivot columns).

    Free variables are set to zero.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None, pivots
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = m[r][ncols]
    return x, pivots
