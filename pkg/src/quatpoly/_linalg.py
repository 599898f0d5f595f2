"""Exact Gaussian elimination over the rationals for tiny systems.

Everything here works on lists of :class:`~fractions.Fraction`; the
matrices involved are at most 4x4, so no pivoting strategy beyond
"first nonzero" is needed.
"""

from __future__ import annotations

from fractions import Fraction


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(_rref(rows)[1])


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve the square system rows * x = rhs; None if singular."""
    n = len(rows)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    red, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    return [red[i][n] for i in range(n)]


def kernel_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the null space of the matrix given by ``rows``."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis.append(vec)
    return basis
