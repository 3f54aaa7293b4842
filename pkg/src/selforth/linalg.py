"""Gaussian elimination over a tower's top field (or any subfield of it).

Matrices are lists of rows of integer element codes.  Elimination only ever
multiplies by inverses of entries already present, so a matrix with entries
in GF(q) stays in GF(q).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .ff_core import FieldTower


def rref(rows: Sequence[Sequence[int]], t: FieldTower) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form without zero rows, plus pivot columns."""
    if t.has_tables and len(rows) and len(rows[0]):
        return _rref_np(np.array(rows, dtype=np.int64), t)
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        lead_inv = t.inv(work[top][col])
        work[top] = [t.mul(lead_inv, x) for x in work[top]]
        prow = work[top]
        for i in range(len(work)):
            c = work[i][col]
            if i != top and c:
                row = work[i]
                work[i] = [t.sub(x, t.mul(c, y)) if y else x for x, y in zip(row, prow)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def _rref_np(a: np.ndarray, t: FieldTower) -> tuple[list[list[int]], list[int]]:
    a = a.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        nz = np.flatnonzero(a[top:, col])
        if nz.size == 0:
            continue
        piv = top + int(nz[0])
        if piv != top:
            a[[top, piv]] = a[[piv, top]]
        a[top] = t.vmul(a[top], np.full(ncols, t.inv(int(a[top, col])), dtype=np.int64))
        factors = a[:, col].copy()
        factors[top] = 0
        if factors.any():
            a = t.vadd(a, t.vneg(t.vmul(factors[:, None], a[top][None, :])))
        pivots.append(col)
        top += 1
        if top == nrows:
            break
    return a[:top].tolist(), pivots


def rank(rows: Sequence[Sequence[int]], t: FieldTower) -> int:
    return len(rref(rows, t)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence[int]], ncols: int, t: FieldTower) -> list[list[int]]:
    """Basis of {x : sum_j rows[i][j] x_j = 0 for all i}."""
    red, pivots = rref(rows, t) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = t.neg(row[f])
        basis.append(v)
    return basis


def inverse(mat: Sequence[Sequence[int]], t: FieldTower) -> list[list[int]]:
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(aug, t)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], t: FieldTower) -> list[list[int]]:
    cols = list(zip(*b))
    return [[t.sum(t.mul(x, y) for x, y in zip(row, col)) for col in cols] for row in a]
