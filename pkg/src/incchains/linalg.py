"""Exact matrix ranks over the rationals and over prime fields.

Boundary matrices of the complexes handled here are sparse with unit
entries, so rational ranks are computed by integer elimination: unit
pivots first (chosen to limit fill-in), then a fraction-free elimination
on whatever dense core remains.  Prime-field ranks use vectorized
Gauss elimination.
"""

from __future__ import annotations

import numpy as np

__all__ = ["rank_int_exact", "rank_modp", "rank_dense_exact"]


def rank_dense_exact(matrix):
    """Rank of an integer matrix over the rationals, by fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if m[r][col]:
                if pivot is None or abs(m[r][col]) < abs(m[pivot][col]):
                    pivot = r
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        p = m[row][col]
        for r in range(row + 1, nrows):
            if not m[r][col]:
                # still rescale for Bareiss consistency
                for c in range(col + 1, ncols):
                    m[r][c] = m[r][c] * p // prev
                continue
            f = m[r][col]
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * p - f * m[row][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_int_exact(rows, ncols):
    """Rank over the rationals of a sparse integer matrix.

    ``rows`` is a list of {column: value} dicts.  Unit pivots are
    eliminated first with Markowitz-style fill control; any remaining
    block goes through dense fraction-free elimination.
    """
    rows = [dict(r) for r in rows if r]
    rank = 0
    col_count = {}
    for r in rows:
        for c in r:
            col_count[c] = col_count.get(c, 0) + 1
    while rows:
        best = None
        best_score = None
        for ri, r in enumerate(rows):
            rlen = len(r)
            for c, v in r.items():
                if v == 1 or v == -1:
                    score = (rlen - 1) * (col_count[c] - 1)
                    if best_score is None or score < best_score:
                        best = (ri, c)
                        best_score = score
                        if score == 0:
                            break
            if best_score == 0:
                break
        if best is None:
            break
        ri, c = best
        pivot_row = rows.pop(ri)
        pv = pivot_row[c]
        for col in pivot_row:
            col_count[col] -= 1
        rank += 1
        for r in rows:
            f = r.get(c)
            if f is None:
                continue
            scale = f * pv  # pv is +-1, so f / pv == f * pv
            for col, v in pivot_row.items():
                old = r.get(col)
                if old is None:
                    r[col] = -scale * v
                    col_count[col] += 1
                else:
                    new = old - scale * v
                    if new:
                        r[col] = new
                    else:
                        del r[col]
                        col_count[col] -= 1
        rows = [r for r in rows if r]
    if not rows:
        return rank
    cols = sorted({c for r in rows for c in r})
    idx = {c: j for j, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            dense[i][idx[c]] = v
    return rank + rank_dense_exact(dense)


def rank_modp(matrix, p):
    """Rank of an integer matrix over the field with p elements (p prime)."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    rank = 0
    row = 0
    for col in range(ncols):
        pivots = np.nonzero(a[row:, col])[0]
        if pivots.size == 0:
            continue
        r = row + int(pivots[0])
        if r != row:
            a[[row, r]] = a[[r, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        a[row] = (a[row] * inv) % p
        mask = np.nonzero(a[:, col])[0]
        mask = mask[mask != row]
        if mask.size:
            a[mask] = (a[mask] - np.outer(a[mask, col], a[row])) % p
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
