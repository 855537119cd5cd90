"""Small dense linear algebra over the embedded GF(q).

Matrices are numpy arrays of compact subfield labels (0..q-1, as produced by
``FieldContext.to_compact``); arithmetic goes through the context's q x q
add/mul tables.  Sizes here are tiny (at most a few hundred columns), so the
row operations are plain loops with table gathers.
"""

from __future__ import annotations

import numpy as np


def rref(ctx, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot column list."""
    add, mul = ctx.add_table, ctx.mul_table
    inv, neg = ctx.inv_table, ctx.neg_table
    r_mat = np.array(mat, dtype=np.int64, copy=True)
    rows, cols = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if r_mat[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            r_mat[[r, pr]] = r_mat[[pr, r]]
        scale = inv[r_mat[r, c]]
        r_mat[r] = mul[scale, r_mat[r]]
        for i in range(rows):
            if i != r and r_mat[i, c] != 0:
                f = neg[r_mat[i, c]]
                r_mat[i] = add[r_mat[i], mul[f, r_mat[r]]]
        pivots.append(c)
        r += 1
    return r_mat, pivots


def rank(ctx, mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return len(rref(ctx, mat)[1])


def kernel_basis(ctx, mat: np.ndarray) -> np.ndarray:
    """Basis of the right kernel {v : mat @ v = 0}, one row per basis vector.

    Rows are ordered by ascending free column, so the result is deterministic.
    A matrix with no rows yields the identity basis of the full space.
    """
    neg = ctx.neg_table
    if mat.shape[0] == 0:
        return np.eye(mat.shape[1], dtype=np.int64)
    r_mat, pivots = rref(ctx, mat)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b_idx, fc in enumerate(free):
        basis[b_idx, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[b_idx, pc] = neg[r_mat[row_idx, fc]]
    return basis


def matmul(ctx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of compact-label matrices; used for verification, not speed."""
    add, mul = ctx.add_table, ctx.mul_table
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        col = a[:, k]
        nz = np.nonzero(col)[0]
        for i in nz:
            out[i] = add[out[i], mul[col[i], b[k]]]
    return out


def combine_rows(ctx, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Linear combination sum_i coeffs[i] * rows[i]."""
    add, mul = ctx.add_table, ctx.mul_table
    out = np.zeros(rows.shape[1], dtype=np.int64)
    for c, row in zip(coeffs, rows):
        if c:
            out = add[out, mul[c, row]]
    return out


__all__ = ["rref", "rank", "kernel_basis", "matmul", "combine_rows"]
