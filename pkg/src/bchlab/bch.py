"""Construction of the BCH codes of length n = q+1 over GF(q).

A code is generated by g = lcm of the minimal polynomials of beta^h, ...,
beta^(h+delta-2), beta a primitive (q+1)-th root of unity in GF(q^2).  A
codeword c(x) lies in the code exactly when it vanishes at those beta powers,
so the rows [(beta^(h+r))^i]_{i=0..q} over GF(q^2) act as a parity check; the
same rows rewritten in the basis {1, alpha} give a 2(delta-1)-row parity
matrix over GF(q) whose right kernel is the code.

The dual code admits a second, independent description: the words
(Tr(a*beta^(h*i) + b*beta^((h+1)*i)))_i for (a, b) in GF(q^2)^2 (delta = 3).
Both views are exposed so they can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gflin
from .field import FieldContext
from .polynomial import TAG_Q, Poly, minimal_polynomial, poly_lcm


@dataclass(frozen=True, eq=False)
class BchCode:
    """Code of length q+1 over GF(q) with designed distance delta, offset h."""

    ctx: FieldContext
    n: int
    delta: int
    h: int
    g: Poly
    k: int

    @property
    def q(self) -> int:
        return self.ctx.q

    def __repr__(self) -> str:
        return (
            f"BchCode(q={self.q}, n={self.n}, delta={self.delta}, "
            f"h={self.h}, k={self.k})"
        )


def build_bch(ctx: FieldContext, delta: int = 3, h: int = 0) -> BchCode:
    """Construct the code from its generator polynomial.

    Requires 0 <= h <= q and 2 <= delta <= n.
    """
    n = ctx.q + 1
    if not 0 <= h <= ctx.q:
        raise ValueError(f"h={h} out of range [0, {ctx.q}]")
    if not 2 <= delta <= n:
        raise ValueError(f"delta={delta} out of range [2, {n}]")
    g = Poly.one(ctx, TAG_Q)
    for r in range(delta - 1):
        g = poly_lcm(g, minimal_polynomial(ctx, (h + r) % n, n))
    rem = Poly.x_pow_minus_one(ctx, TAG_Q, n) % g
    if not rem.is_zero():
        raise AssertionError("generator does not divide x^n - 1")  # unreachable
    return BchCode(ctx=ctx, n=n, delta=delta, h=h, g=g, k=n - g.degree)


def parity_rows(code: BchCode) -> np.ndarray:
    """(delta-1, n) matrix over GF(q^2): row r is [(beta^(h+r))^i]_i."""
    ctx = code.ctx
    step = ctx.q - 1  # log of beta
    rows = np.zeros((code.delta - 1, code.n), dtype=np.int64)
    for r in range(code.delta - 1):
        e = (code.h + r) * step
        for i in range(code.n):
            rows[r, i] = ctx.exp_at(e * i)
    return rows


def generator_matrix(code: BchCode) -> np.ndarray:
    """(k, n) compact-label matrix whose rows are x^i * g(x), i = 0..k-1."""
    ctx = code.ctx
    mat = np.zeros((code.k, code.n), dtype=np.int64)
    gc = ctx.to_compact(np.array(code.g.coeffs, dtype=np.int64))
    for i in range(code.k):
        mat[i, i : i + len(gc)] = gc
    return mat


def split_on_basis(ctx: FieldContext, e: int) -> tuple[int, int]:
    """Coordinates (c0, c1) of e in the GF(q)-basis {1, alpha} of GF(q^2)."""
    denom = ctx.sub(ctx.alpha, ctx.frobenius(ctx.alpha))
    c1 = ctx.div(ctx.sub(e, ctx.frobenius(e)), denom)
    c0 = ctx.sub(e, ctx.mul(c1, ctx.alpha))
    return c0, c1


def expanded_parity_matrix(code: BchCode) -> np.ndarray:
    """(2(delta-1), n) compact-label parity matrix over GF(q).

    Row 2r holds the {1}-coordinates and row 2r+1 the {alpha}-coordinates of
    parity row r.  Its right kernel over GF(q) is the code; the rank equals
    n - k (it drops below 2(delta-1) for the degenerate offsets).
    """
    ctx = code.ctx
    rows = parity_rows(code)
    out = np.zeros((2 * rows.shape[0], code.n), dtype=np.int64)
    for r in range(rows.shape[0]):
        for i in range(code.n):
            c0, c1 = split_on_basis(ctx, int(rows[r, i]))
            out[2 * r, i] = ctx.sub_index[c0]
            out[2 * r + 1, i] = ctx.sub_index[c1]
    return out


def dual_basis(code: BchCode) -> np.ndarray:
    """(n-k, n) compact-label basis of the dual code.

    Computed as the kernel of the generator matrix by elimination, which keeps
    it independent of the trace representation below.
    """
    return gflin.kernel_basis(code.ctx, generator_matrix(code))


@dataclass(frozen=True)
class DualCodeword:
    """Trace word (Tr(a*beta^(h*i) + b*beta^((h+1)i)))_i as compact labels."""

    a: int
    b: int
    word: tuple[int, ...]

    def weight(self) -> int:
        return sum(1 for c in self.word if c)


def dual_codeword(code: BchCode, a: int, b: int) -> DualCodeword:
    """The dual codeword attached to (a, b) in GF(q^2)^2 (delta = 3 only)."""
    if code.delta != 3:
        raise ValueError("trace representation applies to delta = 3")
    ctx = code.ctx
    step = ctx.q - 1
    word = []
    for i in range(code.n):
        u_h = ctx.exp_at(code.h * step * i)
        u_h1 = ctx.exp_at((code.h + 1) * step * i)
        t = ctx.trace(ctx.add(ctx.mul(a, u_h), ctx.mul(b, u_h1)))
        word.append(int(ctx.sub_index[t]))
    return DualCodeword(a=a, b=b, word=tuple(word))


__all__ = [
    "BchCode",
    "DualCodeword",
    "build_bch",
    "parity_rows",
    "generator_matrix",
    "expanded_parity_matrix",
    "dual_basis",
    "dual_codeword",
    "split_on_basis",
]
