"""Exact arithmetic in GF(p^(2s)) via discrete-log tables.

Elements are integers in [0, q^2) whose base-p digits are the coefficients
(lowest degree first) of the residue polynomial modulo a fixed irreducible of
degree 2s over GF(p).  Index 0 is the zero element and is excluded from the
log domain; every operation branches on zero explicitly.

Construction is deterministic: the modulus is the lexicographically smallest
monic irreducible (coefficient tuples compared low degree first) and the
generator ``alpha`` is the first element, in enumeration order, of
multiplicative order q^2 - 1.  ``beta = alpha^(q-1)`` generates the group
U_{q+1} of (q+1)-th roots of unity, and the embedded GF(q) is the fixed field
of the Frobenius map x -> x^q.

For bulk kernels the context also exposes a compact relabelling of the
subfield onto [0, q) (sorted by element index) together with q x q add/mul
tables as numpy arrays.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .polynomial import is_irreducible

MAX_TABLE_Q = 1 << 12  # default cap: exp/log tables of ~2^24 entries


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldContext:
    """Immutable description of GF(p^(2s)) with its embedded GF(q).

    Built through :func:`build_field`; safe to share across workers.
    """

    def __init__(self, p: int, s: int, max_q: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if s < 1:
            raise ValueError(f"s={s} must be >= 1")
        q = p**s
        if q > max_q:
            raise ValueError(
                f"q={q} exceeds the table cap {max_q}; raise the cap explicitly"
            )
        self.p = p
        self.s = s
        self.q = q
        self.q2 = q * q
        self.order = self.q2 - 1
        self.modulus = self._find_modulus()
        self._pp = [p**i for i in range(2 * s + 1)]
        self.alpha = self._find_generator()
        self.exp, self.log = self._build_tables()
        self.beta = int(self.exp[(q - 1) % self.order])
        # lazy caches for vector kernels
        self._digits = None
        self._sub_sorted = None
        self._sub_index = None
        self._add_table = None
        self._mul_table = None
        self._neg_table = None
        self._inv_table = None

    # -- construction ------------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        deg = 2 * self.s
        for low in itertools.product(range(self.p), repeat=deg):
            f = list(low) + [1]
            if is_irreducible(f, self.p):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free product of two element indices."""
        p = self.p
        da = self._to_digits(a)
        db = self._to_digits(b)
        out = [0] * (len(da) + len(db) - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    out[i + j] = (out[i + j] + ai * bj) % p
        # reduce modulo the field modulus (monic, degree 2s)
        deg = 2 * self.s
        for top in range(len(out) - 1, deg - 1, -1):
            c = out[top]
            if c:
                shift = top - deg
                for j in range(deg):
                    out[shift + j] = (out[shift + j] - c * self.modulus[j]) % p
            out[top] = 0
        return sum(out[i] * self._pp[i] for i in range(deg))

    def _pow_raw(self, a: int, e: int) -> int:
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return acc

    def _find_generator(self) -> int:
        fac = prime_factors(self.order)
        checks = [self.order // r for r in fac]
        for g in range(2, self.q2):
            if all(self._pow_raw(g, e) != 1 for e in checks):
                return g
        raise AssertionError("no generator found")  # unreachable

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        exp = np.zeros(self.order, dtype=np.int64)
        log = np.full(self.q2, -1, dtype=np.int64)
        cur = 1
        for i in range(self.order):
            exp[i] = cur
            if log[cur] != -1:
                raise AssertionError("generator order too small")  # unreachable
            log[cur] = i
            cur = self._mul_raw(cur, self.alpha)
        if cur != 1:
            raise AssertionError("exp table does not close")  # unreachable
        return exp, log

    def _to_digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(2 * self.s):
            out.append(a % p)
            a //= p
        return out

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        acc = 0
        pp = 1
        while a or b:
            acc += ((a + b) % p) * pp
            a //= p
            b //= p
            pp *= p
        return acc

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        acc = 0
        pp = 1
        while a:
            d = a % p
            if d:
                acc += (p - d) * pp
            a //= p
            pp *= p
        return acc

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % self.order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.exp[(-int(self.log[a])) % self.order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return int(self.exp[(int(self.log[a]) * e) % self.order])

    def exp_at(self, e: int) -> int:
        """alpha^e for any integer e."""
        return int(self.exp[e % self.order])

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero is outside the log domain")
        return int(self.log[a])

    def frobenius(self, a: int) -> int:
        """x -> x^q; an involution whose fixed field is the embedded GF(q)."""
        return self.pow(a, self.q)

    def trace(self, a: int) -> int:
        """Relative trace x + x^q, mapping GF(q^2) onto GF(q)."""
        return self.add(a, self.frobenius(a))

    def in_subfield(self, a: int) -> bool:
        return self.frobenius(a) == a

    def unit_circle(self) -> list[int]:
        """[beta^0, ..., beta^q]: the q+1 roots of x^(q+1) - 1, by exponent."""
        step = self.q - 1
        return [self.exp_at(step * j) for j in range(self.q + 1)]

    def element_coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(self._to_digits(a))

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, s={self.s}, q={self.q})"

    # -- compact subfield view and numpy tables ------------------------------

    @property
    def digits(self) -> np.ndarray:
        """(q^2, 2s) matrix of base-p digits of every element index."""
        if self._digits is None:
            idx = np.arange(self.q2, dtype=np.int64)
            cols = []
            for _ in range(2 * self.s):
                cols.append((idx % self.p).astype(np.int16))
                idx //= self.p
            self._digits = np.stack(cols, axis=1)
        return self._digits

    def digits_to_index(self, d: np.ndarray) -> np.ndarray:
        weights = np.array(self._pp[: d.shape[-1]], dtype=np.int64)
        return (d.astype(np.int64) * weights).sum(axis=-1)

    @property
    def sub_sorted(self) -> np.ndarray:
        """Element indices of GF(q), ascending; position = compact label."""
        if self._sub_sorted is None:
            elems = [0] + [self.exp_at((self.q + 1) * t) for t in range(self.q - 1)]
            self._sub_sorted = np.array(sorted(elems), dtype=np.int64)
            if len(self._sub_sorted) != self.q:
                raise AssertionError("subfield size mismatch")  # unreachable
        return self._sub_sorted

    @property
    def sub_index(self) -> np.ndarray:
        """Inverse of sub_sorted: element index -> compact label, -1 outside."""
        if self._sub_index is None:
            inv = np.full(self.q2, -1, dtype=np.int64)
            inv[self.sub_sorted] = np.arange(self.q, dtype=np.int64)
            self._sub_index = inv
        return self._sub_index

    def to_compact(self, arr: np.ndarray) -> np.ndarray:
        out = self.sub_index[np.asarray(arr, dtype=np.int64)]
        if (out < 0).any():
            raise ValueError("element outside the embedded GF(q)")
        return out

    def from_compact(self, arr: np.ndarray) -> np.ndarray:
        return self.sub_sorted[np.asarray(arr, dtype=np.int64)]

    @property
    def add_table(self) -> np.ndarray:
        """(q, q) addition table over compact subfield labels."""
        if self._add_table is None:
            d = self.digits[self.sub_sorted]
            total = (d[:, None, :] + d[None, :, :]) % self.p
            self._add_table = self.sub_index[self.digits_to_index(total)].astype(np.int16)
        return self._add_table

    @property
    def mul_table(self) -> np.ndarray:
        """(q, q) multiplication table over compact subfield labels."""
        if self._mul_table is None:
            logs = np.zeros(self.q, dtype=np.int64)
            nz = self.sub_sorted[1:]
            logs[1:] = self.log[nz]
            esum = (logs[:, None] + logs[None, :]) % self.order
            prod = self.sub_index[self.exp[esum]]
            prod[0, :] = 0
            prod[:, 0] = 0
            self._mul_table = prod.astype(np.int16)
        return self._mul_table

    @property
    def neg_table(self) -> np.ndarray:
        if self._neg_table is None:
            d = (-self.digits[self.sub_sorted]) % self.p
            self._neg_table = self.sub_index[self.digits_to_index(d)].astype(np.int16)
        return self._neg_table

    @property
    def inv_table(self) -> np.ndarray:
        """Compact inverses; entry 0 is a sentinel and must not be used."""
        if self._inv_table is None:
            t = np.zeros(self.q, dtype=np.int16)
            nz = self.sub_sorted[1:]
            t[1:] = self.sub_index[self.exp[(-self.log[nz]) % self.order]]
            self._inv_table = t
        return self._inv_table


@lru_cache(maxsize=32)
def build_field(p: int, s: int, max_q: int = MAX_TABLE_Q) -> FieldContext:
    """Deterministic GF(p^(2s)) context; cached per (p, s, max_q)."""
    return FieldContext(p, s, max_q)


__all__ = ["FieldContext", "build_field", "is_prime", "prime_factors", "MAX_TABLE_Q"]
