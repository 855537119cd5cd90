"""Dense univariate polynomial arithmetic over the tower GF(q) inside GF(q^2).

Two layers live here:

* Plain helpers (`is_irreducible`, module-private `_p*` functions) work on
  coefficient lists of ints modulo a prime ``p``.  They have no field-context
  dependency and are used to pick the modulus when a field is built.

* :class:`Poly` wraps a coefficient tuple of field-element indices together
  with a :class:`~bchlab.field.FieldContext` and a subfield tag (``"q"`` or
  ``"q2"``).  Coefficients are stored lowest degree first with no trailing
  zeros; the zero polynomial has an empty tuple.  Operators +, -, *, divmod,
  //, % are overloaded; `gcd`/`lcm` return monic results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import cosets

# ---------------------------------------------------------------------------
# Prime-field helpers: coefficient lists of ints mod p, lowest degree first.
# ---------------------------------------------------------------------------


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - df
            for i in range(df + 1):
                r[shift + i] = (r[shift + i] - lead * f[i]) % p
        r.pop()
    return _ptrim(r)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, _monic_p(b, p), p)
        b = _ptrim(b)
    return _monic_p(a, p)


def _monic_p(a: Sequence[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _ppow_xq(f: Sequence[int], p: int) -> list[int]:
    """x^p mod f, with f monic."""
    return _pmod([0] * p + [1], f, p)


def _pcompose_mod(g: Sequence[int], h: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """g(h(x)) mod f by Horner, all mod p."""
    out: list[int] = []
    for c in reversed(list(g)):
        out = _pmul(out, h, p)
        if c:
            if not out:
                out = [c]
            else:
                out[0] = (out[0] + c) % p
        out = _pmod(out, f, p)
    return out


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p).

    ``coeffs`` is lowest degree first; the polynomial must be monic of
    degree >= 1.  Uses the gcd ladder against x^(p^i) - x.
    """
    f = [c % p for c in coeffs]
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("monic polynomial of degree >= 1 required")
    if n == 1:
        return True
    # x^(p^i) mod f via iterated composition with x^p mod f
    xp = _ppow_xq(f, p)
    distinct_prime_divs = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            distinct_prime_divs.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        distinct_prime_divs.append(m)

    power = [0, 1]  # x
    for i in range(1, n + 1):
        power = _pcompose_mod(power, xp, f, p)
        if i == n:
            # x^(p^n) == x (mod f) required
            diff = list(power)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            if _ptrim(diff):
                return False
        elif n % i == 0 and (n // i) in distinct_prime_divs:
            diff = list(power)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            g = _pgcd(f, _ptrim(diff), p)
            if len(g) - 1 != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Polynomials over the embedded GF(q) / full GF(q^2)
# ---------------------------------------------------------------------------

TAG_Q = "q"
TAG_Q2 = "q2"


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients given as field-element indices.

    ``tag`` declares where the coefficients must live: ``"q"`` for the
    embedded subfield, ``"q2"`` for the full field.  Mixing tags in
    arithmetic raises ValueError.
    """

    ctx: object
    tag: str
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ctx, tag: str, coeffs: Iterable[int]) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        if tag not in (TAG_Q, TAG_Q2):
            raise ValueError(f"unknown field tag {tag!r}")
        if tag == TAG_Q:
            for c in cs:
                if not ctx.in_subfield(c):
                    raise ValueError(
                        f"coefficient {c} lies outside the embedded GF({ctx.q})"
                    )
        return Poly(ctx, tag, tuple(cs))

    @staticmethod
    def zero(ctx, tag: str) -> "Poly":
        return Poly(ctx, tag, ())

    @staticmethod
    def one(ctx, tag: str) -> "Poly":
        return Poly(ctx, tag, (1,))

    @staticmethod
    def x_pow_minus_one(ctx, tag: str, n: int) -> "Poly":
        """x^n - 1."""
        cs = [ctx.neg(1)] + [0] * (n - 1) + [1]
        return Poly.make(ctx, tag, cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "Poly") -> None:
        if self.ctx is not other.ctx:
            raise ValueError("polynomials from different field contexts")
        if self.tag != other.tag:
            raise ValueError(f"field tag mismatch: {self.tag} vs {other.tag}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly.make(ctx, self.tag, out)

    def __neg__(self) -> "Poly":
        ctx = self.ctx
        return Poly(ctx, self.tag, tuple(ctx.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx, self.tag)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return Poly.make(ctx, self.tag, out)

    def scale(self, c: int) -> "Poly":
        ctx = self.ctx
        return Poly.make(ctx, self.tag, [ctx.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        ctx = self.ctx
        inv_lead = ctx.inv(other.leading)
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return Poly.zero(ctx, self.tag), self
        quot = [0] * (self.degree - db + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = ctx.mul(rem[i + db], inv_lead)
            quot[i] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        rem[i + j] = ctx.sub(rem[i + j], ctx.mul(c, bj))
        return Poly.make(ctx, self.tag, quot), Poly.make(ctx, self.tag, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.leading == 1:
            return self
        return self.scale(self.ctx.inv(self.leading))

    def evaluate(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def as_subfield(self) -> "Poly":
        """Re-tag a q2 polynomial whose coefficients all lie in GF(q)."""
        return Poly.make(self.ctx, TAG_Q, self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(reversed(parts))


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple; lcm(0, f) = 0."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.ctx, a.tag)
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


def minimal_polynomial(ctx, e: int, n: int) -> Poly:
    """Minimal polynomial over GF(q) of omega^e, omega a primitive n-th root.

    The product over the q-cyclotomic coset of ``e`` mod ``n`` is expanded in
    GF(q^2)[x]; every coefficient is then checked to lie in the subfield and
    the result re-tagged.  ``n`` must divide q^2 - 1 (for the code family at
    hand, n = q + 1 and omega is beta).
    """
    if n <= 0 or (ctx.q2 - 1) % n != 0:
        raise ValueError(f"n={n} must divide q^2-1={ctx.q2 - 1}")
    omega = ctx.exp_at((ctx.q2 - 1) // n)
    coset = cosets.coset_of(e % n, n, ctx.q)
    acc = Poly.one(ctx, TAG_Q2)
    for i in coset.members:
        root = ctx.pow(omega, i)
        acc = acc * Poly.make(ctx, TAG_Q2, [ctx.neg(root), 1])
    for c in acc.coeffs:
        if not ctx.in_subfield(c):
            raise ValueError(
                "coset product has a coefficient outside GF(q); "
                "field construction is inconsistent"
            )
    return acc.as_subfield()


def all_minimal_polynomials(ctx, n: int) -> list[Poly]:
    """One minimal polynomial per coset leader, ascending by leader."""
    return [minimal_polynomial(ctx, c.leader, n) for c in cosets.all_cosets(n, ctx.q)]


__all__ = [
    "Poly",
    "TAG_Q",
    "TAG_Q2",
    "is_irreducible",
    "poly_mul",
    "poly_divmod",
    "poly_gcd",
    "poly_lcm",
    "minimal_polynomial",
    "all_minimal_polynomials",
]
