"""Closed-form predictions for the length-(q+1), designed-distance-3 codes.

Everything here is arithmetic in (q, h) or small field identities; the
distance engines in :mod:`bchlab.distance` supply the ground truth these
predictions are checked against.

Key facts implemented:

* dimension case table (and its dual complement) from the cyclotomic-coset
  structure of Z_{q+1};
* minimum distance is 3 exactly when gcd(2h+1, q+1) > 1; otherwise it is
  4 or 5, and for q odd always 4;
* for gcd(2h+1, q+1) = 1 the distance is 4 exactly when four pairwise
  distinct x, y, z, w in U_{q+1} satisfy
  E(x,z)/E(x,w) = E(y,z)/E(y,w) with E the divided difference of t^(2h+1)
  (searched by hashing ratios per (z, w) pair);
* the dual distance lies in [q-2h-1, q+1-m] for non-degenerate h, where m is
  the larger of gcd(2h, q+1) and gcd(2h+2, q+1);
* Singleton-like and Cadambe-Mazumdar (t = 1, Singleton estimate) bounds for
  locally repairable codes, with locality d_dual - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, gcd

from .field import FieldContext

# -- dimension table ---------------------------------------------------------


def degenerate_offsets(q: int) -> set[int]:
    """Offsets where the two parity cosets collide or shrink."""
    out = {0, q}
    if q % 2 == 0:
        out.add(q // 2)
    else:
        out.add((q - 1) // 2)
        out.add((q + 1) // 2)
    return out


def predict_dimension(q: int, h: int) -> int:
    """Case-table dimension of the code with offset h."""
    if not 0 <= h <= q:
        raise ValueError(f"h={h} out of range [0, {q}]")
    if q % 2 == 0:
        if h == q // 2:
            return q - 1
        if h in (0, q):
            return q - 2
        return q - 3
    if h in (0, (q - 1) // 2, (q + 1) // 2, q):
        return q - 2
    return q - 3


def predict_dual_dimension(q: int, h: int) -> int:
    return (q + 1) - predict_dimension(q, h)


# -- distance criteria -------------------------------------------------------


def d3_criterion(q: int, h: int) -> bool:
    """True exactly when the minimum distance is 3."""
    return gcd(2 * h + 1, q + 1) > 1


def minor_det(ctx: FieldContext, x: int, y: int, h: int) -> int:
    """det [[x^h, y^h], [x^(h+1), y^(h+1)]] = x^h * y^h * (y - x)."""
    return ctx.sub(
        ctx.mul(ctx.pow(x, h), ctx.pow(y, h + 1)),
        ctx.mul(ctx.pow(y, h), ctx.pow(x, h + 1)),
    )


def divided_difference(ctx: FieldContext, x: int, y: int, h: int) -> int:
    """(x^(2h+1) - y^(2h+1)) / (x - y) for x != y."""
    if x == y:
        raise ValueError("divided difference needs x != y")
    num = ctx.sub(ctx.pow(x, 2 * h + 1), ctx.pow(y, 2 * h + 1))
    return ctx.div(num, ctx.sub(x, y))


def ratio_equation_holds(
    ctx: FieldContext, h: int, x: int, y: int, z: int, w: int
) -> bool:
    """E(x,z)/E(x,w) == E(y,z)/E(y,w) for the divided difference E."""
    lhs = ctx.mul(divided_difference(ctx, x, z, h), divided_difference(ctx, y, w, h))
    rhs = ctx.mul(divided_difference(ctx, y, z, h), divided_difference(ctx, x, w, h))
    return lhs == rhs


def find_ratio_quadruple(ctx: FieldContext, h: int):
    """Search U_{q+1} for four distinct x, y, z, w with equal ratios.

    Collision method: for each pair (z, w) hash x -> E(x,z)/E(x,w) and stop
    at the first repeated value.  Iteration is by ascending exponent, so the
    returned quadruple is deterministic.  Returns None when no quadruple
    exists (q even, distance 5) or when U_{q+1} has fewer than 4 elements.
    """
    q = ctx.q
    circle = ctx.unit_circle()
    if len(circle) < 4:
        return None
    if gcd(2 * h + 1, q + 1) != 1:
        raise ValueError("quadruple search requires gcd(2h+1, q+1) = 1")
    for zi in range(len(circle)):
        z = circle[zi]
        for wi in range(zi + 1, len(circle)):
            w = circle[wi]
            seen: dict[int, int] = {}
            for xi in range(len(circle)):
                if xi == zi or xi == wi:
                    continue
                x = circle[xi]
                ratio = ctx.div(
                    divided_difference(ctx, x, z, h),
                    divided_difference(ctx, x, w, h),
                )
                if ratio in seen:
                    return (seen[ratio], x, z, w)
                seen[ratio] = x
    return None


def odd_q_quadruple(ctx: FieldContext, h: int):
    """The closed-form quadruple (x, x^(-1), 1, -1) available for odd q."""
    if ctx.q % 2 == 0:
        raise ValueError("construction requires q odd")
    one = 1
    minus_one = ctx.neg(1)
    for x in ctx.unit_circle():
        if x not in (one, minus_one):
            return (x, ctx.inv(x), one, minus_one)
    return None


@dataclass(frozen=True)
class MinDistancePrediction:
    outcome: str  # "3" | "4" | "4or5"
    resolved: int | None
    quadruple: tuple | None


def predict_min_distance(
    ctx: FieldContext, h: int, resolve: bool = False
) -> MinDistancePrediction:
    """Predicted minimum distance for the designed-distance-3 code.

    ``resolve`` runs the quadruple search for the q-even "4 or 5" case; the
    outcome stays "4or5" with a resolved value attached, because only the
    search (not a closed form) separates the two.
    """
    q = ctx.q
    if d3_criterion(q, h):
        return MinDistancePrediction("3", 3, None)
    if q % 2 == 1:
        return MinDistancePrediction("4", 4, None)
    if not resolve:
        return MinDistancePrediction("4or5", None, None)
    quad = find_ratio_quadruple(ctx, h)
    return MinDistancePrediction("4or5", 4 if quad else 5, quad)


def dual_distance_bounds(q: int, h: int) -> tuple[int, int] | None:
    """[q-2h-1, q+1-m] for non-degenerate h; None where the offset is
    degenerate and the dual dimension drops below 4."""
    if h in degenerate_offsets(q):
        return None
    m = max(gcd(2 * h, q + 1), gcd(2 * h + 2, q + 1))
    return (q - 2 * h - 1, q + 1 - m)


# -- classification and LRC bounds -------------------------------------------


def classify(n: int, k: int, d: int, k_dual: int, d_dual: int) -> str:
    """MDS / AMDS / NMDS / other from exact parameters."""
    if d == n - k + 1:
        return "MDS"
    if d == n - k:
        if d_dual == n - k_dual:
            return "NMDS"
        return "AMDS"
    return "other"


def locality(d_dual: int) -> int:
    """Locality of a nontrivial cyclic code: one less than its dual distance."""
    if d_dual < 2:
        raise ValueError("locality needs a nontrivial dual (d_dual >= 2)")
    return d_dual - 1


def singleton_like_max_d(n: int, k: int, r: int) -> int:
    """Largest distance allowed for an (n, k, d; r) locally repairable code."""
    if r < 1:
        raise ValueError("locality r must be >= 1")
    return n - k - ceil(k / r) + 2


def cm_rhs_t1(n: int, d: int, r: int) -> int:
    """t = 1 Cadambe-Mazumdar value with the Singleton dimension estimate:
    r + k_opt(n - (r+1), d) <= r + (n - (r+1) - d + 1)."""
    return r + (n - (r + 1) - d + 1)


def cm_k_optimal(n: int, k: int, d: int, r: int, q: int) -> bool:
    """Dimension optimality via the t = 1 bound; the Singleton estimate makes
    the check alphabet-free (q kept for signature symmetry)."""
    del q
    return k >= cm_rhs_t1(n, d, r)


@dataclass(frozen=True)
class LrcAudit:
    r: int
    singleton_like_rhs: int
    cm_rhs_t1: int
    d_optimal: bool
    k_optimal: bool


def lrc_audit(n: int, k: int, d: int, d_dual: int, q: int) -> LrcAudit:
    """Distance/dimension optimality audit with locality r = d_dual - 1."""
    r = locality(d_dual)
    rhs = singleton_like_max_d(n, k, r)
    cm = cm_rhs_t1(n, d, r)
    return LrcAudit(
        r=r,
        singleton_like_rhs=rhs,
        cm_rhs_t1=cm,
        d_optimal=(d == rhs),
        k_optimal=(k >= cm),
    )


__all__ = [
    "degenerate_offsets",
    "predict_dimension",
    "predict_dual_dimension",
    "d3_criterion",
    "minor_det",
    "divided_difference",
    "ratio_equation_holds",
    "find_ratio_quadruple",
    "odd_q_quadruple",
    "MinDistancePrediction",
    "predict_min_distance",
    "dual_distance_bounds",
    "classify",
    "locality",
    "singleton_like_max_d",
    "cm_rhs_t1",
    "cm_k_optimal",
    "LrcAudit",
    "lrc_audit",
]
