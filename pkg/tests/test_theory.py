import itertools
from math import gcd

import numpy as np
import pytest

from bchlab import theory
from bchlab.bch import build_bch
from bchlab.field import build_field


def det3(ctx, rows):
    """Cofactor expansion of a 3x3 matrix over GF(q^2); test-side oracle."""
    (a, b, c), (d, e, f), (g, h_, i) = rows
    t1 = ctx.mul(a, ctx.sub(ctx.mul(e, i), ctx.mul(f, h_)))
    t2 = ctx.mul(b, ctx.sub(ctx.mul(d, i), ctx.mul(f, g)))
    t3 = ctx.mul(c, ctx.sub(ctx.mul(d, h_), ctx.mul(e, g)))
    return ctx.add(ctx.sub(t1, t2), t3)


def power_det(ctx, x, y, z, h):
    """det of rows (x^-h, y^-h, z^-h), (x^h, ...), (x^(h+1), ...)."""
    return det3(
        ctx,
        [
            [ctx.pow(x, -h), ctx.pow(y, -h), ctx.pow(z, -h)],
            [ctx.pow(x, h), ctx.pow(y, h), ctx.pow(z, h)],
            [ctx.pow(x, h + 1), ctx.pow(y, h + 1), ctx.pow(z, h + 1)],
        ],
    )


# -- dimension predictions -----------------------------------------------------


@pytest.mark.parametrize(
    "q,h,k,k_dual",
    [
        (8, 4, 7, 2),
        (8, 0, 6, 3),
        (8, 8, 6, 3),
        (8, 3, 5, 4),
        (9, 0, 7, 3),
        (9, 4, 7, 3),
        (9, 5, 7, 3),
        (9, 9, 7, 3),
        (9, 2, 6, 4),
    ],
)
def test_predict_dimension_cases(q, h, k, k_dual):
    assert theory.predict_dimension(q, h) == k
    assert theory.predict_dual_dimension(q, h) == k_dual


@pytest.mark.parametrize("p,s", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_predictions_match_construction(p, s):
    ctx = build_field(p, s)
    for h in range(ctx.q + 1):
        code = build_bch(ctx, 3, h)
        assert code.k == theory.predict_dimension(ctx.q, h), (ctx.q, h)


def test_predict_dimension_range_check():
    with pytest.raises(ValueError):
        theory.predict_dimension(9, 10)


# -- d = 3 criterion -------------------------------------------------------------


def test_d3_criterion_examples():
    assert theory.d3_criterion(9, 2)  # gcd(5, 10) = 5
    assert not theory.d3_criterion(9, 1)  # gcd(3, 10) = 1
    assert theory.d3_criterion(8, 1)  # gcd(3, 9) = 3


# -- determinant identities ------------------------------------------------------


def test_minor_det_antisymmetric_and_zero_on_diagonal():
    ctx = build_field(3, 2)
    rng = np.random.default_rng(31)
    for _ in range(100):
        x, y = (int(v) for v in rng.integers(1, ctx.q2, size=2))
        h = int(rng.integers(0, ctx.q + 1))
        assert theory.minor_det(ctx, x, x, h) == 0
        # closed form x^h y^h (y - x)
        expect = ctx.mul(
            ctx.mul(ctx.pow(x, h), ctx.pow(y, h)), ctx.sub(y, x)
        )
        assert theory.minor_det(ctx, x, y, h) == expect


@pytest.mark.parametrize("p,s,h", [(3, 3, 4), (2, 3, 2), (5, 2, 3)])
def test_minor_det_frobenius_identity(p, s, h):
    # D(x,y)^q = -x^(-2h-1) y^(-2h-1) D(x,y) on the unit circle
    ctx = build_field(p, s)
    circle = ctx.unit_circle()
    rng = np.random.default_rng(32)
    for _ in range(300):
        x, y = (circle[int(i)] for i in rng.integers(0, len(circle), size=2))
        d = theory.minor_det(ctx, x, y, h)
        lhs = ctx.frobenius(d)
        rhs = ctx.neg(
            ctx.mul(ctx.mul(ctx.pow(x, -2 * h - 1), ctx.pow(y, -2 * h - 1)), d)
        )
        assert lhs == rhs


@pytest.mark.parametrize("p,s,h", [(3, 3, 4), (2, 3, 2), (5, 2, 3)])
def test_divided_difference_frobenius_identity(p, s, h):
    # E(x,y)^q = x^(-2h) y^(-2h) E(x,y) on the unit circle
    ctx = build_field(p, s)
    circle = ctx.unit_circle()
    rng = np.random.default_rng(33)
    for _ in range(300):
        i, j = rng.integers(0, len(circle), size=2)
        if i == j:
            continue
        x, y = circle[int(i)], circle[int(j)]
        e = theory.divided_difference(ctx, x, y, h)
        rhs = ctx.mul(ctx.mul(ctx.pow(x, -2 * h), ctx.pow(y, -2 * h)), e)
        assert ctx.frobenius(e) == rhs


def test_divided_difference_h0_and_errors():
    ctx = build_field(3, 2)
    assert theory.divided_difference(ctx, 5, 7, 0) == 1
    with pytest.raises(ValueError):
        theory.divided_difference(ctx, 5, 5, 1)


@pytest.mark.parametrize("p,s,h", [(3, 2, 1), (3, 3, 4), (2, 3, 2)])
def test_determinant_factorization(p, s, h):
    # det == x^-h y^-h z^-h [(x^(2h+1)-y^(2h+1))(z^(2h)-y^(2h))
    #                        - (z^(2h+1)-y^(2h+1))(x^(2h)-y^(2h))]
    ctx = build_field(p, s)
    rng = np.random.default_rng(34)
    for _ in range(200):
        x, y, z = (int(v) for v in rng.integers(1, ctx.q2, size=3))
        lhs = power_det(ctx, x, y, z, h)
        t1 = ctx.mul(
            ctx.sub(ctx.pow(x, 2 * h + 1), ctx.pow(y, 2 * h + 1)),
            ctx.sub(ctx.pow(z, 2 * h), ctx.pow(y, 2 * h)),
        )
        t2 = ctx.mul(
            ctx.sub(ctx.pow(z, 2 * h + 1), ctx.pow(y, 2 * h + 1)),
            ctx.sub(ctx.pow(x, 2 * h), ctx.pow(y, 2 * h)),
        )
        scale = ctx.mul(ctx.mul(ctx.pow(x, -h), ctx.pow(y, -h)), ctx.pow(z, -h))
        assert lhs == ctx.mul(scale, ctx.sub(t1, t2))


@pytest.mark.parametrize("p,s", [(2, 3), (3, 2)])
def test_vanishing_determinant_dichotomy(p, s):
    # zero determinant on distinct unit-circle triples forces equal
    # (2h+1)-th or equal 2h-th powers
    ctx = build_field(p, s)
    circle = ctx.unit_circle()
    for h in range(ctx.q + 1):
        for xi, yi, zi in itertools.combinations(range(len(circle)), 3):
            x, y, z = circle[xi], circle[yi], circle[zi]
            if power_det(ctx, x, y, z, h) != 0:
                continue
            odd_eq = (
                ctx.pow(x, 2 * h + 1)
                == ctx.pow(y, 2 * h + 1)
                == ctx.pow(z, 2 * h + 1)
            )
            even_eq = ctx.pow(x, 2 * h) == ctx.pow(y, 2 * h) == ctx.pow(z, 2 * h)
            assert odd_eq or even_eq, (ctx.q, h, xi, yi, zi)


@pytest.mark.parametrize("p,s", [(3, 2), (2, 3), (5, 1)])
def test_equal_powers_forces_large_gcd(p, s):
    # three distinct unit-circle elements with equal k-th powers need
    # gcd(k, q+1) >= 3
    ctx = build_field(p, s)
    circle = ctx.unit_circle()
    for k in range(3, ctx.q + 2):
        groups = {}
        for u in circle:
            groups.setdefault(ctx.pow(u, k), []).append(u)
        if any(len(g) >= 3 for g in groups.values()):
            assert gcd(k, ctx.q + 1) >= 3, k


# -- quadruple search -------------------------------------------------------------


def test_quadruple_odd_q_construction():
    for (p, s) in [(3, 2), (5, 1), (7, 1), (3, 3)]:
        ctx = build_field(p, s)
        for h in range(ctx.q + 1):
            if gcd(2 * h + 1, ctx.q + 1) != 1:
                continue
            quad = theory.odd_q_quadruple(ctx, h)
            x = quad[0]
            assert quad == (x, ctx.inv(x), 1, ctx.neg(1))
            assert len(set(quad)) == 4
            assert theory.ratio_equation_holds(ctx, h, *quad)


def test_quadruple_collision_search_agrees():
    ctx = build_field(3, 2)
    for h in range(ctx.q + 1):
        if gcd(2 * h + 1, ctx.q + 1) != 1:
            continue
        quad = theory.find_ratio_quadruple(ctx, h)
        assert quad is not None
        assert len(set(quad)) == 4
        assert theory.ratio_equation_holds(ctx, h, *quad)


def test_quadruple_q64_h4_exists():
    ctx = build_field(2, 6)
    quad = theory.find_ratio_quadruple(ctx, 4)
    assert quad is not None
    assert theory.ratio_equation_holds(ctx, 4, *quad)


def test_quadruple_tiny_circle_returns_none():
    ctx = build_field(2, 1)  # |U| = 3 < 4
    assert theory.find_ratio_quadruple(ctx, 1) is None


def test_quadruple_precondition():
    ctx = build_field(3, 2)
    with pytest.raises(ValueError):
        theory.find_ratio_quadruple(ctx, 2)  # gcd(5, 10) > 1


# -- distance prediction ----------------------------------------------------------


def test_predict_min_distance_outcomes():
    ctx9 = build_field(3, 2)
    assert theory.predict_min_distance(ctx9, 2).outcome == "3"
    assert theory.predict_min_distance(ctx9, 1).outcome == "4"
    ctx8 = build_field(2, 3)
    unresolved = theory.predict_min_distance(ctx8, 0)
    assert unresolved.outcome == "4or5" and unresolved.resolved is None
    resolved = theory.predict_min_distance(ctx8, 0, resolve=True)
    assert resolved.resolved == 4
    ctx4 = build_field(2, 2)
    res = theory.predict_min_distance(ctx4, 1, resolve=True)
    assert res.outcome == "4or5" and res.resolved == 5  # [5,1,5] code
    ctx27 = build_field(3, 3)
    assert theory.predict_min_distance(ctx27, 4).resolved == 4


# -- dual distance bounds ----------------------------------------------------------


def test_dual_distance_bounds_examples():
    assert theory.dual_distance_bounds(27, 4) == (18, 24)
    assert theory.dual_distance_bounds(25, 2) == (20, 24)
    assert theory.dual_distance_bounds(64, 4) == (55, 60)


def test_dual_distance_bounds_degenerate_offsets():
    for q, h in [(9, 0), (9, 4), (9, 5), (9, 9), (8, 4), (8, 0)]:
        assert theory.dual_distance_bounds(q, h) is None


def test_dual_distance_bounds_ordering():
    for q in (8, 9, 16, 25, 27):
        for h in range(q + 1):
            bounds = theory.dual_distance_bounds(q, h)
            if bounds is not None:
                assert bounds[0] <= bounds[1]


# -- classification and LRC bounds -------------------------------------------------


def test_classify_examples():
    assert theory.classify(10, 7, 4, 3, 4) == "MDS"
    assert theory.classify(10, 6, 4, 4, 6) == "NMDS"
    assert theory.classify(28, 24, 4, 4, 22) == "AMDS"
    assert theory.classify(28, 24, 4, 4, 24) == "NMDS"
    assert theory.classify(10, 6, 3, 4, 6) == "other"


def test_singleton_like_bound_example():
    assert theory.singleton_like_max_d(28, 24, 17) == 4
    assert theory.singleton_like_max_d(28, 24, 23) == 4


def test_locality():
    assert theory.locality(4) == 3
    with pytest.raises(ValueError):
        theory.locality(1)


def test_lrc_audit_known_instance():
    audit = theory.lrc_audit(28, 24, 4, 24, 27)
    assert audit.r == 23
    assert audit.singleton_like_rhs == 4
    assert audit.d_optimal and audit.k_optimal
    assert theory.cm_k_optimal(28, 24, 4, 23, 27)


def test_singleton_like_requires_positive_r():
    with pytest.raises(ValueError):
        theory.singleton_like_max_d(10, 4, 0)
