import numpy as np
import pytest

from bchlab import gflin
from bchlab.bch import (
    build_bch,
    dual_basis,
    dual_codeword,
    expanded_parity_matrix,
    generator_matrix,
    parity_rows,
    split_on_basis,
)
from bchlab.field import build_field
from bchlab.polynomial import Poly


def eval_word_on_row(ctx, word_compact, row_raw):
    acc = 0
    for w, r in zip(ctx.from_compact(np.asarray(word_compact)), row_raw):
        acc = ctx.add(acc, ctx.mul(int(w), int(r)))
    return acc


@pytest.mark.parametrize(
    "p,s,h,deg,k",
    [
        (2, 3, 4, 2, 7),  # q=8, h=q/2
        (3, 2, 0, 3, 7),  # q=9, h=0
        (3, 2, 2, 4, 6),  # q=9 generic offset
    ],
)
def test_dimension_examples(p, s, h, deg, k):
    ctx = build_field(p, s)
    code = build_bch(ctx, 3, h)
    assert code.g.degree == deg
    assert code.k == k


@pytest.mark.parametrize("p,s", [(2, 1), (2, 2), (3, 1), (5, 1), (2, 3), (3, 2)])
def test_generator_divides_x_n_minus_1(p, s):
    ctx = build_field(p, s)
    for h in range(ctx.q + 1):
        code = build_bch(ctx, 3, h)
        assert (Poly.x_pow_minus_one(ctx, "q", code.n) % code.g).is_zero()
        assert code.k == code.n - code.g.degree


def test_generator_rows_annihilated_by_parity_rows():
    ctx = build_field(2, 3)
    code = build_bch(ctx, 3, 4)
    gen = generator_matrix(code)
    assert gen.shape == (7, 9)
    rows = parity_rows(code)
    for grow in gen:
        for prow in rows:
            assert eval_word_on_row(ctx, grow, prow) == 0


@pytest.mark.parametrize("p,s", [(2, 2), (3, 2), (2, 3)])
def test_generator_matrix_rank(p, s):
    ctx = build_field(p, s)
    for h in range(ctx.q + 1):
        code = build_bch(ctx, 3, h)
        gen = generator_matrix(code)
        assert gflin.rank(ctx, gen) == code.k


def test_zero_dimensional_edge():
    ctx = build_field(2, 1)
    code = build_bch(ctx, 3, 0)  # q=2: k = q-2 = 0
    assert code.k == 0
    assert generator_matrix(code).shape == (0, 3)
    assert dual_basis(code).shape == (3, 3)


def test_expanded_parity_ranks():
    ctx9 = build_field(3, 2)
    assert gflin.rank(ctx9, expanded_parity_matrix(build_bch(ctx9, 3, 2))) == 4
    ctx8 = build_field(2, 3)
    assert gflin.rank(ctx8, expanded_parity_matrix(build_bch(ctx8, 3, 4))) == 2


@pytest.mark.parametrize("p,s", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_expanded_kernel_dimension_is_k(p, s):
    ctx = build_field(p, s)
    for h in range(ctx.q + 1):
        code = build_bch(ctx, 3, h)
        mat = expanded_parity_matrix(code)
        assert gflin.kernel_basis(ctx, mat).shape[0] == code.k
        assert gflin.rank(ctx, mat) == code.n - code.k


def test_split_on_basis_reconstructs():
    ctx = build_field(3, 2)
    rng = np.random.default_rng(21)
    for x in rng.integers(0, ctx.q2, size=200):
        c0, c1 = split_on_basis(ctx, int(x))
        assert ctx.in_subfield(c0) and ctx.in_subfield(c1)
        assert ctx.add(c0, ctx.mul(c1, ctx.alpha)) == int(x)


def test_kernel_of_expanded_equals_code():
    # the kernel of the 4-row GF(q) parity matrix spans the same space as
    # the generator matrix
    ctx = build_field(3, 2)
    code = build_bch(ctx, 3, 1)
    mat = expanded_parity_matrix(code)
    kern = gflin.kernel_basis(ctx, mat)
    gen = generator_matrix(code)
    stacked = np.vstack([kern, gen])
    assert gflin.rank(ctx, stacked) == code.k


def test_dual_codeword_zero_pair():
    ctx = build_field(3, 2)
    code = build_bch(ctx, 3, 1)
    assert set(dual_codeword(code, 0, 0).word) == {0}


def test_dual_codewords_orthogonal_to_code():
    ctx = build_field(3, 2)
    code = build_bch(ctx, 3, 1)
    gen = generator_matrix(code)
    add, mul = ctx.add_table, ctx.mul_table
    rng = np.random.default_rng(22)
    for _ in range(50):
        a, b = (int(x) for x in rng.integers(0, ctx.q2, size=2))
        word = np.array(dual_codeword(code, a, b).word)
        for row in gen:
            acc = 0
            for wi, ri in zip(word, row):
                acc = add[acc, mul[wi, ri]]
            assert acc == 0


def test_dual_codeword_weight_equals_root_count():
    # wt(c_(a,b)) = (q+1) - #{u in U : b u^(2h+2) + a u^(2h+1) + a^q u + b^q = 0}
    for (p, s, h) in [(3, 2, 1), (2, 3, 2), (3, 2, 2)]:
        ctx = build_field(p, s)
        code = build_bch(ctx, 3, h)
        rng = np.random.default_rng(23)
        for _ in range(40):
            a, b = (int(x) for x in rng.integers(0, ctx.q2, size=2))
            roots = 0
            for u in ctx.unit_circle():
                val = ctx.add(
                    ctx.add(
                        ctx.mul(b, ctx.pow(u, 2 * h + 2)),
                        ctx.mul(a, ctx.pow(u, 2 * h + 1)),
                    ),
                    ctx.add(ctx.mul(ctx.frobenius(a), u), ctx.frobenius(b)),
                )
                roots += val == 0
            assert dual_codeword(code, a, b).weight() == (ctx.q + 1) - roots


def test_dual_basis_matches_trace_span():
    # kernel-of-G basis and the trace words span the same GF(q)-space
    ctx = build_field(3, 2)
    for h in range(ctx.q + 1):
        code = build_bch(ctx, 3, h)
        kern = dual_basis(code)
        trace_rows = [
            dual_codeword(code, a, b).word
            for (a, b) in [(1, 0), (ctx.alpha, 0), (0, 1), (0, ctx.alpha)]
        ]
        stacked = np.vstack([kern, np.array(trace_rows, dtype=np.int64)])
        assert gflin.rank(ctx, stacked) == kern.shape[0]


def test_delta_is_a_real_parameter():
    ctx = build_field(3, 2)
    code2 = build_bch(ctx, 2, 1)
    assert code2.g.degree == 2  # single quadratic minimal polynomial
    code4 = build_bch(ctx, 4, 1)
    assert code4.g.degree == 6
    assert (Poly.x_pow_minus_one(ctx, "q", 10) % code4.g).is_zero()


def test_build_errors():
    ctx = build_field(3, 2)
    with pytest.raises(ValueError):
        build_bch(ctx, 3, -1)
    with pytest.raises(ValueError):
        build_bch(ctx, 3, ctx.q + 1)
    with pytest.raises(ValueError):
        build_bch(ctx, 1, 0)
    with pytest.raises(ValueError):
        build_bch(ctx, ctx.q + 2, 0)
    with pytest.raises(ValueError):
        dual_codeword(build_bch(ctx, 4, 0), 1, 1)
