"""Polynomial arithmetic and its multiplication-count contracts."""

import random

from fastchase import FieldCtx, MINUS_INFINITY, Poly


def rand_poly(ctx, rng, deg):
    if deg < 0:
        return Poly.zero(ctx)
    coeffs = [rng.randrange(ctx.q) for _ in range(deg)] + [rng.randrange(1, ctx.q)]
    return Poly(ctx, coeffs)


def test_minus_infinity_semantics():
    assert MINUS_INFINITY < 0
    assert MINUS_INFINITY < -10**9
    assert not (MINUS_INFINITY > 5)
    assert MINUS_INFINITY + 3 is MINUS_INFINITY
    assert Poly.zero(FieldCtx(3)).degree is MINUS_INFINITY


def test_construction_trims_and_indexes():
    ctx = FieldCtx(3)
    p = Poly(ctx, [1, 2, 0, 0])
    assert p.degree == 1
    assert p[0] == 1 and p[1] == 2 and p[5] == 0
    assert Poly.monomial(ctx, 4, 3).degree == 4
    assert Poly.x(ctx).degree == 1


def test_add_mul_against_naive_convolution():
    ctx = FieldCtx(4)
    rng = random.Random(2)
    for _ in range(200):
        p = rand_poly(ctx, rng, rng.randrange(-1, 6))
        q = rand_poly(ctx, rng, rng.randrange(-1, 6))
        s = p.add(q)
        for i in range(8):
            assert s[i] == ctx.add(p[i], q[i])
        prod = p.mul(q)
        for i in range(12):
            want = 0
            for j in range(i + 1):
                if p[j] and q[i - j]:
                    want = ctx.add(want, ctx.mul(p[j], q[i - j]))
            assert prod[i] == want


def test_eval_is_horner_exact_count():
    ctx = FieldCtx(4)
    rng = random.Random(3)
    for deg in range(0, 7):
        p = rand_poly(ctx, rng, deg)
        x = rng.randrange(ctx.q)
        ctx.counter.reset()
        val = p.eval(x)
        assert ctx.counter.mults == deg
        want = 0
        for i, c in enumerate(p.coeffs):
            want = ctx.add(want, ctx.mul(c, ctx.pow(x, i)))
        assert val == want


def test_mul_linear_and_scale_counts():
    ctx = FieldCtx(4)
    rng = random.Random(4)
    for deg in range(0, 6):
        p = rand_poly(ctx, rng, deg)
        root = rng.randrange(ctx.q)
        ctx.counter.reset()
        q = p.mul_linear(root)
        assert ctx.counter.mults == deg + 1
        assert q.eval(root) == 0
        assert q[deg + 1] == p[deg]
        # (X - root) * p evaluated elsewhere
        x = rng.randrange(ctx.q)
        assert q.eval(x) == ctx.mul(ctx.sub(x, root), p.eval(x))
        c = rng.randrange(1, ctx.q)
        ctx.counter.reset()
        sc = p.scale(c)
        assert ctx.counter.mults == deg + 1
        assert sc.eval(x) == ctx.mul(c, p.eval(x))


def test_derivative_char_two():
    ctx = FieldCtx(3)
    rng = random.Random(5)
    for _ in range(50):
        p = rand_poly(ctx, rng, rng.randrange(0, 7))
        dp = p.deriv()
        for i in range(7):
            # formal derivative: coefficient of X^i is (i+1) * p_{i+1};
            # in characteristic 2 this keeps odd-index coefficients only
            want = p[i + 1] if (i + 1) % 2 == 1 else 0
            assert dp[i] == want


def test_shift_truncate_monic():
    ctx = FieldCtx(3)
    p = Poly(ctx, [3, 0, 5])
    assert p.shift(2).coeffs == (0, 0, 3, 0, 5)
    assert p.truncate(2).coeffs == (3,)
    m = p.monic()
    assert m.leading_coeff() == 1
    assert m.scale(p.leading_coeff()).coeffs == p.coeffs


def test_eval_domain_convention():
    # entry i of eval_domain is the value at the inverse locator of
    # coordinate i
    ctx = FieldCtx(3)
    rng = random.Random(6)
    p = rand_poly(ctx, rng, 4)
    dom = p.eval_domain()
    for i in range(ctx.q - 1):
        assert dom[i] == p.eval(ctx.inv_powers[i])
