"""Cross-kernel equivalence and the truncated-product evaluation."""

import random

import pytest

from fastchase import (
    CompactKernel,
    DegreeGuardError,
    EdgeMod,
    FieldCtx,
    GrsCode,
    Poly,
    encode,
    get_kernel,
    naive_truncated_eval,
    solve_key_equation,
    syndrome,
    truncated_product_eval,
    unit_multipliers,
)

KERNEL_NAMES = ("pairs", "compact", "evals", "coeffs")


def planted_instance(code, rng, eps):
    msg = [rng.randrange(code.ctx.q) for _ in range(code.k)]
    y = list(encode(code, msg))
    coords = rng.sample(range(code.n), eps)
    truth = {}
    for i in coords:
        v = rng.randrange(1, code.ctx.q)
        y[i] = code.ctx.add(y[i], v)
        truth[i] = v
    return y, truth


def random_chain(code, rng, length, truth):
    """Mixed edges: correct hypotheses, wrong values, wrong locations."""
    coords = rng.sample(range(code.n), length)
    chain = []
    for i in coords:
        if i in truth and rng.random() < 0.5:
            beta = truth[i]  # correct hypothesis; often zero discrepancy
        else:
            beta = rng.randrange(1, code.ctx.q)
        chain.append(EdgeMod(code.locator_of(i), beta, code.multipliers[i]))
    return chain


def test_four_kernel_equivalence():
    # the compact kernel must carry the same right components as the pairs
    # kernel; the eval kernel the same domain evaluations; the coefficient
    # kernel the same basis up to one scalar per row
    ctx = FieldCtx(4)
    code = GrsCode(ctx, 11, unit_multipliers(ctx))  # t = 5
    rng = random.Random(7)
    kernels = {name: get_kernel(name) for name in KERNEL_NAMES}
    for trial in range(40):
        y, truth = planted_instance(code, rng, code.t + rng.randrange(0, 3))
        S = syndrome(code, y)
        if S.is_zero():
            continue
        basis = solve_key_equation(code, S)
        chain = random_chain(code, rng, 2, truth)
        locs = tuple(e.alpha for e in chain)
        states = {n: k.start(code, S, basis, locators=locs) for n, k in kernels.items()}
        for edge in chain:
            for name in KERNEL_NAMES:
                states[name], _ = kernels[name].apply_edge(states[name], edge)
            pair_state = states["pairs"]
            g0, g1 = pair_state.basis.g0, pair_state.basis.g1

            cs = states["compact"]
            assert cs.safe
            assert cs.g01.coeffs == g0.v.coeffs
            assert cs.g11.coeffs == g1.v.coeffs
            assert cs.d0 == g0.u.degree

            es = states["evals"]
            for row, pair in ((0, g0), (1, g1)):
                assert es.v[row][0] == pair.u.eval_domain()
                assert es.v[row][1] == pair.v.eval_domain()
                assert es.v[row][2] == pair.v.deriv().eval_domain()
            lm0, lm1 = kernels["pairs"].lm_info(pair_state)
            assert kernels["evals"].lm_info(es) == (lm0, lm1)

            fs = states["coeffs"]
            ck = kernels["coeffs"]
            # reconstruction agrees with g1 up to one common scalar:
            # cross-multiply by the leading coefficients
            sig, omg = ck.sigma_poly(fs), ck.omega_poly(fs)
            assert sig.degree == g1.v.degree
            lead_rec, lead_ref = sig.leading_coeff(), g1.v.leading_coeff()
            assert sig.scale(lead_ref).coeffs == g1.v.scale(lead_rec).coeffs
            assert omg.scale(lead_ref).coeffs == g1.u.scale(lead_rec).coeffs
            assert ck.elp_degree(fs) == kernels["pairs"].elp_degree(pair_state)


def test_truncated_product_eval_matches_naive_with_exact_count():
    ctx = FieldCtx(4)
    rng = random.Random(8)
    two_t = 6
    for _ in range(100):
        S = Poly(ctx, [rng.randrange(16) for _ in range(two_t)])
        beta = rng.randrange(1, 16)
        # random v with v(beta) = 0: multiply a random poly by (X - beta)
        base = Poly(ctx, [rng.randrange(16) for _ in range(rng.randrange(1, 4))] + [1])
        v = base.mul_linear(beta)
        if v.degree > two_t - 1:
            continue
        beta_pow = ctx.pow(beta, two_t)
        want = naive_truncated_eval(ctx, S, v, beta, two_t)
        ctx.counter.reset()
        got = truncated_product_eval(ctx, S, v, beta, two_t, beta_pow)
        assert got == want
        assert ctx.counter.mults == 2 * v.degree + 1


def test_compact_degree_guard_safe_flag_and_strict():
    # a long chain of wrong hypotheses can push the suppressed left
    # component past degree d-2; the lenient kernel marks the state
    # unsafe, the strict kernel raises
    ctx = FieldCtx(3)
    code = GrsCode(ctx, 5, unit_multipliers(ctx))
    rng = random.Random(0)
    msg = [rng.randrange(8) for _ in range(code.k)]
    y = list(encode(code, msg))
    for i in rng.sample(range(7), 4):
        y[i] ^= rng.randrange(1, 8)
    S = syndrome(code, y)
    basis = solve_key_equation(code, S)
    coords = rng.sample(range(7), 5)
    chain = [EdgeMod(code.locator_of(i), rng.randrange(1, 8), 1) for i in coords]
    locs = tuple(e.alpha for e in chain)

    lenient = CompactKernel(strict=False)
    state = lenient.start(code, S, basis, locators=locs)
    tripped_at = None
    for depth, edge in enumerate(chain, start=1):
        state, _ = lenient.apply_edge(state, edge)
        if not state.safe:
            tripped_at = depth
            break
    assert tripped_at == 3

    strict = CompactKernel(strict=True)
    state = strict.start(code, S, basis, locators=locs)
    with pytest.raises(DegreeGuardError):
        for edge in chain:
            state, _ = strict.apply_edge(state, edge)


def test_erasure_updates_agree_across_kernels():
    ctx = FieldCtx(4)
    code = GrsCode(ctx, 7, unit_multipliers(ctx))
    rng = random.Random(9)
    for _ in range(20):
        y, truth = planted_instance(code, rng, code.t + 1)
        S = syndrome(code, y)
        if S.is_zero():
            continue
        basis = solve_key_equation(code, S)
        erase = [code.locator_of(i) for i in rng.sample(sorted(truth), 2)]
        pairs = get_kernel("pairs")
        compact = get_kernel("compact")
        ps = pairs.start(code, S, basis, locators=tuple(erase))
        cs = compact.start(code, S, basis, locators=tuple(erase))
        for alpha in erase:
            ps, _ = pairs.apply_erasure(ps, alpha)
            cs, _ = compact.apply_erasure(cs, alpha)
            assert cs.g01.coeffs == ps.basis.g0.v.coeffs
            assert cs.g11.coeffs == ps.basis.g1.v.coeffs
