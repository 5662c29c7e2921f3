"""Code construction, encoding, syndromes, and Forney value extraction."""

import itertools
import random

import pytest

from fastchase import (
    ErrorEstimate,
    FieldCtx,
    GrsCode,
    elp_eep_of,
    encode,
    forney_values,
    generator_poly,
    hamming_distance,
    is_codeword,
    syndrome,
    syndrome_consistent,
    unit_multipliers,
)


def make_code(m=3, d=5, mult=None):
    ctx = FieldCtx(m)
    return GrsCode(ctx, d, mult or unit_multipliers(ctx))


def test_parameters_and_validation():
    code = make_code(3, 5)
    assert (code.n, code.k, code.t) == (7, 3, 2)
    ctx = code.ctx
    with pytest.raises(ValueError):
        GrsCode(ctx, 4, unit_multipliers(ctx))  # even d
    with pytest.raises(ValueError):
        GrsCode(ctx, 9, unit_multipliers(ctx))  # d > n
    bad = list(unit_multipliers(ctx))
    bad[3] = 0
    with pytest.raises(ValueError):
        GrsCode(ctx, 5, tuple(bad))


def test_locator_coordinate_roundtrip():
    code = make_code(4, 7)
    for i in range(code.n):
        assert code.coord_of(code.locator_of(i)) == i


def test_encode_gives_codewords():
    rng = random.Random(0)
    for m, d in ((3, 5), (4, 7)):
        code = make_code(m, d)
        ctx = code.ctx
        for _ in range(30):
            msg = [rng.randrange(ctx.q) for _ in range(code.k)]
            cw = encode(code, msg)
            assert len(cw) == code.n
            assert is_codeword(code, cw)
            assert syndrome(code, cw).is_zero()


def test_nonuniform_multipliers():
    ctx = FieldCtx(3)
    rng = random.Random(1)
    mult = tuple(rng.randrange(1, 8) for _ in range(7))
    code = GrsCode(ctx, 5, mult)
    for _ in range(20):
        msg = [rng.randrange(8) for _ in range(code.k)]
        assert syndrome(code, encode(code, msg)).is_zero()


def test_generator_poly_roots():
    code = make_code(4, 7)
    g = generator_poly(code)
    assert g.degree == code.d - 1
    for j in range(code.d - 1):
        assert g.eval(code.ctx.powers[j]) == 0


def test_syndrome_depends_only_on_error():
    code = make_code(3, 5)
    ctx = code.ctx
    rng = random.Random(2)
    for _ in range(30):
        msg = [rng.randrange(8) for _ in range(code.k)]
        cw = encode(code, msg)
        e = [0] * code.n
        for i in rng.sample(range(code.n), rng.randrange(1, 4)):
            e[i] = rng.randrange(1, 8)
        y = [ctx.add(a, b) for a, b in zip(cw, e)]
        assert syndrome(code, y).coeffs == syndrome(code, e).coeffs


def test_min_weight_spot_check():
    # every nonzero codeword of the (7,3,5) code has weight >= 5
    code = make_code(3, 5)
    for msg in itertools.product(range(8), repeat=code.k):
        if any(msg):
            cw = encode(code, list(msg))
            assert sum(1 for c in cw if c) >= code.d


def test_elp_eep_forney_roundtrip():
    rng = random.Random(3)
    for m, d in ((3, 5), (4, 7)):
        code = make_code(m, d)
        ctx = code.ctx
        for _ in range(50):
            wt = rng.randrange(1, code.t + 3)
            coords = rng.sample(range(code.n), wt)
            est = ErrorEstimate(
                tuple(code.locator_of(i) for i in coords),
                tuple(rng.randrange(1, ctx.q) for _ in coords),
            )
            sigma, omega = elp_eep_of(code, est)
            assert sigma.degree == wt
            assert omega.degree < wt or omega.is_zero()
            got = forney_values(code, sigma, omega, est.locators)
            assert got == list(est.values)
            # scale invariance of the Forney extraction
            c = rng.randrange(2, ctx.q)
            assert forney_values(code, sigma.scale(c), omega.scale(c), est.locators) == got


def test_syndrome_consistency():
    code = make_code(3, 5)
    ctx = code.ctx
    rng = random.Random(4)
    for _ in range(40):
        coords = rng.sample(range(code.n), 3)
        est = ErrorEstimate(
            tuple(code.locator_of(i) for i in coords),
            tuple(rng.randrange(1, 8) for _ in coords),
        )
        S = syndrome(code, est.vector(code))
        assert syndrome_consistent(code, S, est)
        wrong = ErrorEstimate(est.locators, tuple(ctx.add(v, 1) or 1 for v in est.values))
        if wrong.values != est.values:
            assert not syndrome_consistent(code, S, wrong)


def test_error_estimate_validation_and_vector():
    code = make_code(3, 5)
    with pytest.raises(ValueError):
        ErrorEstimate((1, 1), (2, 3))  # repeated locator
    with pytest.raises(ValueError):
        ErrorEstimate((1, 2), (2, 0))  # zero value
    est = ErrorEstimate((code.locator_of(2), code.locator_of(5)), (3, 6))
    vec = est.vector(code)
    assert vec[2] == 3 and vec[5] == 6 and sum(1 for v in vec if v) == 2
    assert est.weight() == 2
    assert hamming_distance(vec, [0] * code.n) == 2
