"""Brute-force reference implementations used to pin down expected values.

Nothing here is fast; everything here defines ground truth for tests:

  * naive_truncated_eval: (S v mod X^(d-1))(beta) by full multiplication.
  * brute_min_module_element: minimal element of the constrained module by
    exhaustive enumeration.
  * naive_chase: per-pattern re-decoding from scratch, no shared state.
"""

from __future__ import annotations

import itertools

from .gf import FieldCtx
from .grs import ErrorEstimate, GrsCode, forney_values, syndrome, syndrome_consistent
from .groebner import PolyPair, lm_w, monomial_less, solve_key_equation
from .poly import Poly


def naive_truncated_eval(ctx: FieldCtx, S: Poly, v: Poly, beta: int, two_t: int) -> int:
    """(S v mod X^two_t)(beta) the obvious way."""
    return S.mul(v).truncate(two_t).eval(beta)


def _pattern_conditions_hold(code: GrsCode, u: Poly, v: Poly, pattern) -> bool:
    ctx = code.ctx
    for alpha, beta in pattern:
        ainv = ctx.inv(alpha)
        if v.eval(ainv) != 0:
            return False
        a = code.multipliers[code.coord_of(alpha)]
        lhs = ctx.mul(ctx.mul(beta, a), v.deriv().eval(ainv))
        rhs = ctx.neg(ctx.mul(alpha, u.eval(ainv)))
        if lhs != rhs:
            return False
    return True


def brute_min_module_element(code: GrsCode, S: Poly, pattern, deg_cap: int):
    """Minimal element (under the decoding order, w = -1) of the module of
    pairs (u, v) with u == S v mod X^(d-1) and the root/derivative
    conditions of every (alpha, beta) in pattern, among all pairs with
    deg(v) <= deg_cap and deg(u) <= max(d-2, deg_cap).

    Enumeration walks every v coefficient vector; u is then forced below
    X^(d-1) by the congruence, with a free polynomial tail above it when
    deg_cap allows.  Returns the minimal pair normalized to leading
    coefficient 1 on its leading side, or None if the slice is empty.

    Intended for small fields only (cost q^(deg_cap+1) times the tail).
    """
    ctx = code.ctx
    q = ctx.q
    two_t = code.d - 1
    tail_len = max(0, deg_cap - two_t + 1)
    best = None
    best_lm = None
    for v_coeffs in itertools.product(range(q), repeat=deg_cap + 1):
        v = Poly(ctx, v_coeffs)
        u_forced = S.mul(v).truncate(two_t)
        tails = itertools.product(range(q), repeat=tail_len) if tail_len else ((),)
        for tail in tails:
            u = Poly(ctx, u_forced.coeffs + (0,) * (two_t - len(u_forced.coeffs)) + tuple(tail))
            if v.is_zero() and u.is_zero():
                continue
            if u_forced.degree > deg_cap and tail_len == 0:
                continue
            if not _pattern_conditions_hold(code, u, v, pattern):
                continue
            pair = PolyPair(u, v)
            lm = lm_w(pair, -1)
            if best is None or monomial_less(lm, best_lm, -1):
                best, best_lm = pair, lm
    if best is None:
        return None
    lead = best.v if best_lm.side == 1 else best.u
    return best.scale(ctx.inv(lead.leading_coeff()))


def naive_chase(code: GrsCode, y, I, A_sets, r_max: int) -> set:
    """Candidate error vectors by per-pattern re-decoding from scratch.

    For every test pattern of weight r <= r_max: subtract the pattern from
    the received word, rebuild the syndrome, re-solve the key equation, and
    accept exactly when the minimal element looks like a weight-t error
    (degree t, t distinct roots, nonzero values) whose support avoids the
    pattern, so that the combined estimate has t + r distinct locations.
    The accepted vector is pattern + residual estimate.
    """
    ctx = code.ctx
    t = code.t
    found = set()
    eta = len(I)
    position_pairs = [[(I[i], beta) for beta in A_sets[i]] for i in range(eta)]

    def decode_once(pattern) -> None:
        y2 = list(y)
        for alpha, beta in pattern:
            i = code.coord_of(alpha)
            y2[i] = ctx.sub(y2[i], beta)
        S2 = syndrome(code, y2)
        if S2.is_zero():
            # residual estimate is empty; combined weight r != t + r, which
            # the fast traversal's degree condition likewise rejects
            return
        basis = solve_key_equation(code, S2)
        v = basis.g1.v
        u = basis.g1.u
        if v.degree != t:
            return
        roots = [i for i, val in enumerate(v.eval_domain()) if val == 0]
        if len(roots) != t:
            return
        est_locs = tuple(code.locator_of(i) for i in roots)
        try:
            est_vals = tuple(forney_values(code, v, u, est_locs))
        except ZeroDivisionError:
            return
        if any(val == 0 for val in est_vals):
            return
        pattern_locs = tuple(alpha for alpha, _ in pattern)
        if set(est_locs) & set(pattern_locs):
            return
        combined = ErrorEstimate(
            pattern_locs + est_locs,
            tuple(beta for _, beta in pattern) + est_vals,
        )
        if syndrome_consistent(code, syndrome(code, y), combined):
            found.add(combined.vector(code))

    decode_once(())
    for r in range(1, r_max + 1):
        for positions in itertools.combinations(range(eta), r):
            for choice in itertools.product(*(position_pairs[i] for i in positions)):
                decode_once(tuple(choice))
    return found
