"""Per-edge update kernels for tree-based soft decoding.

Each kernel maintains a representation of a Groebner basis {g0, g1} of the
solution module attached to a tree node, and updates it across an edge that
adjoins one error hypothesis (alpha, beta): first a root condition
v(alpha^-1) = 0, then a derivative condition

    beta * a * v'(alpha^-1) = -alpha * u(alpha^-1),

each imposed with one discrepancy-driven basis update (root strictly before
derivative; the derivative discrepancies below are only linear functionals
on the already root-constrained module).

Kernels:

  * PairKernel   ("pairs")  - full (u, v) polynomial pairs.
  * CompactKernel("compact")- right components g01, g11 only, plus the
    degree counter of g00; left evaluations are recovered through the
    syndrome by a truncated-product recursion costing 2 deg(v)+1
    multiplications.  Valid while the suppressed left components have
    degree <= d-2; the state carries a `safe` flag (or raises in strict
    mode) when that bound can no longer be guaranteed.
  * EvalKernel   ("evals")  - evaluation vectors of g_j0, g_j1, g_j1' over
    the n domain points lam^-i, plus leading-monomial tags.  At most 12n
    multiplications per edge.
  * CoeffKernel  ("coeffs") - coefficient pairs f_j with respect to a fixed
    root-node basis {h0, h1}, under the re-weighted order; per-edge cost
    depends only on the tree depth, not on d.

All four produce the same minimal module element (exactly for pairs /
compact / evals; up to a nonzero scalar for coeffs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gf import FieldCtx
from .grs import GrsCode, forney_values
from .groebner import (
    LEFT,
    RIGHT,
    GroebnerPairBasis,
    Monomial2,
    PolyPair,
    koetter_update,
    lm_w,
    monomial_less,
)
from .poly import MINUS_INFINITY, Poly


@dataclass(frozen=True)
class EdgeMod:
    """One error hypothesis: locator alpha, value beta, multiplier a."""

    alpha: int
    beta: int
    a: int


@dataclass
class EdgeReport:
    """Discrepancies and degree snapshots of one edge application."""

    delta_root: tuple
    jstar_root: Optional[int]
    delta_der: Optional[tuple] = None
    jstar_der: Optional[int] = None
    degrees_after_root: Optional[tuple] = None
    degrees_after_der: Optional[tuple] = None


class DegreeGuardError(RuntimeError):
    """Raised by CompactKernel in strict mode when the suppressed left
    component may exceed degree d-2, invalidating syndrome recovery."""


def _mul_nz(ctx: FieldCtx, a: int, b: int) -> int:
    """Product that elides (does not count) multiplications by zero."""
    if a == 0 or b == 0:
        return 0
    return ctx.mul(a, b)


def _pick_jstar(lm0: Monomial2, lm1: Monomial2, w: int, d0: int, d1: int) -> Optional[int]:
    if d0 == 0 and d1 == 0:
        return None
    if d0 == 0:
        return 1
    if d1 == 0:
        return 0
    return 0 if monomial_less(lm0, lm1, w) else 1


def truncated_product_eval(
    ctx: FieldCtx, S: Poly, v: Poly, beta: int, two_t: int, beta_pow: int
) -> int:
    """(S v mod X^two_t)(beta) in exactly 2 deg(v)+1 multiplications.

    Requires v(beta) = 0 and beta_pow = beta^two_t precomputed.  The partial
    Horner sums of v at beta are folded into the syndrome coefficients:
    with delta = deg(v), a_k = beta^k * (partial sum of v up to degree
    two_t-1-k) satisfies a_{k+1}/beta^two_t = beta a_k/beta^two_t -
    v_{two_t-1-k}, starting from zero at k = two_t-delta-1.
    """
    if v.is_zero():
        return 0
    delta = v.degree
    acc = 0
    total = 0
    for j in range(two_t - delta - 1, two_t - 1):
        acc = ctx.add(ctx.mul(beta, acc), ctx.neg(v[two_t - 1 - j]))
        total = ctx.add(total, ctx.mul(S[j + 1], acc))
    return ctx.mul(beta_pow, total)


# ---------------------------------------------------------------------------
# pairs kernel
# ---------------------------------------------------------------------------


@dataclass
class PairState:
    code: GrsCode
    basis: GroebnerPairBasis


class PairKernel:
    name = "pairs"

    def start(self, code: GrsCode, S: Poly, basis: GroebnerPairBasis, locators=()) -> PairState:
        return PairState(code, basis)

    def _deltas_root(self, state: PairState, ainv: int) -> tuple:
        return (state.basis.g0.v.eval(ainv), state.basis.g1.v.eval(ainv))

    def _deltas_der(self, state: PairState, edge: EdgeMod, ainv: int) -> tuple:
        ctx = state.code.ctx
        ba = ctx.mul(edge.beta, edge.a)
        out = []
        for g in (state.basis.g0, state.basis.g1):
            out.append(
                ctx.add(ctx.mul(ba, g.v.deriv().eval(ainv)), ctx.mul(edge.alpha, g.u.eval(ainv)))
            )
        return tuple(out)

    def apply_edge(self, state: PairState, edge: EdgeMod) -> tuple[PairState, EdgeReport]:
        ctx = state.code.ctx
        ainv = ctx.inv(edge.alpha)
        dr = self._deltas_root(state, ainv)
        basis, js_root = koetter_update(state.basis, dr[0], dr[1], ainv)
        mid = PairState(state.code, basis)
        report = EdgeReport(dr, js_root, degrees_after_root=self.degrees(mid))
        dd = self._deltas_der(mid, edge, ainv)
        basis, js_der = koetter_update(basis, dd[0], dd[1], ainv)
        out = PairState(state.code, basis)
        report.delta_der = dd
        report.jstar_der = js_der
        report.degrees_after_der = self.degrees(out)
        return out, report

    def apply_erasure(self, state: PairState, alpha: int) -> tuple[PairState, EdgeReport]:
        ctx = state.code.ctx
        ainv = ctx.inv(alpha)
        dr = self._deltas_root(state, ainv)
        basis, js_root = koetter_update(state.basis, dr[0], dr[1], ainv)
        out = PairState(state.code, basis)
        return out, EdgeReport(dr, js_root, degrees_after_root=self.degrees(out))

    def lm_info(self, state: PairState) -> tuple:
        return (state.basis.lm0(), state.basis.lm1())

    def elp_degree(self, state: PairState):
        return state.basis.g1.v.degree

    def elp_spectrum(self, state: PairState) -> list:
        return state.basis.g1.v.eval_domain()

    def sigma_value_and_deriv(self, state: PairState, coord: int) -> tuple:
        x = state.code.ctx.inv_powers[coord]
        return (state.basis.g1.v.eval(x), state.basis.g1.v.deriv().eval(x))

    def error_values(self, state: PairState, coords) -> Optional[list]:
        code = state.code
        locators = [code.locator_of(i) for i in coords]
        try:
            return forney_values(code, state.basis.g1.v, state.basis.g1.u, locators)
        except ZeroDivisionError:
            return None

    def degrees(self, state: PairState) -> tuple:
        b = state.basis
        return (b.g0.u.degree, b.g0.v.degree, b.g1.u.degree, b.g1.v.degree)


# ---------------------------------------------------------------------------
# compact kernel (right components + syndrome recovery)
# ---------------------------------------------------------------------------


@dataclass
class CompactState:
    code: GrsCode
    S: Poly
    g01: Poly
    g11: Poly
    d0: int  # exact degree of the suppressed g00
    beta_pows: dict
    safe: bool = True
    strict: bool = False


class CompactKernel:
    name = "compact"

    def __init__(self, strict: bool = False) -> None:
        self.strict = strict

    def start(self, code: GrsCode, S: Poly, basis: GroebnerPairBasis, locators=()) -> CompactState:
        ctx = code.ctx
        two_t = code.d - 1
        pows = {}
        for alpha in locators:
            pows[alpha] = ctx.pow(ctx.inv(alpha), two_t)
        d0 = basis.g0.u.degree
        if d0 is MINUS_INFINITY:
            raise ValueError("left component of g0 must be nonzero at the root")
        return CompactState(code, S, basis.g0.v, basis.g1.v, d0, pows, strict=self.strict)

    def _beta_pow(self, state: CompactState, alpha: int) -> int:
        pow2t = state.beta_pows.get(alpha)
        if pow2t is None:
            ctx = state.code.ctx
            pow2t = ctx.pow(ctx.inv(alpha), state.code.d - 1)
            state.beta_pows[alpha] = pow2t
        return pow2t

    def _lms(self, state: CompactState) -> tuple:
        deg1 = state.g11.degree
        return (Monomial2(LEFT, state.d0), Monomial2(RIGHT, 0 if deg1 is MINUS_INFINITY else deg1))

    def _update(self, state: CompactState, d0v: int, d1v: int, ainv: int) -> tuple:
        """Shared root/derivative right-component update; returns new state parts."""
        ctx = state.code.ctx
        lm0, lm1 = self._lms(state)
        jstar = _pick_jstar(lm0, lm1, -1, d0v, d1v)
        g = [state.g01, state.g11]
        d0 = state.d0
        if jstar is not None:
            deltas = (d0v, d1v)
            other = 1 - jstar
            if deltas[other] != 0:
                c = ctx.div(deltas[other], deltas[jstar])
                g[other] = g[other].sub(g[jstar].scale(c))
            g[jstar] = g[jstar].mul_linear(ainv)
            if jstar == 0:
                d0 += 1
        return g[0], g[1], d0, jstar

    def _recover_left_eval(self, state: CompactState, which: int, beta_hat: int, pow2t: int) -> int:
        """g_j0(alpha^-1) through u_j = S g_j1 mod X^(d-1); flags/raises when
        the exact-degree guarantee deg(g_j0) <= d-2 is unavailable."""
        two_t = state.code.d - 1
        v = state.g01 if which == 0 else state.g11
        if which == 0:
            bound = state.d0
        else:
            deg1 = state.g11.degree
            bound = (deg1 - 1) if deg1 is not MINUS_INFINITY else -1
        if bound > two_t - 1 or (not v.is_zero() and v.degree > two_t):
            if state.strict:
                raise DegreeGuardError(
                    f"suppressed component degree bound {bound} exceeds {two_t - 1}"
                )
            state.safe = False
        return truncated_product_eval(state.code.ctx, state.S, v, beta_hat, two_t, pow2t)

    def apply_edge(self, state: CompactState, edge: EdgeMod) -> tuple[CompactState, EdgeReport]:
        ctx = state.code.ctx
        ainv = ctx.inv(edge.alpha)
        pow2t = self._beta_pow(state, edge.alpha)
        # root condition
        dr = (state.g01.eval(ainv), state.g11.eval(ainv))
        g01, g11, d0, js_root = self._update(state, dr[0], dr[1], ainv)
        mid = CompactState(
            state.code, state.S, g01, g11, d0, state.beta_pows, state.safe, state.strict
        )
        report = EdgeReport(dr, js_root, degrees_after_root=self.degrees(mid))
        # derivative condition (evaluations of both right components now
        # vanish at ainv, enabling the truncated-product recursion)
        ba = ctx.mul(edge.beta, edge.a)
        dd = []
        for j, gv in enumerate((mid.g01, mid.g11)):
            left = self._recover_left_eval(mid, j, ainv, pow2t)
            dd.append(ctx.add(ctx.mul(ba, gv.deriv().eval(ainv)), ctx.mul(edge.alpha, left)))
        dd = tuple(dd)
        g01, g11, d0, js_der = self._update(mid, dd[0], dd[1], ainv)
        out = CompactState(state.code, state.S, g01, g11, d0, state.beta_pows, mid.safe, state.strict)
        report.delta_der = dd
        report.jstar_der = js_der
        report.degrees_after_der = self.degrees(out)
        return out, report

    def apply_erasure(self, state: CompactState, alpha: int) -> tuple[CompactState, EdgeReport]:
        ctx = state.code.ctx
        ainv = ctx.inv(alpha)
        dr = (state.g01.eval(ainv), state.g11.eval(ainv))
        g01, g11, d0, js_root = self._update(state, dr[0], dr[1], ainv)
        out = CompactState(
            state.code, state.S, g01, g11, d0, state.beta_pows, state.safe, state.strict
        )
        return out, EdgeReport(dr, js_root, degrees_after_root=self.degrees(out))

    def lm_info(self, state: CompactState) -> tuple:
        return self._lms(state)

    def elp_degree(self, state: CompactState):
        return state.g11.degree

    def elp_spectrum(self, state: CompactState) -> list:
        return state.g11.eval_domain()

    def sigma_value_and_deriv(self, state: CompactState, coord: int) -> tuple:
        x = state.code.ctx.inv_powers[coord]
        return (state.g11.eval(x), state.g11.deriv().eval(x))

    def _left_poly(self, state: CompactState) -> Poly:
        """u_1 = S g11 mod X^(d-1); exact whenever deg(g10) <= d-2."""
        return state.S.mul(state.g11).truncate(state.code.d - 1)

    def error_values(self, state: CompactState, coords) -> Optional[list]:
        code = state.code
        locators = [code.locator_of(i) for i in coords]
        try:
            return forney_values(code, state.g11, self._left_poly(state), locators)
        except ZeroDivisionError:
            return None

    def degrees(self, state: CompactState) -> tuple:
        return (state.d0, state.g01.degree, None, state.g11.degree)


# ---------------------------------------------------------------------------
# evaluation-vector kernel
# ---------------------------------------------------------------------------


def _vec_sub_scaled(ctx: FieldCtx, x: list, c: int, y: list) -> list:
    """x - c*y elementwise; multiplications by zero entries are elided."""
    out = list(x)
    for i, yi in enumerate(y):
        if yi:
            out[i] = ctx.add(out[i], ctx.neg(ctx.mul(c, yi)))
    return out


def _vec_mul_factor(ctx: FieldCtx, factor: list, v: list) -> list:
    out = [0] * len(v)
    for i, vi in enumerate(v):
        fi = factor[i]
        if fi and vi:
            out[i] = ctx.mul(fi, vi)
    return out


def _vec_mul_factor_add(ctx: FieldCtx, factor: list, v2: list, v1: list) -> list:
    out = []
    for fi, a, b in zip(factor, v2, v1):
        if fi and a:
            out.append(ctx.add(ctx.mul(fi, a), b))
        else:
            out.append(b)
    return out


@dataclass
class EvalState:
    code: GrsCode
    # per basis element j: evaluations of g_j0, g_j1, g_j1' at lam^-i
    v: list  # [[v00, v01, v02], [v10, v11, v12]]
    lm: list  # [Monomial2, Monomial2]


class EvalKernel:
    name = "evals"

    def start(self, code: GrsCode, S: Poly, basis: GroebnerPairBasis, locators=()) -> EvalState:
        vecs = []
        for g in (basis.g0, basis.g1):
            vecs.append([g.u.eval_domain(), g.v.eval_domain(), g.v.deriv().eval_domain()])
        return EvalState(code, vecs, [basis.lm0(), basis.lm1()])

    def _iteration(self, state: EvalState, d0v: int, d1v: int, beta_hat: int) -> EvalState:
        ctx = state.code.ctx
        jstar = _pick_jstar(state.lm[0], state.lm[1], -1, d0v, d1v)
        if jstar is None:
            return EvalState(state.code, [list(state.v[0]), list(state.v[1])], list(state.lm))
        new_v = [list(state.v[0]), list(state.v[1])]
        deltas = (d0v, d1v)
        other = 1 - jstar
        if deltas[other] != 0:
            c = ctx.div(deltas[other], deltas[jstar])
            for k in range(3):
                new_v[other][k] = _vec_sub_scaled(ctx, state.v[other][k], c, state.v[jstar][k])
        factor = [ctx.add(p, ctx.neg(beta_hat)) for p in ctx.inv_powers]
        new_v[jstar][2] = _vec_mul_factor_add(ctx, factor, state.v[jstar][2], state.v[jstar][1])
        new_v[jstar][0] = _vec_mul_factor(ctx, factor, state.v[jstar][0])
        new_v[jstar][1] = _vec_mul_factor(ctx, factor, state.v[jstar][1])
        new_lm = list(state.lm)
        new_lm[jstar] = Monomial2(state.lm[jstar].side, state.lm[jstar].degree + 1)
        return EvalState(state.code, new_v, new_lm)

    def apply_edge(self, state: EvalState, edge: EdgeMod) -> tuple[EvalState, EdgeReport]:
        ctx = state.code.ctx
        coord = state.code.coord_of(edge.alpha)
        beta_hat = ctx.inv(edge.alpha)
        dr = (state.v[0][1][coord], state.v[1][1][coord])
        mid = self._iteration(state, dr[0], dr[1], beta_hat)
        report = EdgeReport(dr, _pick_jstar(state.lm[0], state.lm[1], -1, dr[0], dr[1]))
        ba = ctx.mul(edge.beta, edge.a)
        dd = tuple(
            ctx.add(ctx.mul(ba, mid.v[j][2][coord]), ctx.mul(edge.alpha, mid.v[j][0][coord]))
            for j in (0, 1)
        )
        out = self._iteration(mid, dd[0], dd[1], beta_hat)
        report.delta_der = dd
        report.jstar_der = _pick_jstar(mid.lm[0], mid.lm[1], -1, dd[0], dd[1])
        return out, report

    def apply_erasure(self, state: EvalState, alpha: int) -> tuple[EvalState, EdgeReport]:
        ctx = state.code.ctx
        coord = state.code.coord_of(alpha)
        dr = (state.v[0][1][coord], state.v[1][1][coord])
        out = self._iteration(state, dr[0], dr[1], ctx.inv(alpha))
        return out, EdgeReport(dr, _pick_jstar(state.lm[0], state.lm[1], -1, dr[0], dr[1]))

    def lm_info(self, state: EvalState) -> tuple:
        return tuple(state.lm)

    def elp_degree(self, state: EvalState):
        return state.lm[1].degree

    def elp_spectrum(self, state: EvalState) -> list:
        return state.v[1][1]

    def sigma_value_and_deriv(self, state: EvalState, coord: int) -> tuple:
        return (state.v[1][1][coord], state.v[1][2][coord])

    def error_values(self, state: EvalState, coords) -> Optional[list]:
        code = state.code
        ctx = code.ctx
        out = []
        for i in coords:
            denom = ctx.mul(code.multipliers[i], state.v[1][2][i])
            if denom == 0:
                return None
            num = ctx.neg(ctx.mul(code.locator_of(i), state.v[1][0][i]))
            out.append(ctx.div(num, denom))
        return out

    def degrees(self, state: EvalState) -> tuple:
        return (state.lm[0].degree, None, None, state.lm[1].degree)


# ---------------------------------------------------------------------------
# coefficient kernel (fixed root-node anchor basis)
# ---------------------------------------------------------------------------


@dataclass
class CoeffAnchor:
    h0: PolyPair
    h1: PolyPair
    # domain evaluations at lam^-i of the anchor components and the
    # derivatives of the right components
    b0: list
    b1: list
    e00: list
    e10: list
    db0: list
    db1: list


@dataclass
class CoeffState:
    code: GrsCode
    anchor: CoeffAnchor
    f0: PolyPair
    f1: PolyPair
    w: int


class CoeffKernel:
    """Coefficient-domain kernel.

    With footnote_scaling=True the j != j* update is computed as
    (delta_j*/delta_j) f_j - f_j* (scaling the element being reduced instead
    of the pivot), which scales basis elements by nonzero constants but
    keeps every per-edge multiplication count bounded by a function of the
    depth alone.  All outputs of this kernel are used up to scalar only.
    """

    name = "coeffs"

    def __init__(self, footnote_scaling: bool = False) -> None:
        self.footnote_scaling = footnote_scaling

    def start(self, code: GrsCode, S: Poly, basis: GroebnerPairBasis, locators=()) -> CoeffState:
        ctx = code.ctx
        h0, h1 = basis.g0, basis.g1
        anchor = CoeffAnchor(
            h0,
            h1,
            h0.v.eval_domain(),
            h1.v.eval_domain(),
            h0.u.eval_domain(),
            h1.u.eval_domain(),
            h0.v.deriv().eval_domain(),
            h1.v.deriv().eval_domain(),
        )
        d00 = h0.u.degree
        d11 = h1.v.degree
        w = d11 - d00 - 1
        f0 = PolyPair(Poly.one(ctx), Poly.zero(ctx))
        f1 = PolyPair(Poly.zero(ctx), Poly.one(ctx))
        return CoeffState(code, anchor, f0, f1, w)

    def _update(self, state: CoeffState, d0v: int, d1v: int, ainv: int) -> tuple:
        ctx = state.code.ctx
        lm0 = lm_w(state.f0, state.w)
        lm1 = lm_w(state.f1, state.w)
        jstar = _pick_jstar(lm0, lm1, state.w, d0v, d1v)
        f = [state.f0, state.f1]
        if jstar is not None:
            deltas = (d0v, d1v)
            other = 1 - jstar
            if deltas[other] != 0:
                if self.footnote_scaling:
                    c = ctx.div(deltas[jstar], deltas[other])
                    f[other] = f[other].scale(c).sub(f[jstar])
                else:
                    f[other] = f[other].sub_scaled(
                        ctx.div(deltas[other], deltas[jstar]), f[jstar]
                    )
            f[jstar] = f[jstar].mul_linear(ainv)
        return f[0], f[1], jstar

    def apply_edge(self, state: CoeffState, edge: EdgeMod) -> tuple[CoeffState, EdgeReport]:
        ctx = state.code.ctx
        coord = state.code.coord_of(edge.alpha)
        ainv = ctx.inv(edge.alpha)
        an = state.anchor
        b0r, b1r = an.b0[coord], an.b1[coord]
        dr = tuple(
            ctx.add(_mul_nz(ctx, b0r, f.u.eval(ainv)), _mul_nz(ctx, b1r, f.v.eval(ainv)))
            for f in (state.f0, state.f1)
        )
        f0, f1, js_root = self._update(state, dr[0], dr[1], ainv)
        mid = CoeffState(state.code, an, f0, f1, state.w)
        report = EdgeReport(dr, js_root, degrees_after_root=self.degrees(mid))
        ratio = ctx.div(edge.alpha, ctx.mul(edge.beta, edge.a))
        c0 = ctx.add(an.db0[coord], _mul_nz(ctx, ratio, an.e00[coord]))
        c1 = ctx.add(an.db1[coord], _mul_nz(ctx, ratio, an.e10[coord]))
        dd = []
        for f in (mid.f0, mid.f1):
            acc = ctx.add(_mul_nz(ctx, b0r, f.u.deriv().eval(ainv)), _mul_nz(ctx, c0, f.u.eval(ainv)))
            acc = ctx.add(acc, _mul_nz(ctx, b1r, f.v.deriv().eval(ainv)))
            acc = ctx.add(acc, _mul_nz(ctx, c1, f.v.eval(ainv)))
            dd.append(acc)
        dd = tuple(dd)
        f0, f1, js_der = self._update(mid, dd[0], dd[1], ainv)
        out = CoeffState(state.code, an, f0, f1, state.w)
        report.delta_der = dd
        report.jstar_der = js_der
        report.degrees_after_der = self.degrees(out)
        return out, report

    def apply_erasure(self, state: CoeffState, alpha: int) -> tuple[CoeffState, EdgeReport]:
        ctx = state.code.ctx
        coord = state.code.coord_of(alpha)
        ainv = ctx.inv(alpha)
        an = state.anchor
        dr = tuple(
            ctx.add(
                _mul_nz(ctx, an.b0[coord], f.u.eval(ainv)),
                _mul_nz(ctx, an.b1[coord], f.v.eval(ainv)),
            )
            for f in (state.f0, state.f1)
        )
        f0, f1, js_root = self._update(state, dr[0], dr[1], ainv)
        out = CoeffState(state.code, an, f0, f1, state.w)
        return out, EdgeReport(dr, js_root, degrees_after_root=self.degrees(out))

    # -- reconstruction --------------------------------------------------

    def sigma_poly(self, state: CoeffState) -> Poly:
        an = state.anchor
        return state.f1.u.mul(an.h0.v).add(state.f1.v.mul(an.h1.v))

    def omega_poly(self, state: CoeffState) -> Poly:
        an = state.anchor
        return state.f1.u.mul(an.h0.u).add(state.f1.v.mul(an.h1.u))

    def lm_info(self, state: CoeffState) -> tuple:
        # leading monomials of the reconstructed module elements: coefficient
        # degrees shifted by the anchor degrees (exact under the side
        # convention, no leading cancellation is possible)
        d00 = state.anchor.h0.u.degree
        d11 = state.anchor.h1.v.degree
        lm0 = lm_w(state.f0, state.w)
        lm1 = lm_w(state.f1, state.w)
        return (
            Monomial2(lm0.side, lm0.degree + (d00 if lm0.side == LEFT else d11)),
            Monomial2(lm1.side, lm1.degree + (d00 if lm1.side == LEFT else d11)),
        )

    def elp_degree(self, state: CoeffState):
        lm1 = lm_w(state.f1, state.w)
        if lm1.side != RIGHT:
            return MINUS_INFINITY
        return lm1.degree + state.anchor.h1.v.degree

    def elp_spectrum(self, state: CoeffState) -> list:
        ctx = state.code.ctx
        an = state.anchor
        out = []
        for i, x in enumerate(ctx.inv_powers):
            out.append(
                ctx.add(
                    ctx.mul(state.f1.u.eval(x), an.b0[i]),
                    ctx.mul(state.f1.v.eval(x), an.b1[i]),
                )
            )
        return out

    def sigma_value_and_deriv(self, state: CoeffState, coord: int) -> tuple:
        x = state.code.ctx.inv_powers[coord]
        sigma = self.sigma_poly(state)
        return (sigma.eval(x), sigma.deriv().eval(x))

    def error_values(self, state: CoeffState, coords) -> Optional[list]:
        code = state.code
        locators = [code.locator_of(i) for i in coords]
        try:
            return forney_values(code, self.sigma_poly(state), self.omega_poly(state), locators)
        except ZeroDivisionError:
            return None

    def degrees(self, state: CoeffState) -> tuple:
        return (
            state.f0.u.degree,
            state.f0.v.degree,
            state.f1.u.degree,
            state.f1.v.degree,
        )


KERNELS = {
    "pairs": PairKernel(),
    "compact": CompactKernel(),
    "evals": EvalKernel(),
    "coeffs": CoeffKernel(),
}

KERNEL_ALIASES = {
    "a": "pairs",
    "a2": "compact",
    "b": "evals",
    "c": "coeffs",
}


def get_kernel(name: str):
    key = name.lower()
    key = KERNEL_ALIASES.get(key, key)
    if key not in KERNELS:
        raise KeyError(f"unknown kernel {name!r}; choose from {sorted(KERNELS)} or A/A2/B/C")
    return KERNELS[key]
