"""Generalized Reed-Solomon codes of length q-1 with syndrome machinery.

Coordinate convention (the single place it is defined):

  * Coordinate i (0 <= i < n, n = q-1) has locator alpha = lam^i, where
    lam is the field generator of the FieldCtx.
  * A locator polynomial sigma = prod_j (1 - alpha_j X) therefore vanishes
    at the locator inverses alpha_j^-1 = lam^-i_j.
  * Evaluation vectors over the domain are indexed so that entry i holds
    the value at lam^-i (see Poly.eval_domain); a zero at entry i of a
    locator-polynomial spectrum means coordinate i is a located error.

The code with multiplier vector a~ (all entries nonzero) and odd design
distance d is

    C = { f in F_q^n : (a~ . f)(lam^j) = 0 for j = 0..d-2 },

where (a~ . f)(X) = sum_i a~_i f_i X^i.  The syndrome of a received word y
is S_j = (a~ . y)(lam^j), j = 0..d-2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldCtx
from .poly import Poly


@dataclass(frozen=True)
class GrsCode:
    ctx: FieldCtx
    d: int
    multipliers: tuple

    def __post_init__(self):
        n = self.ctx.q - 1
        if self.d % 2 == 0:
            raise ValueError("design distance d must be odd")
        if not 3 <= self.d <= n:
            raise ValueError(f"d must be in [3, {n}], got {self.d}")
        if len(self.multipliers) != n:
            raise ValueError(f"need {n} multipliers, got {len(self.multipliers)}")
        if any(a == 0 or not 0 < a < self.ctx.q for a in self.multipliers):
            raise ValueError("multipliers must be nonzero field elements")

    @property
    def n(self) -> int:
        return self.ctx.q - 1

    @property
    def k(self) -> int:
        return self.n - self.d + 1

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    def locator_of(self, i: int) -> int:
        return self.ctx.powers[i % self.n]

    def coord_of(self, alpha: int) -> int:
        return self.ctx.log[alpha]

    def multiplier_at(self, i: int) -> int:
        return self.multipliers[i]


def unit_multipliers(ctx: FieldCtx) -> tuple:
    return (1,) * (ctx.q - 1)


@dataclass(frozen=True)
class ErrorEstimate:
    """An error hypothesis: distinct locators with nonzero values."""

    locators: tuple
    values: tuple

    def __post_init__(self):
        if len(self.locators) != len(self.values):
            raise ValueError("locators/values length mismatch")
        if len(set(self.locators)) != len(self.locators):
            raise ValueError("locators must be distinct")
        if any(v == 0 for v in self.values):
            raise ValueError("error values must be nonzero")

    def weight(self) -> int:
        return len(self.locators)

    def vector(self, code: GrsCode) -> tuple:
        out = [0] * code.n
        for alpha, beta in zip(self.locators, self.values):
            out[code.coord_of(alpha)] = beta
        return tuple(out)


def generator_poly(code: GrsCode) -> Poly:
    """prod_{j=0}^{d-2} (X - lam^j)."""
    ctx = code.ctx
    g = Poly.one(ctx)
    for j in range(code.d - 1):
        g = g.mul_linear(ctx.powers[j])
    return g


def encode(code: GrsCode, message) -> list[int]:
    """Systematic-free evaluation-style encoder.

    The vector g with g(X) = message(X) * generator_poly(X) vanishes at
    lam^0..lam^(d-2); dividing coordinatewise by the multipliers lands in C.
    """
    if len(message) != code.k:
        raise ValueError(f"message length must be {code.k}, got {len(message)}")
    ctx = code.ctx
    g = Poly(ctx, message).mul(generator_poly(code))
    return [ctx.div(g[i], code.multipliers[i]) for i in range(code.n)]


def syndrome(code: GrsCode, y) -> Poly:
    """S(X) = sum_j S_j X^j with S_j = (a~ . y)(lam^j), j = 0..d-2."""
    if len(y) != code.n:
        raise ValueError(f"received word length must be {code.n}")
    ctx = code.ctx
    weighted = Poly(ctx, [ctx.mul(a, c) for a, c in zip(code.multipliers, y)])
    return Poly(ctx, [weighted.eval(ctx.powers[j]) for j in range(code.d - 1)])


def is_codeword(code: GrsCode, y) -> bool:
    return syndrome(code, y).is_zero()


def elp_eep_of(code: GrsCode, error: ErrorEstimate) -> tuple[Poly, Poly]:
    """Error-locator and error-evaluator pair (sigma, omega) of an estimate.

    sigma = prod_j (1 - alpha_j X)
    omega = sum_j beta_j a_j prod_{l != j} (1 - alpha_l X)

    so that omega == S sigma mod X^(d-1) for the estimate's syndrome.
    """
    ctx = code.ctx
    factors = []
    for alpha in error.locators:
        factors.append(Poly(ctx, (1, ctx.neg(alpha))))
    sigma = Poly.one(ctx)
    for f in factors:
        sigma = sigma.mul(f)
    omega = Poly.zero(ctx)
    for j, (alpha, beta) in enumerate(zip(error.locators, error.values)):
        term = Poly(ctx, (ctx.mul(beta, code.multipliers[code.coord_of(alpha)]),))
        for l, f in enumerate(factors):
            if l != j:
                term = term.mul(f)
        omega = omega.add(term)
    return sigma, omega


def forney_values(code: GrsCode, sigma: Poly, omega: Poly, locators) -> list[int]:
    """Error values from beta_j a_j sigma'(alpha_j^-1) = -alpha_j omega(alpha_j^-1).

    Scale-invariant in (sigma, omega): any common nonzero scalar cancels.
    """
    ctx = code.ctx
    dsigma = sigma.deriv()
    values = []
    for alpha in locators:
        ainv = ctx.inv(alpha)
        denom = ctx.mul(code.multipliers[code.coord_of(alpha)], dsigma.eval(ainv))
        if denom == 0:
            raise ZeroDivisionError("sigma' vanishes at a claimed error locator")
        num = ctx.neg(ctx.mul(alpha, omega.eval(ainv)))
        values.append(ctx.div(num, denom))
    return values


def syndrome_consistent(code: GrsCode, S: Poly, estimate: ErrorEstimate) -> bool:
    """True iff the estimate's error vector reproduces the syndrome S."""
    return syndrome(code, estimate.vector(code)) == S


def hamming_distance(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)
