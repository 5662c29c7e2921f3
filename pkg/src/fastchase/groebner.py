"""Groebner bases of F_q[X]-submodules of F_q[X]^2 under the two-sided
degree orderings, and the discrepancy-driven basis update step.

Monomials of F_q[X]^2 are (side, degree) with side LEFT (first component)
or RIGHT (second component).  For a fixed integer weight w, the order <_w
compares same-side monomials by degree and across sides by

    (X^j1, 0) <_w (0, X^j2)  iff  j1 <= j2 + w.

A module basis {g0, g1} is a Groebner basis for <_w exactly when the two
leading monomials lie on different sides; the convention maintained
throughout is lm(g0) on the LEFT and lm(g1) on the RIGHT.

The update step: given a basis of a module M and a linear functional D
with D(X g) = c D(g) on M for a scalar c, a basis of M' = M \\cap ker D is

    j* = argmin_{j : D(g_j) != 0} lm(g_j)
    g_j   <- g_j - (D(g_j)/D(g_j*)) g_j*   for j != j*, D(g_j) != 0
    g_j*  <- (X - c) g_j*

which leaves leading monomials of the j != j* elements unchanged and moves
lm(g_j*) up by one degree on its own side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .grs import GrsCode
from .poly import MINUS_INFINITY, Poly

LEFT = 0
RIGHT = 1


class Monomial2(NamedTuple):
    side: int
    degree: int


def monomial_less(m1: Monomial2, m2: Monomial2, w: int) -> bool:
    """Strict order m1 <_w m2."""
    if m1.side == m2.side:
        return m1.degree < m2.degree
    if m1.side == LEFT:
        return m1.degree <= m2.degree + w
    return not (m2.degree <= m1.degree + w)


def compare_w(m1: Monomial2, m2: Monomial2, w: int) -> int:
    if m1 == m2:
        return 0
    return -1 if monomial_less(m1, m2, w) else 1


@dataclass(frozen=True)
class PolyPair:
    """An element (u, v) of F_q[X]^2."""

    u: Poly
    v: Poly

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def sub(self, other: "PolyPair") -> "PolyPair":
        return PolyPair(self.u.sub(other.u), self.v.sub(other.v))

    def sub_scaled(self, c: int, other: "PolyPair") -> "PolyPair":
        """self - c * other."""
        return PolyPair(self.u.sub(other.u.scale(c)), self.v.sub(other.v.scale(c)))

    def scale(self, c: int) -> "PolyPair":
        return PolyPair(self.u.scale(c), self.v.scale(c))

    def mul_linear(self, root: int) -> "PolyPair":
        return PolyPair(self.u.mul_linear(root), self.v.mul_linear(root))

    def shift(self) -> "PolyPair":
        return PolyPair(self.u.shift(), self.v.shift())


def lm_w(pair: PolyPair, w: int) -> Monomial2:
    """Leading monomial of a nonzero pair under <_w."""
    if pair.is_zero():
        raise ValueError("zero pair has no leading monomial")
    if pair.u.is_zero():
        return Monomial2(RIGHT, pair.v.degree)
    if pair.v.is_zero():
        return Monomial2(LEFT, pair.u.degree)
    left = Monomial2(LEFT, pair.u.degree)
    right = Monomial2(RIGHT, pair.v.degree)
    return right if monomial_less(left, right, w) else left


@dataclass
class GroebnerPairBasis:
    """Module basis {g0, g1} with lm(g0) LEFT and lm(g1) RIGHT under <_w."""

    g0: PolyPair
    g1: PolyPair
    w: int

    def lm0(self) -> Monomial2:
        return lm_w(self.g0, self.w)

    def lm1(self) -> Monomial2:
        return lm_w(self.g1, self.w)

    def check_sides(self) -> None:
        if self.lm0().side != LEFT or self.lm1().side != RIGHT:
            raise AssertionError("basis side convention violated")

    def minimal(self) -> PolyPair:
        return self.g1 if monomial_less(self.lm1(), self.lm0(), self.w) else self.g0


def select_update_index(basis: GroebnerPairBasis, delta0: int, delta1: int) -> int | None:
    """Index of the minimal-leading-monomial element among nonzero discrepancies.

    Returns None when both discrepancies vanish (the basis already lies in
    the kernel).  Leading monomials of the two elements are on different
    sides, so the minimum is unique.
    """
    if delta0 == 0 and delta1 == 0:
        return None
    if delta0 == 0:
        return 1
    if delta1 == 0:
        return 0
    return 0 if monomial_less(basis.lm0(), basis.lm1(), basis.w) else 1


def koetter_update(
    basis: GroebnerPairBasis, delta0: int, delta1: int, shift: int
) -> tuple[GroebnerPairBasis, int | None]:
    """One basis update with precomputed discrepancies.

    shift is D(X g_j*)/D(g_j*), the scalar c above; for the decoding
    functionals it equals alpha^-1 independently of j*.
    """
    jstar = select_update_index(basis, delta0, delta1)
    if jstar is None:
        return basis, None
    ctx = basis.g0.u.ctx if not basis.g0.u.is_zero() else basis.g0.v.ctx
    g = [basis.g0, basis.g1]
    deltas = (delta0, delta1)
    other = 1 - jstar
    if deltas[other] != 0:
        g[other] = g[other].sub_scaled(ctx.div(deltas[other], deltas[jstar]), g[jstar])
    g[jstar] = g[jstar].mul_linear(shift)
    return GroebnerPairBasis(g[0], g[1], basis.w), jstar


def koetter_step(
    basis: GroebnerPairBasis, D: Callable[[PolyPair], int]
) -> GroebnerPairBasis:
    """Generic update for a black-box functional with D(X g) proportional
    to a scalar multiple of D(g) on the module."""
    delta0 = D(basis.g0)
    delta1 = D(basis.g1)
    jstar = select_update_index(basis, delta0, delta1)
    if jstar is None:
        return basis
    gstar = basis.g1 if jstar else basis.g0
    dstar = delta1 if jstar else delta0
    ctx = gstar.u.ctx if not gstar.u.is_zero() else gstar.v.ctx
    shift = ctx.div(D(gstar.shift()), dstar)
    new_basis, _ = koetter_update(basis, delta0, delta1, shift)
    return new_basis


def solve_key_equation(code: GrsCode, S: Poly) -> GroebnerPairBasis:
    """Groebner basis (under <_-1) of the key-equation solution module

        M_0 = { (u, v) : u == S v mod X^(d-1) }.

    Built from the free basis {(1,0), (0,1)} by imposing the d-1 coefficient
    functionals D_j(u, v) = coeff_j(u - S v) for j = 0..d-2.  The sum of the
    two leading-monomial degrees of the result is exactly d-1.
    """
    ctx = code.ctx
    basis = GroebnerPairBasis(
        PolyPair(Poly.one(ctx), Poly.zero(ctx)),
        PolyPair(Poly.zero(ctx), Poly.one(ctx)),
        w=-1,
    )

    def coeff_functional(j: int) -> Callable[[PolyPair], int]:
        def D(pair: PolyPair) -> int:
            acc = pair.u[j]
            for k in range(j + 1):
                sk = S[k]
                vk = pair.v[j - k]
                if sk and vk:
                    acc = ctx.add(acc, ctx.neg(ctx.mul(sk, vk)))
            return acc

        return D

    for j in range(code.d - 1):
        basis = koetter_step(basis, coeff_functional(j))
    basis.check_sides()
    return basis
