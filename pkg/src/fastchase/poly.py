"""Dense univariate polynomials over a FieldCtx.

Coefficients are stored low-to-high with trailing zeros trimmed.  The zero
polynomial has degree MINUS_INFINITY, an explicit sentinel that compares
below every int and absorbs addition.
"""

from __future__ import annotations

from .gf import FieldCtx


class _MinusInfinity:
    """Degree of the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return self is not other

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return self is other

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        return self

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()) -> None:
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx: FieldCtx, deg: int, coeff: int = 1) -> "Poly":
        return cls(ctx, (0,) * deg + (coeff,))

    # -- structure ------------------------------------------------------

    @property
    def degree(self):
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def leading_coeff(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    # -- arithmetic -----------------------------------------------------

    def add(self, other: "Poly") -> "Poly":
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly(ctx, out)

    def sub(self, other: "Poly") -> "Poly":
        ctx = self.ctx
        neg = Poly(ctx, [ctx.neg(c) for c in other.coeffs])
        return self.add(neg)

    def scale(self, c: int) -> "Poly":
        """c * p, with exactly deg(p)+1 multiplications for nonzero p."""
        ctx = self.ctx
        return Poly(ctx, [ctx.mul(c, a) for a in self.coeffs])

    def mul(self, other: "Poly") -> "Poly":
        """Schoolbook product; used off the per-edge fast paths."""
        ctx = self.ctx
        if self.is_zero() or other.is_zero():
            return Poly.zero(ctx)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return Poly(ctx, out)

    def mul_linear(self, root: int) -> "Poly":
        """(X - root) * p, with exactly deg(p)+1 multiplications."""
        ctx = self.ctx
        if self.is_zero():
            return self
        nroot = ctx.neg(root)
        out = [0] * (len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            out[i] = ctx.add(out[i], ctx.mul(nroot, c))
            out[i + 1] = c
        return Poly(ctx, out)

    def shift(self, k: int = 1) -> "Poly":
        """X^k * p (no multiplications)."""
        if self.is_zero():
            return self
        return Poly(self.ctx, (0,) * k + self.coeffs)

    def truncate(self, k: int) -> "Poly":
        """p mod X^k."""
        return Poly(self.ctx, self.coeffs[:k])

    def deriv(self) -> "Poly":
        """Formal derivative (characteristic-aware; no multiplications)."""
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] if i % ctx.char else 0)
        return Poly(ctx, out)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        ctx = self.ctx
        return Poly(ctx, [ctx.div(c, lc) for c in self.coeffs])

    # -- evaluation -----------------------------------------------------

    def eval(self, x: int) -> int:
        """Horner evaluation: exactly deg(p) multiplications for nonzero p."""
        if not self.coeffs:
            return 0
        ctx = self.ctx
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def eval_domain(self) -> list[int]:
        """Evaluations over the standard point list: entry i is p(lam^-i).

        This indexing matches the coordinate convention of the codec:
        coordinate i has locator lam^i, and the locator inverse lam^-i is
        the point a locator polynomial vanishes at.
        """
        return [self.eval(x) for x in self.ctx.inv_powers]
