"""Binary extension fields GF(2^m) with table-based arithmetic and operation counting.

Field elements are plain Python ints in [0, 2^m), holding the coefficient
bitmask of the residue class.  All arithmetic goes through a FieldCtx, which
owns the exp/log/inverse tables and an OpCounter.

Default field-defining polynomials (primitive) for 3 <= m <= 16:

    m=3 : x^3 + x + 1
    m=4 : x^4 + x + 1
    m=5 : x^5 + x^2 + 1
    m=6 : x^6 + x + 1
    m=7 : x^7 + x^3 + 1
    m=8 : x^8 + x^4 + x^3 + x^2 + 1
    m=9 : x^9 + x^4 + 1
    m=10: x^10 + x^3 + 1
    m=11: x^11 + x^2 + 1
    m=12: x^12 + x^6 + x^4 + x + 1
    m=13: x^13 + x^4 + x^3 + x + 1
    m=14: x^14 + x^10 + x^6 + x + 1
    m=15: x^15 + x + 1
    m=16: x^16 + x^12 + x^3 + x + 1
"""

from __future__ import annotations


DEFAULT_POLYS = {
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class OpCounter:
    """Tally of field multiplications/divisions and additions.

    Counting contract: every call to FieldCtx.mul or FieldCtx.div adds 1 to
    mults, regardless of operand values; every call to add/sub adds 1 to
    adds.  Inverse-table lookups are free (div is one multiplication by a
    tabulated inverse).  Callers that want to skip a multiplication by a
    known zero must avoid the call itself.
    """

    __slots__ = ("mults", "adds")

    def __init__(self) -> None:
        self.mults = 0
        self.adds = 0

    def reset(self) -> None:
        self.mults = 0
        self.adds = 0

    def snapshot(self) -> tuple[int, int]:
        return (self.mults, self.adds)

    def __repr__(self) -> str:
        return f"OpCounter(mults={self.mults}, adds={self.adds})"


def _gf2_poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _gf2_poly_mod(a: int, b: int) -> int:
    """Remainder of GF(2)[x] division of a by b."""
    db = _gf2_poly_deg(b)
    while _gf2_poly_deg(a) >= db:
        a ^= b << (_gf2_poly_deg(a) - db)
    return a


def _gf2_poly_irreducible(p: int) -> bool:
    """Trial division by every GF(2) polynomial of degree 1..deg(p)//2."""
    deg = _gf2_poly_deg(p)
    for d in range(1, deg // 2 + 1):
        for low in range(1 << d):
            q = (1 << d) | low
            if _gf2_poly_mod(p, q) == 0:
                return False
    return True


class FieldCtx:
    """GF(2^m) context: tables, arithmetic, and the attached OpCounter.

    lam is the generator the log/exp tables are built on.  It is the class
    of x (the value 2) whenever that class is primitive, which holds for
    every DEFAULT_POLYS entry; otherwise a primitive element is searched
    for and recorded.
    """

    def __init__(self, m: int, prim_poly: int | None = None) -> None:
        if not 3 <= m <= 16:
            raise ValueError(f"m must be in [3, 16], got {m}")
        if prim_poly is None:
            prim_poly = DEFAULT_POLYS[m]
        if _gf2_poly_deg(prim_poly) != m:
            raise ValueError(f"prim_poly must have degree {m}")
        if not _gf2_poly_irreducible(prim_poly):
            raise ValueError(f"prim_poly {prim_poly:#b} is reducible")
        self.m = m
        self.q = 1 << m
        self.prim_poly = prim_poly
        self.char = 2
        self.counter = OpCounter()
        self.lam = self._find_generator()
        self._build_tables(self.lam)
        # domain point lists used by evaluation helpers: powers[i] = lam^i,
        # inv_powers[i] = lam^-i, both of length q-1.
        self.powers = self.exp[: self.q - 1]
        self.inv_powers = [self.exp[(self.q - 1 - i) % (self.q - 1)] for i in range(self.q - 1)]

    # -- table construction -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Carry-less multiply mod prim_poly, used only to build tables."""
        res = 0
        while b:
            if b & 1:
                res ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.prim_poly
        return res

    def _order_is_full(self, g: int) -> bool:
        seen = 1
        acc = g
        while acc != 1:
            acc = self._raw_mul(acc, g)
            seen += 1
            if seen > self.q - 1:
                return False
        return seen == self.q - 1

    def _find_generator(self) -> int:
        if self._order_is_full(2):
            return 2
        for g in range(3, self.q):
            if self._order_is_full(g):
                return g
        raise ValueError("no primitive element found (prim_poly not a field polynomial?)")

    def _build_tables(self, g: int) -> None:
        self.exp = [0] * (self.q - 1)
        self.log = [0] * self.q
        acc = 1
        for i in range(self.q - 1):
            self.exp[i] = acc
            self.log[acc] = i
            acc = self._raw_mul(acc, g)
        self.inv_table = [0] * self.q
        for a in range(1, self.q):
            self.inv_table[a] = self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.counter.adds += 1
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        self.counter.adds += 1
        return a ^ b

    def neg(self, a: int) -> int:
        # characteristic 2: every element is its own negative
        return a

    def mul(self, a: int, b: int) -> int:
        self.counter.mults += 1
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        self.counter.mults += 1
        if b == 0:
            raise ZeroDivisionError("division by field zero")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of field zero")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; each squaring/multiply goes through mul."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        result = 1
        started = False
        for bit in bin(e)[2:]:
            if started:
                result = self.mul(result, result)
            if bit == "1":
                if started:
                    result = self.mul(result, a)
                else:
                    result = a
                    started = True
        return result

    # -- iteration helpers --------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, prim_poly={self.prim_poly:#b}, lam={self.lam})"
