"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is stored in the power basis 1, z, ..., z^(phi(m)-1) of Q(zeta_m),
reduced modulo the m-th cyclotomic polynomial, with integer numerators over
one positive common denominator.  The representation is canonical for a
fixed order, so equality is coefficient equality after lifting both sides
to a common order.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

MAX_ORDER = 360


class CyclotomicError(ValueError):
    pass


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise CyclotomicError("order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j is the canonical coordinate vector of zeta_m^j, 0 <= j < m."""
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    rows = []
    cur = [1] + [0] * (n - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def _reduce(prod: list[int], m: int) -> list[int]:
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            base = k - n
            for i in range(n):
                if phi[i]:
                    prod[base + i] -= c * phi[i]
    return prod[:n] + [0] * max(0, n - len(prod))


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-x for x in num], -den
    g = den
    for x in num:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def _check_order(m: int) -> None:
    if m < 1:
        raise CyclotomicError("order must be positive")
    if m > MAX_ORDER:
        raise CyclotomicError(f"cyclotomic order {m} exceeds cap {MAX_ORDER}")


class CyclotomicNumber:
    """An element of Q(zeta_m) with exact rational coordinates."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, num, den: int = 1):
        _check_order(order)
        num = list(num)
        n = totient(order)
        if len(num) != n:
            raise CyclotomicError(f"expected {n} coordinates for order {order}")
        self.order = order
        self._num, self._den = _normalize(num, den)
        self._hash = None

    # construction --------------------------------------------------------
    @classmethod
    def from_rational(cls, q, order: int = 1) -> "CyclotomicNumber":
        q = Fraction(q)
        n = totient(order)
        return cls(order, [q.numerator] + [0] * (n - 1), q.denominator)

    @classmethod
    def from_exponents(cls, order: int, terms) -> "CyclotomicNumber":
        """Build sum c_e * zeta_order^e from a mapping or (e, c) pairs; any integer e."""
        _check_order(order)
        items = terms.items() if hasattr(terms, "items") else terms
        table = power_table(order)
        fracs = [(e % order, Fraction(c)) for e, c in items]
        den = 1
        for _, c in fracs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        acc = [0] * totient(order)
        for e, c in fracs:
            scale = c.numerator * (den // c.denominator)
            if scale:
                for i, t in enumerate(table[e]):
                    if t:
                        acc[i] += scale * t
        return cls(order, acc, den)

    # accessors -----------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Sparse canonical coordinates {exponent: coefficient}."""
        return {e: Fraction(c, self._den) for e, c in enumerate(self._num) if c}

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def __complex__(self) -> complex:
        m = self.order
        return sum(
            (c * cmath.exp(2j * math.pi * e / m) for e, c in enumerate(self._num) if c),
            0j,
        ) / self._den

    def __float__(self) -> float:
        return float(self.to_fraction())

    # order changes -------------------------------------------------------
    def lift(self, order: int) -> "CyclotomicNumber":
        if order == self.order:
            return self
        if order % self.order:
            raise CyclotomicError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        return CyclotomicNumber.from_exponents(
            order, {e * step: Fraction(c, self._den) for e, c in enumerate(self._num) if c}
        )

    def reduced(self) -> "CyclotomicNumber":
        """The same value written in the smallest Q(zeta_d), d | order, containing it."""
        for d in _divisors(self.order):
            if d == self.order:
                return self
            sol = _express_in_subfield(self, d)
            if sol is not None:
                return sol
        return self

    def to_order(self, order: int) -> "CyclotomicNumber":
        if order % self.order == 0:
            return self.lift(order)
        r = self.reduced()
        if order % r.order:
            raise CyclotomicError(f"value does not lie in Q(zeta_{order})")
        return r.lift(order)

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            m = math.lcm(self.order, other.order)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Rational)):
            return self, CyclotomicNumber.from_rational(other, self.order)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        num = [x * b._den + y * a._den for x, y in zip(a._num, b._num)]
        return CyclotomicNumber(a.order, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-x for x in self._num], self._den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            q = Fraction(other)
            return CyclotomicNumber(
                self.order, [x * q.numerator for x in self._num], self._den * q.denominator
            )
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        an, bn = a._num, b._num
        n = len(an)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(a.order, _reduce(prod, a.order), a._den * b._den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CyclotomicNumber":
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise CyclotomicError("Galois exponent must be coprime to the order")
        return CyclotomicNumber.from_exponents(
            self.order, {e * k: Fraction(c, self._den) for e, c in enumerate(self._num) if c}
        )

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1 % self.order if self.order > 1 else 1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = CyclotomicNumber.from_rational(1, self.order)
        for k in range(1, self.order + 1):
            if math.gcd(k, self.order) == 1:
                prod = prod * self.galois(k)
        return prod.to_fraction()

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.to_fraction(), self.order)
        others = CyclotomicNumber.from_rational(1, self.order)
        for k in range(2, self.order + 1):
            if math.gcd(k, self.order) == 1:
                others = others * self.galois(k)
        n = (self * others).to_fraction()
        return others * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CyclotomicNumber):
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] * pair[1].inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def abs2(self) -> "CyclotomicNumber":
        return self * self.conjugate()

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self._hash is None:
            r = self.reduced()
            self._hash = hash((r.order, r._num, r._den)) if not r.is_rational() else hash(
                Fraction(r._num[0], r._den)
            )
        return self._hash

    def sort_key(self) -> tuple:
        return (self.order, self._num, self._den)

    # serialization -------------------------------------------------------
    def to_triplets(self) -> list:
        """[order, [[exponent, num, den], ...]] with canonical exponents."""
        return [self.order, [[e, c.numerator, c.denominator] for e, c in self.coeffs.items()]]

    @classmethod
    def from_triplets(cls, data) -> "CyclotomicNumber":
        order, terms = data
        return cls.from_exponents(int(order), {int(e): Fraction(int(n), int(d)) for e, n, d in terms})

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({self.to_fraction()})"
        parts = []
        for e, c in self.coeffs.items():
            mono = "1" if e == 0 else (f"z{self.order}" if e == 1 else f"z{self.order}^{e}")
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return "Cyclo(" + " + ".join(parts) + ")"

    __str__ = __repr__


def _express_in_subfield(x: CyclotomicNumber, d: int):
    """Solve x = sum_i c_i zeta_d^i over Q; return None if x is not in Q(zeta_d)."""
    m = x.order
    step = m // d
    table = power_table(m)
    nd = totient(d)
    cols = [table[(i * step) % m] for i in range(nd)]
    n = totient(m)
    rows = [[Fraction(cols[i][r]) for i in range(nd)] + [Fraction(x._num[r], x._den)] for r in range(n)]
    piv_row = 0
    pivots = []
    for col in range(nd):
        sel = next((r for r in range(piv_row, n) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        pv = rows[piv_row][col]
        rows[piv_row] = [v / pv for v in rows[piv_row]]
        for r in range(n):
            if r != piv_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
    if any(rows[r][-1] != 0 for r in range(piv_row, n)):
        return None
    coeff = [Fraction(0)] * nd
    for r, col in enumerate(pivots):
        coeff[col] = rows[r][-1]
    return CyclotomicNumber.from_exponents(d, dict(enumerate(coeff)))


def zeta(order: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity exp(2 pi i k / order)."""
    return CyclotomicNumber.from_exponents(order, {k: 1})


def rational(q, order: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.from_rational(q, order)


def as_cyclotomic(x, order: int = 1) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.from_rational(x, order)
