"""Exact sums of rational multiples of square roots of integers.

Enough arithmetic to state Cauchy-Schwarz budgets and compare them exactly.
Square roots of distinct squarefree integers are linearly independent over
the rationals, so a sum vanishes iff every collected coefficient does; a
nonzero sum has its sign settled by integer square-root interval refinement.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=4096)
def _split_square(n: int) -> tuple[int, int]:
    """n = k^2 * r with r squarefree; returns (k, r)."""
    if n == 0:
        return 0, 1
    k, r, p = 1, 1, 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return k, r * m


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


class Surd:
    """sum of c_r * sqrt(r) over squarefree r, with rational c_r."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for r, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                clean[r] = clean.get(r, 0) + c
        self.terms = {r: c for r, c in sorted(clean.items()) if c}

    @classmethod
    def of(cls, x) -> "Surd":
        if isinstance(x, Surd):
            return x
        return cls({1: _as_fraction(x)})

    @classmethod
    def sqrt(cls, x) -> "Surd":
        """Exact square root of a nonnegative rational."""
        q = _as_fraction(x)
        if q < 0:
            raise ValueError("square root of a negative number")
        k, r = _split_square(q.numerator * q.denominator)
        return cls({r: Fraction(k, q.denominator)})

    def is_rational(self) -> bool:
        return set(self.terms) <= {1}

    def rational_part(self) -> Fraction:
        return self.terms.get(1, Fraction(0))

    def __add__(self, other):
        other = Surd.of(other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, 0) + c
        return Surd(out)

    __radd__ = __add__

    def __neg__(self):
        return Surd({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Surd.of(other))

    def __rsub__(self, other):
        return Surd.of(other) - self

    def __mul__(self, other):
        other = Surd.of(other)
        out: dict[int, Fraction] = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                g = math.gcd(r1, r2)
                r = (r1 // g) * (r2 // g)
                out[r] = out.get(r, 0) + c1 * c2 * g
        return Surd(out)

    __rmul__ = __mul__

    def __truediv__(self, q):
        q = _as_fraction(q)
        return Surd({r: c / q for r, c in self.terms.items()})

    def __float__(self):
        return math.fsum(float(c) * math.sqrt(r) for r, c in self.terms.items())

    def _interval(self, bits: int) -> tuple[Fraction, Fraction]:
        scale = 1 << bits
        lo = hi = Fraction(0)
        for r, c in self.terms.items():
            s = math.isqrt(r * scale * scale)
            a, b = Fraction(s, scale), Fraction(s + (0 if s * s == r * scale * scale else 1), scale)
            if c > 0:
                lo, hi = lo + c * a, hi + c * b
            else:
                lo, hi = lo + c * b, hi + c * a
        return lo, hi

    def sign(self) -> int:
        if not self.terms:
            return 0
        bits = 64
        while True:
            lo, hi = self._interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __eq__(self, other):
        try:
            return (self - Surd.of(other)).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __lt__(self, other):
        return (self - Surd.of(other)).sign() < 0

    def __le__(self, other):
        return (self - Surd.of(other)).sign() <= 0

    def __gt__(self, other):
        return (self - Surd.of(other)).sign() > 0

    def __ge__(self, other):
        return (self - Surd.of(other)).sign() >= 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for r, c in self.terms.items():
            mag = abs(c)
            if r == 1:
                body = _frac_str(mag)
            elif mag == 1:
                body = f"sqrt({r})"
            else:
                body = f"{_frac_str(mag)}*sqrt({r})"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sgn, body in parts[1:]:
            out += sgn + body
        return out

    def __repr__(self):
        return f"Surd({self})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def quotient_string(num: Fraction, den: Surd) -> str:
    """Render num/den in lowest terms, e.g. '1/(3+2*sqrt(2))' or '2/5'."""
    if den.is_rational():
        q = num / den.rational_part()
        return _frac_str(q)
    coeffs = [num] + list(den.terms.values())
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * lcm) for c in coeffs]
    g = math.gcd(*ints)
    if den.terms[min(den.terms)] < 0:
        g = -g
    n = ints[0] // g
    d = Surd({r: Fraction(int(c * lcm) // g) for r, c in den.terms.items()})
    return f"{n}/({d})"


def closed_constant(p, q, r, t) -> Surd:
    """(p + q*sqrt(r))/t."""
    return (Surd.of(p) + Surd.sqrt(r) * q) / t
