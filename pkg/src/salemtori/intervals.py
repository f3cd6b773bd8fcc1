"""Exact rational intervals and boxes, plus certified log enclosures.

Interval endpoints are Fractions and all interval arithmetic is exact.
mpmath appears in exactly one role: directed-rounded log via mpmath.iv,
with exact dyadic handoff checked on both sides of the call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath


@dataclass(frozen=True)
class Interval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo = Fraction(self.lo)
        hi = Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"inverted interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "Interval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        prods = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(x)


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle in the complex plane."""

    re: Interval
    im: Interval

    @classmethod
    def point(cls, re, im=0) -> "Box":
        return cls(Interval.point(re), Interval.point(im))

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)

    def intersects(self, other: "Box") -> bool:
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def contains(self, re, im) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    @property
    def is_real(self) -> bool:
        return self.im.lo == 0 == self.im.hi

    def __mul__(self, other: "Box") -> "Box":
        # (a+bi)(c+di) with interval coordinates
        a, b, c, d = self.re, self.im, other.re, other.im
        return Box(a * c - b * d, a * d + b * c)

    def __str__(self):
        return f"({self.re} + {self.im}i)"


def sqrt_lb(x: Fraction, bits: int = 64) -> Fraction:
    """Rational lower bound for sqrt(x), within 2**-bits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative")
    num = x.numerator * x.denominator << (2 * bits)
    return Fraction(isqrt(num), x.denominator << bits)


def sqrt_ub(x: Fraction, bits: int = 64) -> Fraction:
    """Rational upper bound for sqrt(x), within 2**-bits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative")
    num = x.numerator * x.denominator << (2 * bits)
    return Fraction(isqrt(num) + 1, x.denominator << bits)


def mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _bc = t
    man = int(man)
    if man == 0:
        return Fraction(0)
    v = Fraction(man) * Fraction(2) ** int(exp)
    return -v if sign else v


def _dyadic_floor(x: Fraction, bits: int) -> Fraction:
    return Fraction(x.numerator * (1 << bits) // x.denominator, 1 << bits)


def _dyadic_ceil(x: Fraction, bits: int) -> Fraction:
    return -_dyadic_floor(-x, bits)


def _exact_mpf(x: Fraction):
    """x must be dyadic; builds the exact mpf and verifies the round trip."""
    den = x.denominator
    exp = den.bit_length() - 1
    assert den == 1 << exp, "not dyadic"
    man = x.numerator
    with mpmath.workprec(abs(man).bit_length() + 8):
        v = mpmath.mpf((man, -exp))
    assert mpf_tuple_to_fraction(v._mpf_) == x
    return v


def log_interval(iv: Interval, bits: int = 96) -> Interval:
    """Certified enclosure of {log x : x in iv}.  Requires iv.lo > 0."""
    if iv.lo <= 0:
        raise ValueError("log of non-positive interval")
    # enough bits that the dyadic floor of the lower endpoint stays positive
    k = max(bits + 64, (iv.lo.denominator // iv.lo.numerator).bit_length() + 2)
    lo = _dyadic_floor(iv.lo, k)
    hi = _dyadic_ceil(iv.hi, k)
    assert lo > 0
    ctx = mpmath.iv
    old = ctx.prec
    try:
        need = max(
            bits + 16,
            abs(lo.numerator).bit_length() + 8,
            abs(hi.numerator).bit_length() + 8,
        )
        ctx.prec = need
        val = ctx.log(ctx.mpf([_exact_mpf(lo), _exact_mpf(hi)]))
        a, b = val._mpi_
        return Interval(mpf_tuple_to_fraction(a), mpf_tuple_to_fraction(b))
    finally:
        ctx.prec = old


def decimal_string(iv: Interval, places: int = 12):
    """Fixed-point decimal with `places` digits whose exact value lies in iv.

    Returns None when iv is too wide for any such decimal to be certified.
    """
    scale = 10**places
    n = round(iv.mid * scale)
    cand = Fraction(n, scale)
    if not iv.contains(cand):
        return None
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // scale}.{n % scale:0{places}d}"
