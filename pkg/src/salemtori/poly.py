"""Exact integer polynomial arithmetic.

IntPoly wraps a tuple of int coefficients in ascending degree order.  All
operations are exact; nothing here touches floating point.  Heavy lifting is
delegated to the kernel backend (compiled when available).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from . import _kernels as kern
from .errors import DegreeTooLargeError, NotMonicError, ParseError


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial.  coeffs[i] multiplies t**i; no trailing zeros."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = kern.normalize(tuple(int(x) for x in self.coeffs))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_descending(cls, seq) -> "IntPoly":
        return cls(tuple(reversed(tuple(seq))))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other):
        other = _coerce(other)
        return IntPoly(kern.add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return IntPoly(kern.sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return IntPoly(kern.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(kern.mul_scalar(self.coeffs, other))
        other = _coerce(other)
        return IntPoly(kern.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "IntPoly"):
        other = _coerce(other)
        if not other.is_monic:
            raise NotMonicError(f"division by non-monic {other}")
        q, r = kern.divmod_monic(self.coeffs, other.coeffs)
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "IntPoly") -> bool:
        """True when self is monic and divides other exactly."""
        return divmod(other, self)[1].is_zero

    def __call__(self, x):
        if isinstance(x, Fraction):
            v = kern.eval_qq(self.coeffs, x.numerator, x.denominator)
            return Fraction(v, x.denominator ** max(self.degree, 0))
        return kern.eval_int(self.coeffs, x)

    def sign_at(self, x) -> int:
        """Exact sign of the value at an int or Fraction point."""
        if isinstance(x, Fraction):
            v = kern.eval_qq(self.coeffs, x.numerator, x.denominator)
        else:
            v = kern.eval_int(self.coeffs, x)
        return (v > 0) - (v < 0)

    def derivative(self) -> "IntPoly":
        return IntPoly(kern.deriv(self.coeffs))

    def reciprocal(self) -> "IntPoly":
        """t**deg * p(1/t): the coefficient sequence reversed."""
        return IntPoly(tuple(reversed(self.coeffs)))

    @property
    def is_reciprocal(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs)) and bool(self.coeffs)

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by t**k."""
        return IntPoly(kern.shift(self.coeffs, k))

    def content(self) -> int:
        return kern.content(self.coeffs)

    def primitive(self) -> "IntPoly":
        c = self.content()
        if c <= 1:
            return self
        return IntPoly(kern.div_scalar_exact(self.coeffs, c))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPoly({self})"


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")


ZERO = IntPoly(())
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def parse_poly(text: str) -> IntPoly:
    """Parse comma-separated integer coefficients, highest degree first.

    "1,-3,1" is t^2 - 3t + 1.  Raises ParseError with the character position
    of the bad token.
    """
    if text is None or not text.strip():
        raise ParseError("empty polynomial", 0)
    coeffs = []
    pos = 0
    for chunk in text.split(","):
        token = chunk.strip()
        start = pos + (len(chunk) - len(chunk.lstrip()))
        if not token:
            raise ParseError("empty coefficient", start)
        try:
            coeffs.append(int(token))
        except ValueError:
            raise ParseError(f"bad coefficient {token!r}", start) from None
        pos += len(chunk) + 1
    return IntPoly.from_descending(coeffs)


def format_poly(p: IntPoly) -> str:
    """Inverse of parse_poly: descending coefficients joined by commas."""
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in reversed(p.coeffs))


def divisors(n: int):
    """Sorted positive divisors of a nonzero integer."""
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no divisor list")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _signed_divisors(n: int):
    out = []
    for d in divisors(n):
        out.append(d)
        out.append(-d)
    return out


def _mignotte_bounds(c, m):
    # any monic degree-m factor g of monic p obeys
    # |g_i| <= C(m-1,i)*||p||_2 + C(m-1,i-1)
    b = isqrt(sum(x * x for x in c)) + 1
    return [comb(m - 1, i) * b + (comb(m - 1, i - 1) if i >= 1 else 0) for i in range(m)]


def _trial(c, g):
    q, r = kern.divmod_monic(c, g)
    return q if not r else None


def _find_factor(c):
    """Smallest monic nonlinear factor of c (tuple form, no integer roots).

    Searches degree m = 2..deg//2 and returns the lexicographically least
    coefficient tuple among degree-m hits, or None.  Candidate generation is
    driven by the exact divisor constraints g(x) | p(x) at x = 0, 1, -1, 2,
    with Mignotte bounds as a pure filter, so no factor can be missed.
    """
    deg = len(c) - 1
    p0 = c[0]
    p1 = kern.eval_int(c, 1)
    pm1 = kern.eval_int(c, -1)
    p2 = kern.eval_int(c, 2)
    d0s = _signed_divisors(p0)
    d1s = _signed_divisors(p1)
    dm1s = _signed_divisors(pm1)
    for m in range(2, deg // 2 + 1):
        bound = _mignotte_bounds(c, m)
        hits = set()
        if m == 2:
            for a0 in d0s:
                if abs(a0) > bound[0]:
                    continue
                for d1 in d1s:
                    a1 = d1 - 1 - a0
                    if abs(a1) > bound[1]:
                        continue
                    gm1 = 1 - a1 + a0
                    if gm1 == 0 or pm1 % gm1:
                        continue
                    g = (a0, a1, 1)
                    if _trial(c, g) is not None:
                        hits.add(g)
        elif m == 3:
            for a0 in d0s:
                if abs(a0) > bound[0]:
                    continue
                for d1 in d1s:
                    for dm1 in dm1s:
                        if (d1 + dm1) & 1:
                            continue
                        a2 = (d1 + dm1) // 2 - a0
                        a1 = (d1 - dm1 - 2) // 2
                        if abs(a2) > bound[2] or abs(a1) > bound[1]:
                            continue
                        g = (a0, a1, a2, 1)
                        if _trial(c, g) is not None:
                            hits.add(g)
        else:
            d2s = _signed_divisors(p2)
            for a0 in d0s:
                if abs(a0) > bound[0]:
                    continue
                for d1 in d1s:
                    for dm1 in dm1s:
                        if (d1 + dm1) & 1:
                            continue
                        a2 = (d1 + dm1) // 2 - 1 - a0
                        if abs(a2) > bound[2]:
                            continue
                        s = (d1 - dm1) // 2
                        for d2 in d2s:
                            num = d2 - 16 - 4 * a2 - 2 * s - a0
                            if num % 6:
                                continue
                            a3 = num // 6
                            a1 = s - a3
                            if abs(a3) > bound[3] or abs(a1) > bound[1]:
                                continue
                            g = (a0, a1, a2, a3, 1)
                            if _trial(c, g) is not None:
                                hits.add(g)
        if hits:
            return min(hits)
    return None


def factor_bounded(p: IntPoly):
    """Factor a monic integer polynomial of degree <= 8 into monic irreducibles.

    Returns a tuple of (factor, multiplicity) sorted by (degree, coeffs).
    """
    if not p.is_monic:
        raise NotMonicError("factor_bounded expects a monic polynomial")
    if p.degree > 8:
        raise DegreeTooLargeError(f"degree {p.degree} > 8")
    found = {}

    def record(g):
        found[g] = found.get(g, 0) + 1

    c = p.coeffs
    while c[0] == 0:
        record((0, 1))
        c = c[1:]
    if len(c) > 1:
        for r in sorted(_signed_divisors(c[0]), key=lambda d: (abs(d), d)):
            lin = (-r, 1)
            while True:
                q = _trial(c, lin)
                if q is None or len(c) == 1:
                    break
                record(lin)
                c = q
    while len(c) - 1 >= 4:
        g = _find_factor(c)
        if g is None:
            break
        record(g)
        c = _trial(c, g)
    if len(c) > 1:
        record(c)
    return tuple(
        sorted(((IntPoly(g), m) for g, m in found.items()), key=lambda fm: (fm[0].degree, fm[0].coeffs))
    )


def is_irreducible(p: IntPoly) -> bool:
    return p.degree >= 1 and factor_bounded(p) == ((p, 1),)


def gcd_poly(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over the integers, positive leading coefficient."""
    fa = a.primitive().coeffs if not a.is_zero else ()
    fb = b.primitive().coeffs if not b.is_zero else ()
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        r = kern.prem(fa, fb)
        cont = kern.content(r)
        if cont > 1:
            r = kern.div_scalar_exact(r, cont)
        fa, fb = fb, r
    if not fa:
        return ZERO
    if fa[-1] < 0:
        fa = kern.neg(fa)
    return IntPoly(fa)


def is_squarefree(p: IntPoly) -> bool:
    if p.degree <= 1:
        return True
    return gcd_poly(p, p.derivative()).degree == 0


def squarefree_part(p: IntPoly) -> IntPoly:
    """p divided by gcd(p, p'); the monic radical for monic input."""
    g = gcd_poly(p, p.derivative())
    if g.degree == 0:
        return p
    if not g.is_monic:
        raise NotMonicError("radical of a non-monic polynomial")
    return p // g


# every n with totient(n) <= 6; no other cyclotomic polynomial can divide
# a polynomial of degree <= 6
CYCLOTOMIC_INDICES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return IntPoly((-1, 1))
    num = IntPoly((0,) * n + (1,)) - ONE
    for d in range(1, n):
        if n % d == 0:
            num //= cyclotomic(d)
    return num


def split_cyclotomic(p: IntPoly):
    """Split off all cyclotomic factors.

    Returns ((n, multiplicity), ...) and the non-cyclotomic cofactor, so that
    p == prod(cyclotomic(n)**m) * rest.
    """
    if not p.is_monic:
        raise NotMonicError("split_cyclotomic expects a monic polynomial")
    rest = p
    parts = []
    for n in CYCLOTOMIC_INDICES:
        phi = cyclotomic(n)
        if phi.degree > rest.degree:
            continue
        m = 0
        while rest.degree >= phi.degree:
            q, r = divmod(rest, phi)
            if not r.is_zero:
                break
            rest = q
            m += 1
        if m:
            parts.append((n, m))
    return tuple(parts), rest


def is_cyclotomic_product(p: IntPoly) -> bool:
    return split_cyclotomic(p)[1] == ONE
