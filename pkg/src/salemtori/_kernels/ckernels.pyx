# cython: language_level=3
"""Compiled integer polynomial kernels.

Same contract as pykernels: tuples of Python ints, ascending degree, no
trailing zeros, () is zero.  Coefficients stay PyObject bignums, so results
are bit-identical to the pure backend; Cython only removes the interpreter
overhead of the inner loops.
"""

from math import gcd as _gcd

BACKEND = "cython"


def normalize(coeffs):
    """Drop trailing zeros, return a tuple."""
    cdef list c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def neg(a):
    return tuple(-x for x in a)


def add(a, b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return normalize(out)


def sub(a, b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return normalize(out)


def mul(a, b):
    cdef Py_ssize_t i, j, na, nb
    if not a or not b:
        return ()
    na = len(a)
    nb = len(b)
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return normalize(out)


def mul_scalar(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def shift(a, k):
    """Multiply by x**k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def divmod_monic(a, b):
    """Quotient and remainder by a monic divisor, exact over the integers."""
    cdef Py_ssize_t i, j, db
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    db = len(b) - 1
    cdef list r = list(a)
    if len(r) - 1 < db:
        return (), tuple(a)
    cdef list q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = r[i - db + j] - c * b[j]
    return normalize(q), normalize(r[:db])


def prem(a, b):
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b."""
    cdef Py_ssize_t i, j, da, db, n
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    da = len(a) - 1
    db = len(b) - 1
    if da < db:
        return tuple(a)
    lc = b[db]
    cdef list r = list(a)
    n = len(r)
    for i in range(da, db - 1, -1):
        c = r[i]
        for j in range(n):
            r[j] = r[j] * lc
        if c:
            for j in range(db + 1):
                r[i - db + j] = r[i - db + j] - c * b[j]
        r[i] = 0
    return normalize(r[:db] if db > 0 else [])


def content(a):
    """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
    g = 0
    for x in a:
        g = _gcd(g, x)
        if g == 1:
            return 1
    return g


def div_scalar_exact(a, c):
    if c == 0:
        raise ZeroDivisionError("scalar division by zero")
    cdef list out = []
    for x in a:
        q, r = divmod(x, c)
        if r:
            raise ValueError("inexact scalar division")
        out.append(q)
    return normalize(out)


def deriv(a):
    cdef Py_ssize_t i
    return normalize([i * a[i] for i in range(1, len(a))])


def eval_int(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def eval_qq(a, num, den):
    """den**deg(a) * a(num/den).  Integer; same sign as a(num/den) for den > 0."""
    if not a:
        return 0
    acc = 0
    dp = 1
    for c in reversed(a):
        acc = acc * num + c * dp
        dp = dp * den
    return acc
