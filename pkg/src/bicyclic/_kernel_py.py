"""Pure-Python arithmetic kernel on raw ordinal representations.

A representation ("rep") is a nested tuple encoding hereditary normal form:
the empty tuple is 0, otherwise a tuple of (exponent_rep, coefficient) pairs
with exponents strictly decreasing and coefficients >= 1.

This module is the fallback twin of the compiled kernel ``_core``; both
expose the same five operations and must agree bit-for-bit.
"""

from __future__ import annotations


def ord_cmp(x, y):
    """Three-way comparison of reps: -1, 0 or 1."""
    if x is y:
        return 0
    for (ex, cx), (ey, cy) in zip(x, y):
        c = ord_cmp(ex, ey)
        if c:
            return c
        if cx != cy:
            return -1 if cx < cy else 1
    nx = len(x)
    ny = len(y)
    if nx == ny:
        return 0
    return -1 if nx < ny else 1


def ord_add(x, y):
    """Sum of reps; the tail of x below the leading exponent of y is absorbed."""
    if not y:
        return x
    if not x:
        return y
    e = y[0][0]
    k = len(x)
    while k and ord_cmp(x[k - 1][0], e) < 0:
        k -= 1
    if k and ord_cmp(x[k - 1][0], e) == 0:
        return x[:k - 1] + ((e, x[k - 1][1] + y[0][1]),) + y[1:]
    return x[:k] + y


def ord_sub(a, b):
    """The unique rep c with b + c == a, or None when b > a."""
    for i, ((ea, ca), (eb, cb)) in enumerate(zip(a, b)):
        c = ord_cmp(ea, eb)
        if c < 0:
            return None
        if c > 0:
            return a[i:]
        if ca != cb:
            if ca < cb:
                return None
            return ((ea, ca - cb),) + a[i + 1:]
    if len(b) > len(a):
        return None
    return a[len(b):]


def pair_mul(a, b, c, d):
    """Coordinate-pair product: (a+(c-b), d) when b <= c, else (a, d+(b-c))."""
    if ord_cmp(b, c) <= 0:
        return ord_add(a, ord_sub(c, b)), d
    return a, ord_add(d, ord_sub(b, c))


def coeff_at(x, e):
    """Coefficient of the term with exponent e in x, or 0 when absent."""
    for ex, cx in x:
        c = ord_cmp(ex, e)
        if c == 0:
            return cx
        if c < 0:
            return 0
    return 0
