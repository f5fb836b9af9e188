"""Directed-rounded scalar float operations.

Every rigorous interval endpoint in this package is produced by the functions
here (or by their line-for-line C twins in ``_kernel.pyx``).  The rounding
strategy is *emulated directed rounding*: each primitive is computed in the
default round-to-nearest mode, the exact residual sign is recovered through an
error-free transformation (2Sum for +/-, Dekker's product for *, /, sqrt), and
the result is nudged one ulp outward only when the rounded value lies on the
wrong side of the exact one.  The outcome equals true round-down/round-up per
endpoint, without touching the FPU mode (which would be thread-hostile and
fragile under vectorizing compilers).

Constraints the implementations rely on:
  * inputs are finite doubles; overflow of a result raises upstream,
  * Dekker splitting is exact for |x| < 2**996 (all quantities in this
    package stay below ~1e13),
  * fl(x - y) == 0 iff x == y for doubles, so computed residual signs are
    exact (every double is an integer multiple of 2**-1074).
"""

from __future__ import annotations

import math

_INF = math.inf
_SPLITTER = 134217729.0  # 2**27 + 1, Veltkamp split constant


def next_down(x: float) -> float:
    return math.nextafter(x, -_INF)


def next_up(x: float) -> float:
    return math.nextafter(x, _INF)


def _two_sum_err(a: float, b: float, s: float) -> float:
    # Knuth 2Sum residual: a + b == s + err exactly.
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def add_down(a: float, b: float) -> float:
    s = a + b
    if _two_sum_err(a, b, s) < 0.0:
        return next_down(s)
    return s


def add_up(a: float, b: float) -> float:
    s = a + b
    if _two_sum_err(a, b, s) > 0.0:
        return next_up(s)
    return s


def sub_down(a: float, b: float) -> float:
    s = a - b
    if _two_sum_err(a, -b, s) < 0.0:
        return next_down(s)
    return s


def sub_up(a: float, b: float) -> float:
    s = a - b
    if _two_sum_err(a, -b, s) > 0.0:
        return next_up(s)
    return s


def _mul_err(a: float, b: float, p: float) -> float:
    # Dekker product residual: a * b == p + err exactly (no over/underflow).
    aa = _SPLITTER * a
    ah = aa - (aa - a)
    al = a - ah
    bb = _SPLITTER * b
    bh = bb - (bb - b)
    bl = b - bh
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def mul_down(a: float, b: float) -> float:
    p = a * b
    if _mul_err(a, b, p) < 0.0:
        return next_down(p)
    return p


def mul_up(a: float, b: float) -> float:
    p = a * b
    if _mul_err(a, b, p) > 0.0:
        return next_up(p)
    return p


def div_down(a: float, b: float) -> float:
    q = a / b
    # residual of a - q*b decides which side of the exact quotient q is on
    p = q * b
    r = (a - p) - _mul_err(q, b, p)
    # sign(a/b - q) = sign(r) * sign(b)
    if (r < 0.0) != (b < 0.0) and r != 0.0:
        return next_down(q)
    return q


def div_up(a: float, b: float) -> float:
    q = a / b
    p = q * b
    r = (a - p) - _mul_err(q, b, p)
    if (r > 0.0) == (b > 0.0) and r != 0.0:
        return next_up(q)
    return q


def sqrt_down(x: float) -> float:
    if x == 0.0:
        return 0.0
    r = math.sqrt(x)
    p = r * r
    # r*r - x == (p - x) + err exactly; p - x is exact by Sterbenz
    d = (p - x) + _mul_err(r, r, p)
    if d > 0.0:
        return next_down(r)
    return r


def sqrt_up(x: float) -> float:
    if x == 0.0:
        return 0.0
    r = math.sqrt(x)
    p = r * r
    d = (p - x) + _mul_err(r, r, p)
    if d < 0.0:
        return next_up(r)
    return r


#: tag recorded in every certificate; names the rounding strategy in force
ROUNDING_TAG = "emulated-directed(2sum/dekker residual, ulp nudge)"
