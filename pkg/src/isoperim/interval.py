"""Outward-rounded interval arithmetic.

The substrate for every certified claim in this package.  Endpoints are
doubles; every operation rounds outward using the emulated directed rounding
of ``_roundops`` (exact results stay exact, inexact ones move one ulp away
from the interval interior).  Values are immutable and all operations are
pure, so everything here is safe to share across threads.

Infinities are rejected rather than propagated: these certifications never
need them, and an overflow would silently weaken a bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernel_py, _roundops
from .errors import DomainError, IntervalOverflow

__all__ = [
    "Interval",
    "Box5",
    "PI",
    "iadd",
    "isub",
    "imul",
    "idiv",
    "isqrt",
    "ipow",
    "eval_S",
    "eval_V",
    "eval_G",
]


class Interval:
    """Closed interval [lo, hi] of reals with finite double endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise IntervalOverflow(f"non-finite endpoint: [{lo}, {hi}]")
        if lo > hi:
            raise ValueError(f"inverted interval: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *_):
        raise AttributeError("Interval is immutable")

    # -- inspection ---------------------------------------------------------

    @property
    def width(self) -> float:
        return _roundops.sub_up(self.hi, self.lo)

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise DomainError("empty intersection")
        return Interval(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return iadd(self, _as_interval(other))

    __radd__ = __add__

    def __sub__(self, other):
        return isub(self, _as_interval(other))

    def __rsub__(self, other):
        return isub(_as_interval(other), self)

    def __mul__(self, other):
        return imul(self, _as_interval(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return idiv(self, _as_interval(other))

    def __rtruediv__(self, other):
        return idiv(_as_interval(other), self)

    def __neg__(self):
        return Interval(-self.hi, -self.lo)


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(float(x))


def _mk(lo: float, hi: float) -> Interval:
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise IntervalOverflow(f"operation overflowed: [{lo}, {hi}]")
    return Interval(lo, hi)


def iadd(a: Interval, b: Interval) -> Interval:
    return _mk(_roundops.add_down(a.lo, b.lo), _roundops.add_up(a.hi, b.hi))


def isub(a: Interval, b: Interval) -> Interval:
    return _mk(_roundops.sub_down(a.lo, b.hi), _roundops.sub_up(a.hi, b.lo))


def imul(a: Interval, b: Interval) -> Interval:
    lo, hi = _kernel_py._imul(a.lo, a.hi, b.lo, b.hi)
    return _mk(lo, hi)


def idiv(a: Interval, b: Interval) -> Interval:
    if b.lo <= 0.0 <= b.hi:
        raise DomainError(f"division by interval containing zero: {b!r}")
    d = _roundops
    lo = min(d.div_down(a.lo, b.lo), d.div_down(a.lo, b.hi),
             d.div_down(a.hi, b.lo), d.div_down(a.hi, b.hi))
    hi = max(d.div_up(a.lo, b.lo), d.div_up(a.lo, b.hi),
             d.div_up(a.hi, b.lo), d.div_up(a.hi, b.hi))
    return _mk(lo, hi)


def isqrt(a: Interval) -> Interval:
    if a.lo < 0.0:
        raise DomainError(f"sqrt of interval with negative part: {a!r}")
    return _mk(_roundops.sqrt_down(a.lo), _roundops.sqrt_up(a.hi))


def ipow(a: Interval, n: int) -> Interval:
    """a**n for small integer n >= 0, with even-power reflection."""
    if n < 0 or n != int(n):
        raise DomainError(f"ipow exponent must be a non-negative integer: {n}")
    n = int(n)
    if n == 0:
        return Interval(1.0)
    if n == 1:
        return a
    if n % 2 == 0:
        lo, hi = _kernel_py._isqr(a.lo, a.hi)
        base = _mk(lo, hi)
        return ipow(base, n // 2)
    # odd power: monotone, handle endpoints with sign-aware repeated products
    return _mk(_pow_down(a.lo, n), _pow_up(a.hi, n))


def _pow_down(x: float, n: int) -> float:
    if x >= 0.0:
        r = x
        for _ in range(n - 1):
            r = _roundops.mul_down(r, x)
        return r
    return -_pow_up(-x, n)


def _pow_up(x: float, n: int) -> float:
    if x >= 0.0:
        r = x
        for _ in range(n - 1):
            r = _roundops.mul_up(r, x)
        return r
    return -_pow_down(-x, n)


# pi = 3.14159265358979323846...; the double below is the nearest double and
# lies under the true value, so one ulp up gives a correct enclosure.
PI = Interval(3.141592653589793, math.nextafter(3.141592653589793, math.inf))


@dataclass(frozen=True)
class Box5:
    """Axis-aligned box in the 5 double-pyramid coordinates (x1,x2,x3,y1,y2)."""

    x1: Interval
    x2: Interval
    x3: Interval
    y1: Interval
    y2: Interval

    @classmethod
    def from_bounds(cls, lo5, hi5) -> "Box5":
        return cls(*(Interval(float(l), float(h)) for l, h in zip(lo5, hi5)))

    @classmethod
    def point(cls, x1: float, x2: float, x3: float, y1: float, y2: float) -> "Box5":
        return cls.from_bounds((x1, x2, x3, y1, y2), (x1, x2, x3, y1, y2))

    def bounds(self):
        c = (self.x1, self.x2, self.x3, self.y1, self.y2)
        return tuple(i.lo for i in c), tuple(i.hi for i in c)

    def contains_point(self, p) -> bool:
        lo, hi = self.bounds()
        return all(l <= v <= h for l, v, h in zip(lo, p, hi))

    def encloses(self, other: "Box5") -> bool:
        slo, shi = self.bounds()
        olo, ohi = other.bounds()
        return all(s <= o for s, o in zip(slo, olo)) and all(
            o <= s for o, s in zip(ohi, shi))

    @property
    def widths(self):
        lo, hi = self.bounds()
        return tuple(_roundops.sub_up(h, l) for l, h in zip(lo, hi))


def _svg(box: Box5):
    lo, hi = box.bounds()
    return _kernel_py.eval_svg(*lo, *hi)


def eval_S(box: Box5) -> Interval:
    """Enclosure of the double-pyramid surface area closed form over the box."""
    sl, sh, *_ = _svg(box)
    return _mk(sl, sh)


def eval_V(box: Box5) -> Interval:
    """Enclosure of the volume closed form (2/3 of the base area)."""
    _, _, vl, vh, _, _ = _svg(box)
    return _mk(vl, vh)


def eval_G(box: Box5) -> Interval:
    """Enclosure of G = S^3 - 188 V^2 over the box."""
    *_, gl, gh = _svg(box)
    return _mk(gl, gh)
