"""Outward-rounded interval arithmetic over binary64 floats.

Every operation returns an enclosure of the exact real result set.  Directed
rounding is realized without touching the FPU rounding mode: each endpoint is
computed in round-to-nearest and then corrected by one `math.nextafter` step
when (and only when) an exact residual test shows the rounded value lies on
the wrong side.  The residual tests use error-free transformations (TwoSum)
and exact integer arithmetic on `float.as_integer_ratio`, so the endpoints
are the true round-down / round-up results, not merely conservative nudges.
All functions are pure; values are immutable and safe to share across
threads or processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

_INF = math.inf
_nextafter = math.nextafter


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


# ---------------------------------------------------------------------------
# Directed endpoint arithmetic
# ---------------------------------------------------------------------------

def add_down(a: float, b: float) -> float:
    """Largest float <= the exact a+b."""
    s = a + b
    bv = s - a
    err = (a - (s - bv)) + (b - bv)  # TwoSum residual: a+b == s+err exactly
    if err < 0.0:
        return _nextafter(s, -_INF)
    return s


def add_up(a: float, b: float) -> float:
    """Smallest float >= the exact a+b."""
    s = a + b
    bv = s - a
    err = (a - (s - bv)) + (b - bv)
    if err > 0.0:
        return _nextafter(s, _INF)
    return s


def sub_down(a: float, b: float) -> float:
    return add_down(a, -b)


def sub_up(a: float, b: float) -> float:
    return add_up(a, -b)


def _mul_residual_sign(a: float, b: float, r: float) -> int:
    """Sign of the exact a*b - r, via integer arithmetic (no FMA needed)."""
    pa, qa = a.as_integer_ratio()
    pb, qb = b.as_integer_ratio()
    pr, qr = r.as_integer_ratio()
    lhs = pa * pb * qr
    rhs = pr * qa * qb
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


def mul_down(a: float, b: float) -> float:
    r = a * b
    if _mul_residual_sign(a, b, r) < 0:
        return _nextafter(r, -_INF)
    return r


def mul_up(a: float, b: float) -> float:
    r = a * b
    if _mul_residual_sign(a, b, r) > 0:
        return _nextafter(r, _INF)
    return r


def div_down(a: float, b: float) -> float:
    r = a / b
    # sign of a/b - r == sign(a - r*b) * sign(b), all exact in integers
    pa, qa = a.as_integer_ratio()
    pb, qb = b.as_integer_ratio()
    pr, qr = r.as_integer_ratio()
    num = pa * qr * qb - pr * pb * qa
    s = (num > 0) - (num < 0)
    if b < 0:
        s = -s
    if s < 0:
        return _nextafter(r, -_INF)
    return r


def div_up(a: float, b: float) -> float:
    r = a / b
    pa, qa = a.as_integer_ratio()
    pb, qb = b.as_integer_ratio()
    pr, qr = r.as_integer_ratio()
    num = pa * qr * qb - pr * pb * qa
    s = (num > 0) - (num < 0)
    if b < 0:
        s = -s
    if s > 0:
        return _nextafter(r, _INF)
    return r


def sqrt_down(x: float) -> float:
    """Largest float <= sqrt(x), for x >= 0."""
    r = math.sqrt(x)
    # compare r*r with x exactly: sign of x - r^2 decides the side
    pr, qr = r.as_integer_ratio()
    px, qx = x.as_integer_ratio()
    num = px * qr * qr - pr * pr * qx
    if num < 0:
        return _nextafter(r, -_INF)
    return r


def sqrt_up(x: float) -> float:
    """Smallest float >= sqrt(x), for x >= 0."""
    r = math.sqrt(x)
    pr, qr = r.as_integer_ratio()
    px, qx = x.as_integer_ratio()
    num = px * qr * qr - pr * pr * qx
    if num > 0:
        return _nextafter(r, _INF)
    return r


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with finite float endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"non-finite endpoint: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise DomainError(f"reversed interval: [{self.lo}, {self.hi}]")

    @staticmethod
    def point(v: float) -> "Interval":
        return Interval(v, v)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(add_down(self.lo, other.lo), add_up(self.hi, other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(sub_down(self.lo, other.hi), sub_up(self.hi, other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
        hi = max(mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
        return Interval(lo, hi)

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0.0 <= other.hi:
            raise DomainError(f"division by interval containing 0: {other}")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(div_down(a, c), div_down(a, d), div_down(b, c), div_down(b, d))
        hi = max(div_up(a, c), div_up(a, d), div_up(b, c), div_up(b, d))
        return Interval(lo, hi)

    def scale(self, k: float) -> "Interval":
        """Product with the exact scalar k."""
        if k >= 0.0:
            return Interval(mul_down(self.lo, k), mul_up(self.hi, k))
        return Interval(mul_down(self.hi, k), mul_up(self.lo, k))

    def square(self) -> "Interval":
        """Tight enclosure of {t*t : t in self} (handles 0-straddling)."""
        a, b = self.lo, self.hi
        if a >= 0.0:
            return Interval(mul_down(a, a), mul_up(b, b))
        if b <= 0.0:
            return Interval(mul_down(b, b), mul_up(a, a))
        return Interval(0.0, max(mul_up(a, a), mul_up(b, b)))

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise DomainError(f"sqrt of interval with negative part: {self}")
        return Interval(sqrt_down(self.lo), sqrt_up(self.hi))

    def x_one_minus_x(self) -> "Interval":
        """Tight enclosure of {t(1-t) : t in self} for self within [0, 1].

        t(1-t) is monotone on either side of 1/2, so the endpoint images
        bound the range; when 1/2 is inside, the maximum is exactly 1/4.
        """
        a, b = self.lo, self.hi
        if a < 0.0 or b > 1.0:
            raise DomainError(f"x_one_minus_x needs X within [0,1], got {self}")
        fa_lo = mul_down(a, sub_down(1.0, a))
        fb_lo = mul_down(b, sub_down(1.0, b))
        lo = fa_lo if fa_lo < fb_lo else fb_lo
        if a <= 0.5 <= b:
            hi = 0.25
        else:
            fa_hi = mul_up(a, sub_up(1.0, a))
            fb_hi = mul_up(b, sub_up(1.0, b))
            hi = fa_hi if fa_hi > fb_hi else fb_hi
        return Interval(lo, hi)

    # -- set utilities ------------------------------------------------------

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def width(self) -> float:
        return sub_up(self.hi, self.lo)

    def midpoint(self) -> float:
        return self.lo + 0.5 * (self.hi - self.lo)

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


# module-level aliases matching the operation vocabulary
def add(x: Interval, y: Interval) -> Interval:
    return x + y


def sub(x: Interval, y: Interval) -> Interval:
    return x - y


def mul(x: Interval, y: Interval) -> Interval:
    return x * y


def neg(x: Interval) -> Interval:
    return -x


def div(x: Interval, y: Interval) -> Interval:
    return x / y


def sqrt(x: Interval) -> Interval:
    return x.sqrt()


def x_one_minus_x(x: Interval) -> Interval:
    return x.x_one_minus_x()


def hull(x: Interval, y: Interval) -> Interval:
    return x.hull(y)


def intersect(x: Interval, y: Interval) -> Optional[Interval]:
    return x.intersect(y)


ONE = Interval(1.0, 1.0)
ZERO = Interval(0.0, 0.0)


# ---------------------------------------------------------------------------
# Boxes and complex intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Box:
    """Axis-aligned rectangle: the product of two intervals."""

    x: Interval
    y: Interval

    @staticmethod
    def point(x: float, y: float) -> "Box":
        return Box(Interval.point(x), Interval.point(y))

    def contains(self, px: float, py: float) -> bool:
        return self.x.contains(px) and self.y.contains(py)

    def contains_box(self, other: "Box") -> bool:
        return self.x.contains_interval(other.x) and self.y.contains_interval(other.y)

    def intersect(self, other: "Box") -> Optional["Box"]:
        ix = self.x.intersect(other.x)
        if ix is None:
            return None
        iy = self.y.intersect(other.y)
        if iy is None:
            return None
        return Box(ix, iy)

    def hull(self, other: "Box") -> "Box":
        return Box(self.x.hull(other.x), self.y.hull(other.y))

    def width(self) -> float:
        return max(self.x.width(), self.y.width())

    def midpoint(self) -> tuple[float, float]:
        return (self.x.midpoint(), self.y.midpoint())


@dataclass(frozen=True, slots=True)
class ComplexInterval:
    """Rectangular complex enclosure: re + i*im with interval components."""

    re: Interval
    im: Interval

    @staticmethod
    def point(z: complex) -> "ComplexInterval":
        return ComplexInterval(Interval.point(z.real), Interval.point(z.imag))

    @staticmethod
    def from_real(x: Interval) -> "ComplexInterval":
        return ComplexInterval(x, ZERO)

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexInterval":
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexInterval(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "ComplexInterval") -> "ComplexInterval":
        m2 = other.abs2()
        if m2.lo <= 0.0:
            raise DomainError("division by complex interval whose modulus may vanish")
        num = self * other.conj()
        return ComplexInterval(num.re / m2, num.im / m2)

    def conj(self) -> "ComplexInterval":
        return ComplexInterval(self.re, -self.im)

    def scale(self, k: float) -> "ComplexInterval":
        return ComplexInterval(self.re.scale(k), self.im.scale(k))

    def abs2(self) -> Interval:
        return self.re.square() + self.im.square()

    def modulus(self) -> Interval:
        return self.abs2().sqrt()

    def contains(self, z: complex) -> bool:
        return self.re.contains(z.real) and self.im.contains(z.imag)

    def hull(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re.hull(other.re), self.im.hull(other.im))

    def mid(self) -> complex:
        return complex(self.re.midpoint(), self.im.midpoint())


C_ONE = ComplexInterval.point(1.0 + 0.0j)
C_ZERO = ComplexInterval.point(0.0 + 0.0j)
