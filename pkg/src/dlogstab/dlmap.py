"""Rigorous enclosures of the delayed logistic map F_a(x,y) = (y, a*y*(1-x)).

`first_iterate` and `second_iterate` enclose F and F^2 over a box and a
parameter interval using the exact directed-rounding kernel.  The second
iterate exploits the single-variable dependency of y0*(1-y0) (endpoint
min/max with the 1/4 cap when the factor straddles 1/2) and is intersected
with the plain composition, so it is never wider than composing two first
iterates.  `second_iterate_batch` is the same endpoint scheme vectorized
with numpy for the graph engine; it rounds outward by an unconditional
nextafter step per operation and therefore contains the scalar result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .interval import (
    Box,
    DomainError,
    Interval,
    add_down,
    add_up,
    mul_down,
    mul_up,
    sub_down,
    sub_up,
)


class Regime(enum.Enum):
    """Which attracting-neighborhood construction applies to a slice."""

    LINEARIZED = "linearized"
    NORMAL_FORM = "normal-form"


@dataclass(frozen=True, slots=True)
class ParameterSlice:
    """A parameter interval [a-, a+] with its analysis regime."""

    a: Interval
    regime: Regime

    def __post_init__(self) -> None:
        if not (1.0 < self.a.lo and self.a.hi <= 2.0):
            raise DomainError(f"parameter slice must lie in (1, 2]: {self.a}")


_UNIT = Interval(0.0, 1.0)


def _require_unit_box(b: Box) -> None:
    if not (_UNIT.contains_interval(b.x) and _UNIT.contains_interval(b.y)):
        raise DomainError(f"box must lie in the unit square: {b}")


def first_iterate(b: Box, s: ParameterSlice) -> Box:
    """Enclosure of {F_a(x,y) : (x,y) in b, a in s.a}."""
    _require_unit_box(b)
    a = s.a
    omx_lo = sub_down(1.0, b.x.hi)
    omx_hi = sub_up(1.0, b.x.lo)
    y_lo = mul_down(mul_down(a.lo, b.y.lo), omx_lo)
    y_hi = mul_up(mul_up(a.hi, b.y.hi), omx_hi)
    return Box(b.y, Interval(y_lo, y_hi))


def _second_iterate_bounds(
    xlo: float, xhi: float, ylo: float, yhi: float,
    alo: float, ahi: float, a2lo: float, a2hi: float,
) -> tuple[float, float, float, float]:
    """Endpoint scheme for F^2 over a box; all factors are nonnegative.

    x2 = a*y0*(1-x0): lower bound from the small factors rounded down, upper
    from the large ones rounded up.  y2 = a^2 * y0(1-y0) * (1-x0) with the
    y0(1-y0) range taken jointly.  The result is intersected with the
    composition a*(x2)*(1-y0), which treats y0 and 1-y0 independently.
    """
    omx_lo = sub_down(1.0, xhi)
    omx_hi = sub_up(1.0, xlo)
    x2lo = mul_down(mul_down(alo, ylo), omx_lo)
    x2hi = mul_up(mul_up(ahi, yhi), omx_hi)

    fa = mul_down(ylo, sub_down(1.0, ylo))
    fb = mul_down(yhi, sub_down(1.0, yhi))
    tlo = fa if fa < fb else fb
    if ylo <= 0.5 <= yhi:
        thi = 0.25
    else:
        ga = mul_up(ylo, sub_up(1.0, ylo))
        gb = mul_up(yhi, sub_up(1.0, yhi))
        thi = ga if ga > gb else gb
    y2lo = mul_down(mul_down(a2lo, tlo), omx_lo)
    y2hi = mul_up(mul_up(a2hi, thi), omx_hi)

    y2lo_c = mul_down(mul_down(alo, x2lo), sub_down(1.0, yhi))
    y2hi_c = mul_up(mul_up(ahi, x2hi), sub_up(1.0, ylo))
    if y2lo_c > y2lo:
        y2lo = y2lo_c
    if y2hi_c < y2hi:
        y2hi = y2hi_c
    return x2lo, x2hi, y2lo, y2hi


def second_iterate(b: Box, s: ParameterSlice) -> Box:
    """Enclosure of {F_a^2(x,y) : (x,y) in b, a in s.a}."""
    _require_unit_box(b)
    a = s.a
    a2lo = mul_down(a.lo, a.lo)
    a2hi = mul_up(a.hi, a.hi)
    x2lo, x2hi, y2lo, y2hi = _second_iterate_bounds(
        b.x.lo, b.x.hi, b.y.lo, b.y.hi, a.lo, a.hi, a2lo, a2hi
    )
    return Box(Interval(x2lo, x2hi), Interval(y2lo, y2hi))


def second_iterate_batch(
    xlo: np.ndarray, xhi: np.ndarray, ylo: np.ndarray, yhi: np.ndarray,
    s: ParameterSlice,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized F^2 enclosures for many boxes at once.

    Same endpoint scheme as `second_iterate`, with each arithmetic step
    nudged outward unconditionally, so every returned box contains the
    corresponding scalar enclosure.
    """
    a = s.a
    alo, ahi = a.lo, a.hi
    a2lo = mul_down(alo, alo)
    a2hi = mul_up(ahi, ahi)
    dn = lambda v: np.nextafter(v, -np.inf)
    up = lambda v: np.nextafter(v, np.inf)

    omx_lo = dn(1.0 - xhi)
    omx_hi = up(1.0 - xlo)
    x2lo = dn(dn(alo * ylo) * omx_lo)
    x2hi = up(up(ahi * yhi) * omx_hi)

    fa = dn(ylo * dn(1.0 - ylo))
    fb = dn(yhi * dn(1.0 - yhi))
    tlo = np.minimum(fa, fb)
    ga = up(ylo * up(1.0 - ylo))
    gb = up(yhi * up(1.0 - yhi))
    thi = np.maximum(ga, gb)
    straddle = (ylo <= 0.5) & (0.5 <= yhi)
    thi = np.where(straddle, 0.25, thi)
    y2lo = dn(dn(a2lo * tlo) * omx_lo)
    y2hi = up(up(a2hi * thi) * omx_hi)

    y2lo_c = dn(dn(alo * x2lo) * dn(1.0 - yhi))
    y2hi_c = up(up(ahi * x2hi) * up(1.0 - ylo))
    np.maximum(y2lo, y2lo_c, out=y2lo)
    np.minimum(y2hi, y2hi_c, out=y2hi)
    return x2lo, x2hi, y2lo, y2hi
