"""Region decomposition of the positive quadrant and analytic convergence aids.

The positive quadrant splits into the admissible set S (orbits stay positive)
and the transient sets T0..T3; S itself splits around the interior fixed
point (A, A), A = 1 - 1/a, into quadrant-like sectors S1..S4 that orbits
traverse cyclically.  `classify` evaluates those defining inequalities on
exact floats: it backs property tests and diagnostics, not the certified
chain, which works on boxes only.  `small_a_certify` corroborates the
analytic convergence proof for a <= 3/2 by iterating the scalar comparison
map f(x) = a(a-1)(1-x)^2 and checking its monotone even/odd bracketing of A.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dlmap import ParameterSlice
from .interval import Box, DomainError, Interval


class Region(enum.Enum):
    S = "S"
    T0 = "T0"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"


class SubRegion(enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    FIXED_POINT = "fixed-point"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class RegionTag:
    tag: Region
    sub: SubRegion = SubRegion.NONE


class NotConverged(RuntimeError):
    """Comparison iteration did not reach the tolerance within max_iter."""


class MonotonicityViolation(RuntimeError):
    """The bracketing sequences lost monotonicity (implementation bug)."""


def fixed_point(s: ParameterSlice) -> Interval:
    """Enclosure of {1 - 1/a : a in s.a}; increasing in a."""
    if s.a.lo <= 1.0:
        raise DomainError(f"fixed point needs a > 1, got {s.a}")
    one = Interval.point(1.0)
    return one - one / s.a


def classify(x: float, y: float, a: float) -> RegionTag:
    """Tag of (x, y) in the quadrant decomposition for parameter a.

    Boundary conventions follow the defining inequalities verbatim; exactly
    one tag matches for every point of the closed positive quadrant.
    """
    if x < 0.0 or y < 0.0:
        raise DomainError(f"classify needs x, y >= 0, got ({x}, {y})")
    A = 1.0 - 1.0 / a
    curve = a * y * (1.0 - x)
    if y == 0.0 or (x == 1.0 and y > 0.0) or (y == 1.0 and x < 1.0) \
            or (curve == 1.0 and 0.0 <= x <= A):
        return RegionTag(Region.T0)
    if x > 1.0 and y > 0.0:
        return RegionTag(Region.T3)
    if x < 1.0 and y > 1.0:
        return RegionTag(Region.T2)
    if 0.0 < y < 1.0 and curve > 1.0:
        return RegionTag(Region.T1)
    # remaining: 0 <= x < 1, 0 < y < 1, a*y*(1-x) < 1
    if x == A and y == A:
        return RegionTag(Region.S, SubRegion.FIXED_POINT)
    if x <= A and y < A:
        return RegionTag(Region.S, SubRegion.S1)
    if x < A and A <= y:
        return RegionTag(Region.S, SubRegion.S2)
    if A <= x and A < y:
        return RegionTag(Region.S, SubRegion.S3)
    return RegionTag(Region.S, SubRegion.S4)


#: Every orbit of S eventually stays inside this square (x, y in [0.072, 0.8])
#: for a in (3/2, 2]; the graph stage uses it to discard components near the
#: origin saddle.
TRAPPING_LO = 0.072
TRAPPING_HI = 0.8


def trapping_region() -> Box:
    return Box(Interval(TRAPPING_LO, TRAPPING_HI), Interval(TRAPPING_LO, TRAPPING_HI))


@dataclass(frozen=True, slots=True)
class ConvergenceWitness:
    """Record of the bracketing iteration h_n <= A <= g_n."""

    a: float
    n_steps: int
    lower: float  # final h_N (even-indexed subsequence, nondecreasing)
    upper: float  # final g_N (odd-indexed subsequence, nonincreasing)
    fixed_point: Interval

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    @property
    def limit(self) -> float:
        return 0.5 * (self.lower + self.upper)


def small_a_certify(a: float, tol: float, max_iter: int = 200_000) -> ConvergenceWitness:
    """Corroborate convergence to (A, A) for 1 < a <= 3/2.

    Iterates s_{n+1} = a(a-1)(1-s_n)^2 from s_0 = 0 in plain floats and
    checks at every step that the even subsequence is nondecreasing, the odd
    one nonincreasing, and that they bracket A.  Finishes when the bracket is
    tighter than tol; the final bracket is re-checked against an interval
    enclosure of A.
    """
    if not (1.0 < a <= 1.5):
        raise DomainError(f"small-a certification needs a in (1, 3/2], got {a}")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    c = a * (a - 1.0)
    A = 1.0 - 1.0 / a
    aI = Interval.point(a)
    A_enc = Interval.point(1.0) - Interval.point(1.0) / aI

    h = 0.0           # s_0
    g = c             # s_1 = f(0)
    n = 1
    if not (h <= A <= g):
        raise MonotonicityViolation(f"initial bracket failed at a={a}")
    while n < max_iter:
        h_next = c * (1.0 - g) ** 2   # even index
        g_next = c * (1.0 - h_next) ** 2  # odd index
        n += 2
        if g - h < tol:
            break
        if h_next < h or g_next > g:
            raise MonotonicityViolation(
                f"bracket monotonicity failed at step {n}: "
                f"h {h} -> {h_next}, g {g} -> {g_next}")
        if not (h_next <= A <= g_next):
            raise MonotonicityViolation(
                f"bracket lost the fixed point at step {n}")
        h, g = h_next, g_next
    else:
        raise NotConverged(
            f"gap {g - h:.3e} above tol {tol:.3e} after {n} steps at a={a}")
    # interval re-check of the final bracket
    if not (h <= A_enc.hi and g >= A_enc.lo):
        raise MonotonicityViolation("final bracket misses the enclosure of A")
    return ConvergenceWitness(a=a, n_steps=n, lower=h, upper=g, fixed_point=A_enc)
