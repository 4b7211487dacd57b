"""Certified-bracket root finding for univariate polynomials.

The solvers here are deliberately plain: the existence arguments they
realize are pure sign-change arguments, so bisection inherits the
certificate.  End-point signs are always computed in exact rational
arithmetic (the evaluation points are floats, hence exact rationals), which
makes every sign decision rigorous; floats are used only to pick midpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly, dense_coeffs

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200

_GROW_LIMIT = 1e300


class RootFindError(RuntimeError):
    """Root finder could not certify a root; ``best`` holds the best estimate
    when one exists."""

    def __init__(self, message: str, best: "RootResult | None" = None):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class Bracket:
    """An interval with a certified sign change (or a boundary root)."""

    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"bracket endpoints out of order: [{self.lo}, {self.hi}]")
        if self.f_lo_sign * self.f_hi_sign > 0:
            raise ValueError("bracket endpoints have the same sign")


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


def exact_sign(poly: Poly, x: float) -> int:
    """Sign of poly(x), decided in exact rational arithmetic."""
    v = _exact_value(poly, x)
    return (v > 0) - (v < 0)


def _exact_value(poly: Poly, x: float) -> Fraction:
    coeffs = dense_coeffs(poly)
    fx = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * fx + c
    return acc


def bracket(poly: Poly, lo: float, hi: float) -> Bracket:
    """Build a Bracket for poly on [lo, hi], verifying the sign change."""
    return Bracket(lo, hi, exact_sign(poly, lo), exact_sign(poly, hi))


def bisect(
    poly: Poly,
    br: Bracket,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """Bisection on a certified bracket, solving poly = 0.

    Stops when the bracket width drops below ``tol * max(1, |hi0|)`` or when
    no representable midpoint is left (``tol = 0`` requests the latter, i.e.
    full double precision).  A zero end-point sign is returned immediately
    with residual 0.  Deterministic: identical inputs give identical output.
    """
    if poly.arity != 1:
        raise ValueError("bisect needs a univariate polynomial")
    if tol < 0:
        raise ValueError("tol must be non-negative")
    if br.f_lo_sign == 0:
        return RootResult(br.lo, 0.0, 0)
    if br.f_hi_sign == 0:
        return RootResult(br.hi, 0.0, 0)
    if br.f_lo_sign * br.f_hi_sign > 0:
        raise RootFindError(
            f"no sign change on [{br.lo}, {br.hi}] "
            f"(signs {br.f_lo_sign}, {br.f_hi_sign})"
        )

    lo, hi = br.lo, br.hi
    s_lo = br.f_lo_sign
    scale = max(1.0, abs(br.hi))
    iterations = 0
    while True:
        width = hi - lo
        if tol > 0 and width <= tol * scale:
            mid = lo + 0.5 * width
            return RootResult(mid, abs(float(_exact_value(poly, mid))), iterations)
        mid = lo + 0.5 * width
        if not (lo < mid < hi):
            break  # interval no longer splittable: full precision reached
        if iterations >= max_iter:
            best = _closer_endpoint(poly, lo, hi, iterations)
            raise RootFindError(
                f"max_iter={max_iter} exhausted before reaching tolerance", best
            )
        iterations += 1
        s_mid = exact_sign(poly, mid)
        if s_mid == 0:
            return RootResult(mid, 0.0, iterations)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return _closer_endpoint(poly, lo, hi, iterations)


def _closer_endpoint(poly: Poly, lo: float, hi: float, iterations: int) -> RootResult:
    v_lo = abs(_exact_value(poly, lo))
    v_hi = abs(_exact_value(poly, hi))
    if v_lo <= v_hi:
        return RootResult(lo, float(v_lo), iterations)
    return RootResult(hi, float(v_hi), iterations)


def _leading(poly: Poly) -> tuple[int, Fraction]:
    deg = poly.total_degree()
    return deg, poly.coefficient((deg,))


def grow_bracket(poly: Poly, start: float, target: float) -> Bracket:
    """Find M >= start with poly(M) >= target by doubling the offset.

    Requires an odd-degree univariate polynomial with positive leading
    coefficient (so the value eventually exceeds any target) and
    poly(start) <= target.  The returned Bracket carries the exact signs of
    poly - target, ready for ``bisect`` on the shifted polynomial.
    """
    if poly.arity != 1:
        raise ValueError("grow_bracket needs a univariate polynomial")
    deg, lead = _leading(poly)
    if deg % 2 == 0 or lead <= 0:
        raise ValueError(
            "grow_bracket needs odd degree and a positive leading coefficient"
        )
    f_target = Fraction(target)
    v_start = _exact_value(poly, start) - f_target
    if v_start > 0:
        raise ValueError(f"poly(start) = poly({start}) exceeds target {target}")
    if v_start == 0:
        return Bracket(start, start, 0, 0)

    offset = 1.0
    while True:
        hi = start + offset
        v_hi = _exact_value(poly, hi) - f_target
        if v_hi >= 0:
            return Bracket(start, hi, -1, (v_hi > 0) - (v_hi < 0))
        offset *= 2.0
        if offset > _GROW_LIMIT:
            raise RootFindError(
                f"no crossing of {target} found up to offset {_GROW_LIMIT:g}"
            )


def shifted(poly: Poly, target: float) -> Poly:
    """poly - target, with the target converted exactly."""
    return poly - Poly.constant(1, Fraction(target))
