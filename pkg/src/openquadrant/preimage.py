"""Constructive preimages for the quadrant map, stage by stage.

Every point q of the open quadrant Q = {x>0, y>0} is hit by the composed
map f = H∘G∘F.  The construction walks the composition backwards:

* ``invert_H`` finds x' with H(x', v) ≈ (u, v) and (x', v) in the region
  B = A ∪ {y ≥ x > 0}, by bracketing a root of the cubic fiber slice of H;
* ``invert_G`` lifts (x', v) to (x', y') in A = {xy ≥ 1} ∩ Q through the
  cubic fiber slice of G;
* ``invert_F`` solves F(x0, y0) = (a, b) for (a, b) in A via a quartic in
  z = x*y - 1: a root z0 in [0, sqrt(a)) gives x0 = sqrt(a - z0^2) and
  y0 = (z0 + 1)/x0.

All brackets come with exact-arithmetic sign certificates; the witness
residual is computed in exact rational arithmetic against the expanded
catalog maps.  ``sample_forward`` is the converse check: seeded points
pushed through a map, with exact verification that the image stays inside
the open quadrant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import catalog
from .polynomials import Poly, as_rational, integer_form
from .rng import SplitMix64
from .rootfind import Bracket, RootFindError, bisect, exact_sign, grow_bracket, shifted

BOUNDARY_TOL = 1e-12          # absolute slack on region inequalities for floats
ENDPOINT_TOL = Fraction(1, 10 ** 12)  # |value - target| accepted as a boundary root
SEAM_BAND = 1e-9              # relative band around the invert_H branch threshold
DEFAULT_MAX_RESIDUAL = 1e-6


class PreconditionError(ValueError):
    """Input outside the domain an operation is specified for."""


class SolveError(RuntimeError):
    """A numeric stage failed to produce a certified witness."""


# -- region membership ------------------------------------------------------------


def in_Q(p: Sequence, tol: float = 0.0) -> bool:
    """Open quadrant {x > 0, y > 0} (tol is ignored: both bounds are strict)."""
    x, y = p
    return x > 0 and y > 0


def in_A(p: Sequence, tol: float = 0.0) -> bool:
    """{xy - 1 >= 0} ∩ Q, with absolute slack tol on the hyperbola bound."""
    x, y = p
    return x > 0 and y > 0 and x * y - 1 >= -tol


def in_B(p: Sequence, tol: float = 0.0) -> bool:
    """A ∪ {y >= x > 0}, with absolute slack tol on the closed bounds."""
    x, y = p
    return in_A(p, tol) or (x > 0 and y - x >= -tol)


# -- fiber slices ------------------------------------------------------------------


def g_slice(x) -> Poly:
    """The cubic y -> G2(x, y) = x^2*y^3 + (x^3-4x)y^2 + (4-2x^2)y + x for fixed x."""
    fx = as_rational(x)
    return Poly(1, {
        (3,): fx ** 2,
        (2,): fx ** 3 - 4 * fx,
        (1,): 4 - 2 * fx ** 2,
        (0,): fx,
    })


def h_slice(y) -> Poly:
    """The cubic x -> H1(x, y) = y^2*x^3 - 4y*x^2 + (4 + y^2/2)x for fixed y."""
    fy = as_rational(y)
    return Poly(1, {
        (3,): fy ** 2,
        (2,): -4 * fy,
        (1,): 4 + fy ** 2 / 2,
    })


def f_resolvent(a, b) -> Poly:
    """The monic quartic z^4 - (a+b+1)z^2 - 2z + (ab-1) whose root in
    [0, sqrt(a)) reconstructs an F-preimage of (a, b)."""
    fa, fb = as_rational(a), as_rational(b)
    return Poly(1, {
        (4,): Fraction(1),
        (2,): -(fa + fb + 1),
        (1,): Fraction(-2),
        (0,): fa * fb - 1,
    })


# -- stage inversions ---------------------------------------------------------------


def _exact_at(poly: Poly, x: float) -> Fraction:
    acc = Fraction(0)
    fx = Fraction(x)
    for (e,), c in poly.terms.items():
        acc += c * fx ** e
    return acc


def _solve_on_bracket(q: Poly, lo: float, hi: float, target_scale: float) -> float:
    """Bisect q on [lo, hi] at full precision, accepting an endpoint whose
    exact value is within the endpoint tolerance of zero when the exact
    signs fail to change (a float-rounding seam, not a missing root)."""
    s_lo, s_hi = exact_sign(q, lo), exact_sign(q, hi)
    if s_lo * s_hi > 0:
        tol = ENDPOINT_TOL * max(1, as_rational(target_scale))
        v_lo, v_hi = abs(_exact_at(q, lo)), abs(_exact_at(q, hi))
        if min(v_lo, v_hi) <= tol:
            return lo if v_lo <= v_hi else hi
        raise SolveError(
            f"no sign change on [{lo}, {hi}] and neither endpoint is a near-root"
        )
    return bisect(q, Bracket(lo, hi, s_lo, s_hi), tol=0.0).root


def invert_F(a: float, b: float) -> tuple[float, float]:
    """Solve F(x0, y0) = (a, b) for a, b > 0 with ab >= 1 (exactly)."""
    fa, fb = Fraction(a), Fraction(b)
    if not (fa > 0 and fb > 0):
        raise PreconditionError(f"({a}, {b}) is not in the open quadrant")
    if fa * fb < 1:
        raise PreconditionError(f"({a}, {b}) lies below the hyperbola xy = 1")
    quartic = f_resolvent(fa, fb)

    # Upper end: one ulp above sqrt(a); the exact value there is strictly
    # negative in real arithmetic, so a nearby float must confirm it.
    hi = math.nextafter(math.sqrt(a), math.inf)
    for _ in range(64):
        if exact_sign(quartic, hi) < 0:
            break
        hi = math.nextafter(hi, math.inf)
    else:
        raise SolveError(f"could not certify a negative value near sqrt({a})")

    s0 = exact_sign(quartic, 0.0)
    z0 = bisect(quartic, Bracket(0.0, hi, s0, -1), tol=0.0).root
    x0_sq = fa - Fraction(z0) ** 2
    if x0_sq <= 0:
        raise SolveError(f"degenerate root z0 = {z0} for target ({a}, {b})")
    x0 = math.sqrt(float(x0_sq))
    return x0, (z0 + 1.0) / x0


def invert_G(x: float, w: float) -> float:
    """Find y' >= 1/x with G(x, y') ≈ (x, w), for (x, w) in B.

    The fiber cubic takes the value 1/x at 1/x and x at 2/x.  For w >= 1/x
    the bracket grows rightward from 1/x; otherwise (only possible when
    x <= w < 1/x, i.e. x < 1) the crossing sits inside [1/x, 2/x].
    """
    if x <= 0:
        raise PreconditionError(f"x = {x} must be positive")
    fx, fw = Fraction(x), Fraction(w)
    if fw < min(fx, 1 / fx):
        raise PreconditionError(
            f"({x}, {w}) is outside B: w < min(x, 1/x) = {float(min(fx, 1 / fx))}"
        )
    lo = 1.0 / x
    q = shifted(g_slice(x), w)
    if fw >= 1 / fx:
        s_lo = exact_sign(q, lo)
        if s_lo == 0:
            y_prime = lo
        elif s_lo > 0:
            # value(1/x) = 1/x <= w in real arithmetic; a positive exact sign
            # here is float rounding of lo, so lo is a near-root.
            if abs(_exact_at(q, lo)) > ENDPOINT_TOL * max(1, fw):
                raise SolveError(f"fiber value at 1/x unexpectedly exceeds {w}")
            y_prime = lo
        else:
            br = grow_bracket(q, lo, 0.0)
            y_prime = bisect(q, br, tol=0.0).root
    else:
        y_prime = _solve_on_bracket(q, lo, 2.0 / x, w)

    # Bisection can land one ulp below 1/x; the next stage needs x*y' >= 1
    # exactly, which the true solution satisfies.
    for _ in range(64):
        if fx * Fraction(y_prime) >= 1:
            return y_prime
        y_prime = math.nextafter(y_prime, math.inf)
    raise SolveError(f"could not certify x*y' >= 1 at x = {x}")


def invert_H(u: float, v: float) -> float:
    """Find x' with H(x', v) ≈ (u, v) and (x', v) in B, for (u, v) in Q.

    For v >= 1 any positive solution works.  For 0 < v < 1 the admissible
    fiber is (0, v] ∪ [1/v, ∞); the left piece covers u up to the slice
    value at v, the right piece (entered at 2/v, where the slice equals v)
    covers everything above it.  Near the threshold both branches are tried
    and the smaller exact residual wins, so seam misclassification cannot
    occur.
    """
    if not (u > 0 and v > 0):
        raise PreconditionError(f"({u}, {v}) is not in the open quadrant")
    slice_poly = h_slice(v)
    q = shifted(slice_poly, u)
    if v >= 1.0:
        br = grow_bracket(q, 0.0, 0.0)
        return bisect(q, br, tol=0.0).root

    threshold = v * (v * v - 2.0) ** 2 + 0.5 * v ** 3  # slice value at x = v
    band = SEAM_BAND * max(1.0, abs(threshold))
    candidates: list[tuple[Fraction, float]] = []
    if u <= threshold + band:
        try:
            root = _solve_on_bracket(q, 0.0, v, u)
            candidates.append((abs(_exact_at(q, root)), root))
        except SolveError:
            if u <= threshold - band:
                raise
            # inside the band only: u may genuinely exceed the exact slice
            # value at v, in which case the right branch must take over
    if u >= threshold - band:
        lo = 2.0 / v
        s_lo = exact_sign(q, lo)
        if s_lo <= 0:
            br = grow_bracket(q, lo, 0.0)
            root = bisect(q, br, tol=0.0).root
            candidates.append((abs(_exact_at(q, root)), root))
        elif abs(_exact_at(q, lo)) <= ENDPOINT_TOL * max(1, Fraction(u)):
            candidates.append((abs(_exact_at(q, lo)), lo))
        # otherwise: u genuinely below the slice value at 2/v, i.e. the
        # left branch applies and already produced a candidate
    if not candidates:
        raise SolveError(f"no admissible bracket for target ({u}, {v})")
    return min(candidates, key=lambda c: c[0])[1]


# -- full preimage -------------------------------------------------------------------


@dataclass(frozen=True)
class PreimageWitness:
    """A source point with its stage trace: f(source) ≈ target, with the
    H-stage point in B and the G-stage point in A."""

    target: tuple[float, float]
    stage_H_point: tuple[float, float]
    stage_G_point: tuple[float, float]
    source: tuple[float, float]
    residual: float

    def to_jsonable(self) -> dict:
        return {
            "target": list(self.target),
            "stages": {"H": list(self.stage_H_point), "G": list(self.stage_G_point)},
            "source": list(self.source),
            "residual": self.residual,
        }


def residual_against(source: Sequence, target: Sequence) -> Fraction:
    """max_i |f_i(source) - target_i| / max(1, |target_i|), exactly."""
    values = catalog.eval_stagewise([as_rational(c) for c in source])
    worst = Fraction(0)
    for val, t in zip(values, target):
        ft = as_rational(t)
        err = abs(val - ft) / max(Fraction(1), abs(ft))
        if err > worst:
            worst = err
    return worst


def _ulp_offset(x: float, steps: int) -> float:
    direction = math.inf if steps > 0 else -math.inf
    for _ in range(abs(steps)):
        x = math.nextafter(x, direction)
    return x


def _polish_source(
    source: tuple[float, float],
    a: float,
    b: float,
    target: tuple[float, float],
    radius: int,
) -> tuple[float, float]:
    """Dither the source over a small ulp lattice to cancel the fiber error.

    Near targets with extreme aspect ratio the second component of the map
    depends on the F-stage image (a', b') with violently asymmetric
    sensitivities: a' must match the intended fiber base a far more tightly
    than one float step of either source coordinate moves it.  The two
    coordinates move a' by incommensurate amounts, so scanning a few ulps of
    both realizes a much finer effective step.  Candidates are scored by a
    first-order error estimate from the exact stage mismatches; the best few
    are then judged by the exact residual.
    """
    u, v = target
    x0, y0 = source
    fa, fb = Fraction(a), Fraction(b)

    s = a * b
    # fiber sensitivities at the intended stage point (floats are fine here:
    # these only rank candidates)
    dphi_dx = abs(2.0 * b * b * (s - 2.0) + (s - 1.0) ** 2 + 2.0 * s * (s - 1.0))
    dphi_dy = abs((s - 2.0) ** 2 + 2.0 * s * (s - 2.0) + 2.0 * a * a * (s - 1.0))
    dpsi_dx = abs(3.0 * v * v * a * a - 8.0 * v * a + 4.0 + v * v / 2.0)
    scale_u = max(1.0, abs(u))
    scale_v = max(1.0, abs(v))

    def score(xc: float, yc: float) -> float:
        fx, fy = Fraction(xc), Fraction(yc)
        z = fx * fy - 1
        da = abs(float(z * z + fx * fx - fa))
        db = abs(float(z * z + fy * fy - fb))
        return max(dpsi_dx * da / scale_u, (dphi_dx * da + dphi_dy * db) / scale_v)

    ranked: list[tuple[float, float, float]] = []
    for i in range(-radius, radius + 1):
        xc = _ulp_offset(x0, i)
        if xc <= 0:
            continue
        for j in range(-radius, radius + 1):
            yc = _ulp_offset(y0, j)
            ranked.append((score(xc, yc), xc, yc))
    ranked.sort(key=lambda t: t[0])

    best = source
    best_res = residual_against(source, target)
    for _, xc, yc in ranked[:4]:
        res = residual_against((xc, yc), target)
        if res < best_res:
            best, best_res = (xc, yc), res
    return best


def preimage(q: Sequence[float], max_residual: float = DEFAULT_MAX_RESIDUAL) -> PreimageWitness:
    """Chain the three stage inversions for a target q in the open quadrant."""
    u, v = float(q[0]), float(q[1])
    if not in_Q((u, v)):
        raise PreconditionError(f"target ({u}, {v}) is not in the open quadrant")

    def staged(label, fn, *args):
        try:
            return fn(*args)
        except (PreconditionError, SolveError, RootFindError) as exc:
            raise SolveError(f"stage {label}: {exc}") from exc

    x1 = staged("H", invert_H, u, v)
    h_point = (x1, v)
    if not in_B(h_point, BOUNDARY_TOL):
        raise SolveError(f"stage H: point {h_point} escaped region B")

    y1 = staged("G", invert_G, x1, v)
    g_point = (x1, y1)
    if not in_A(g_point, BOUNDARY_TOL):
        raise SolveError(f"stage G: point {g_point} escaped region A")

    source = staged("F", invert_F, x1, y1)
    residual = float(residual_against(source, (u, v)))
    if residual > max_residual:
        # Ill-conditioned corner: refine the source on the float lattice.
        for radius in (16, 64):
            source = _polish_source(source, x1, y1, (u, v), radius)
            residual = float(residual_against(source, (u, v)))
            if residual <= max_residual:
                break
    if residual > max_residual:
        raise SolveError(
            f"residual {residual:.3e} exceeds the bound {max_residual:.3e} "
            f"for target ({u}, {v})"
        )
    return PreimageWitness((u, v), h_point, g_point, source, residual)


# -- forward containment sampling ------------------------------------------------------


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of pushing seeded sample points through a catalog map and
    checking, in exact arithmetic, that every image lies in the open
    quadrant."""

    map_name: str
    region: str
    n: int
    seed: int
    violations: int
    extrema: tuple[tuple[float, float], ...]  # per component: (min, max)

    def to_jsonable(self) -> dict:
        return {
            "map": self.map_name,
            "region": self.region,
            "n": self.n,
            "seed": self.seed,
            "violations": self.violations,
            "extrema": [{"min": lo, "max": hi} for lo, hi in self.extrema],
        }


def _parse_region(region: str):
    kind, _, rng = region.partition("=")
    lo_txt, _, hi_txt = rng.partition(":")
    if kind not in ("box", "logq") or not lo_txt or not hi_txt:
        raise PreconditionError(
            f"bad region {region!r}; expected box=LO:HI or logq=LO:HI"
        )
    try:
        lo, hi = Fraction(lo_txt), Fraction(hi_txt)
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"bad region bounds in {region!r}") from None
    if lo >= hi:
        raise PreconditionError(f"empty region {region!r}")
    if kind == "logq" and lo <= 0:
        raise PreconditionError("logq region must be strictly positive")
    return kind, lo, hi


def sample_forward(map_name: str, region: str, n: int, seed: int) -> ContainmentReport:
    """Draw n seeded points, evaluate the named map exactly, and report
    violations of image ⊂ Q plus per-component image extrema.

    box=LO:HI draws uniformly from the square [LO, HI]² (exact rationals
    with denominator 2^53); logq=LO:HI draws log-uniformly from [LO, HI]²,
    exercising extreme aspect ratios inside the quadrant.
    """
    if n <= 0:
        raise PreconditionError("n must be positive")
    named = catalog.get_map(map_name)
    kind, lo, hi = _parse_region(region)
    rng = SplitMix64(seed)

    comps = []
    max1 = max2 = max_deg = 0
    for poly in named.map.components:
        scale, terms = integer_form(poly)
        degree = poly.total_degree()
        comps.append((scale, terms, degree))
        max1 = max(max1, max((e[0] for _, e in terms), default=0))
        max2 = max(max2, max((e[1] for _, e in terms), default=0))
        max_deg = max(max_deg, degree)

    def power_table(base: int, upto: int) -> list[int]:
        table = [1] * (upto + 1)
        for e in range(1, upto + 1):
            table[e] = table[e - 1] * base
        return table

    if kind == "box":
        # One fixed denominator for the whole campaign: coordinates are
        # lo + (hi-lo)*k/2^53 written over D = 2^53 * lcm of the bound
        # denominators, so the denominator power table is shared.
        width = hi - lo
        lcm_den = lo.denominator * width.denominator // math.gcd(
            lo.denominator, width.denominator
        )
        den = lcm_den << 53
        base_num = lo.numerator * (den // lo.denominator)
        step = width.numerator * (lcm_den // width.denominator)
        shared_dpows = power_table(den, max_deg)

        def draw_numerators() -> tuple[int, int, int, list[int]]:
            k1 = rng.next_u64() >> 11
            k2 = rng.next_u64() >> 11
            return base_num + step * k1, base_num + step * k2, den, shared_dpows

    else:
        lo_exp, hi_exp = math.log10(float(lo)), math.log10(float(hi))

        def draw_numerators() -> tuple[int, int, int, list[int]]:
            px = Fraction(10.0 ** (lo_exp + (hi_exp - lo_exp) * rng.next_float()))
            py = Fraction(10.0 ** (lo_exp + (hi_exp - lo_exp) * rng.next_float()))
            d = px.denominator * py.denominator // math.gcd(
                px.denominator, py.denominator
            )
            return (
                px.numerator * (d // px.denominator),
                py.numerator * (d // py.denominator),
                d,
                power_table(d, max_deg),
            )

    violations = 0
    minima: list[Fraction | None] = [None] * len(comps)
    maxima: list[Fraction | None] = [None] * len(comps)
    for _ in range(n):
        n1, n2, den, dpows = draw_numerators()
        pows1 = power_table(n1, max1)
        pows2 = power_table(n2, max2)
        bad = False
        for idx, (scale, terms, degree) in enumerate(comps):
            num = 0
            for c, (e1, e2) in terms:
                num += c * pows1[e1] * pows2[e2] * dpows[degree - e1 - e2]
            if num <= 0:
                bad = True
            value = Fraction(num, scale * dpows[degree])
            if minima[idx] is None or value < minima[idx]:
                minima[idx] = value
            if maxima[idx] is None or value > maxima[idx]:
                maxima[idx] = value
        if bad:
            violations += 1

    extrema = tuple((float(mn), float(mx)) for mn, mx in zip(minima, maxima))
    return ContainmentReport(map_name, region, n, seed, violations, extrema)
