"""Verification suites: exact identities, SLP accounting, catalog integrity.

Each suite returns a VerificationReport whose checks either pass or fail;
nothing here raises on a failed check, so reports can be rendered whole.
The suites accept an optional maps dict so tests can feed in deliberately
corrupted catalogs and watch the checks trip.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import catalog, slp
from .catalog import NamedMap
from .polynomials import map_compose, map_metrics
from .preimage import f_resolvent, g_slice, h_slice
from .rng import SplitMix64
from .textform import serialize

DEFAULT_SEED = 7
DEFAULT_TRIALS = 50

SUITE_NAMES = ("identities", "slp", "transcription")

# Digest of the canonical serialization of the transcribed map g.  The spot
# checks below pin the headline numbers; this pins every coefficient, so any
# single-term corruption of the stored data trips the suite.
_G_CANONICAL_SHA256 = "bc4cf8e7341f1125c775d566f5abef70845a7102a75e57bd3f6175fd28a4b801"

# The factored scheme drops one non-scalar multiplication per squaring trick;
# over complex coefficients the first stage could save one more (not done
# here: it needs complex-valued intermediates).
COMPLEX_COEFF_REMARK = (
    "over complex coefficients the first-stage non-scalar count can be "
    "lowered by one; this toolkit works with real coefficients only"
)


@dataclass(frozen=True)
class Check:
    label: str
    expected: str
    actual: str
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "label": self.label,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def passed_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_jsonable(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_jsonable() for c in self.checks],
            "passed": self.passed_count,
            "failed": self.failed_count,
            "ok": self.ok,
        }


def _tally(label: str, trials: int, failures: int) -> Check:
    return Check(label, f"{trials}/{trials}", f"{trials - failures}/{trials}", failures == 0)


def _equality(label: str, expected, actual) -> Check:
    return Check(label, str(expected), str(actual), expected == actual)


def identities_suite(
    seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS,
    maps: Mapping[str, NamedMap] | None = None,
) -> VerificationReport:
    """Exact rational identities behind the three stage inversions."""
    maps = catalog.named_maps() if maps is None else maps
    rng = SplitMix64(seed)
    checks = []

    fails_inv = fails_two = 0
    for _ in range(trials):
        x = rng.next_positive_rational()
        slice_poly = g_slice(x)
        if slice_poly.evaluate([1 / x]) != 1 / x:
            fails_inv += 1
        if slice_poly.evaluate([2 / x]) != x:
            fails_two += 1
    checks.append(_tally("G fiber: value at 1/x equals 1/x", trials, fails_inv))
    checks.append(_tally("G fiber: value at 2/x equals x", trials, fails_two))

    fails_zero = fails_two = 0
    for _ in range(trials):
        y = rng.next_positive_rational()
        slice_poly = h_slice(y)
        if slice_poly.evaluate([Fraction(0)]) != 0:
            fails_zero += 1
        if slice_poly.evaluate([2 / y]) != y:
            fails_two += 1
    checks.append(_tally("H fiber: value at 0 equals 0", trials, fails_zero))
    checks.append(_tally("H fiber: value at 2/y equals y", trials, fails_two))

    fails_gt = 0
    for _ in range(trials):
        den = 2 + rng.next_below(999)
        y = Fraction(1 + rng.next_below(den - 1), den)  # in (0, 1)
        if not h_slice(y).evaluate([y]) > y:
            fails_gt += 1
    checks.append(_tally("H fiber: value at y exceeds y for y in (0,1)", trials, fails_gt))

    fails_const = fails_shape = 0
    for _ in range(trials):
        a = rng.next_positive_rational()
        b = 1 / a + rng.next_positive_rational()  # guarantees a*b >= 1
        quartic = f_resolvent(a, b)
        if quartic.evaluate([Fraction(0)]) != a * b - 1:
            fails_const += 1
        if quartic.total_degree() != 4 or quartic.coefficient((4,)) != 1:
            fails_shape += 1
    checks.append(_tally("F resolvent: value at 0 equals ab-1", trials, fails_const))
    checks.append(_tally("F resolvent: monic of degree 4", trials, fails_shape))

    F = maps["F"].map
    fails_pos = 0
    for _ in range(trials):
        sign_x = 1 if rng.next_below(2) else -1
        sign_y = 1 if rng.next_below(2) else -1
        p = (sign_x * rng.next_positive_rational(), sign_y * rng.next_positive_rational())
        if not all(v > 0 for v in F.evaluate(p)):
            fails_pos += 1
    checks.append(_tally("F: both components strictly positive", trials, fails_pos))

    return VerificationReport("identities", tuple(checks))


def slp_suite(maps: Mapping[str, NamedMap] | None = None) -> VerificationReport:
    """Non-scalar complexity accounting and equivalence with the expanded f."""
    maps = catalog.named_maps() if maps is None else maps
    programs = slp.factored_programs()
    checks = []
    for name, expected in (("F", 4), ("G", 4), ("H", 3), ("f", 11)):
        checks.append(
            _equality(
                f"non-scalar count of the {name} program",
                expected,
                slp.nonscalar_count(programs[name]),
            )
        )
    checks.append(
        Check(
            "chained expansion equals expanded f byte-for-byte",
            "identical canonical serialization",
            "identical" if serialize(slp.slp_expand(programs["f"])) == serialize(maps["f"].map)
            else "MISMATCH",
            serialize(slp.slp_expand(programs["f"])) == serialize(maps["f"].map),
        )
    )
    sample_points = [(0, 0), (1, 1), (2, 3), (-1, 2), (Fraction(1, 2), Fraction(-3, 7))]
    fails = sum(
        1
        for p in sample_points
        if slp.slp_eval(programs["f"], p) != maps["f"].map.evaluate(p)
    )
    checks.append(_tally("chained program evaluates like f", len(sample_points), fails))
    return VerificationReport("slp", tuple(checks))


def transcription_suite(maps: Mapping[str, NamedMap] | None = None) -> VerificationReport:
    """Catalog integrity: the transcribed g and the composed f."""
    maps = catalog.named_maps() if maps is None else maps
    g = maps["g"].map
    f = maps["f"].map
    gm = map_metrics(g)
    fm = map_metrics(f)
    g1, g2 = g.components
    checks = [
        _equality("g: total degree", 56, gm.total_degree),
        _equality("g: monomial count", 168, gm.total_monomials),
        _equality("g: component degrees", (28, 28), gm.component_degrees),
        _equality("g1: constant coefficient", 85, g1.coefficient((0, 0))),
        _equality("g2: constant coefficient", 4, g2.coefficient((0, 0))),
        _equality("g1: leading term", "x^18*y^10", _leading_term(g1)),
        _equality("g2: leading term", "x^16*y^12", _leading_term(g2)),
        _equality("g1: leading coefficient", 1, g1.coefficient((18, 10))),
        _equality("g2: leading coefficient", 1, g2.coefficient((16, 12))),
        _equality("f: total degree", 72, fm.total_degree),
        _equality("f: monomial count", 350, fm.total_monomials),
        _equality("f: component degrees", (52, 20), fm.component_degrees),
    ]
    digest = hashlib.sha256(serialize(g).encode("utf-8")).hexdigest()
    checks.append(
        _equality("g: canonical serialization digest", _G_CANONICAL_SHA256, digest)
    )
    recomposed = map_compose(maps["H"].map, map_compose(maps["G"].map, maps["F"].map))
    checks.append(
        Check(
            "f equals the stagewise composition",
            "identical canonical serialization",
            "identical" if serialize(recomposed) == serialize(f) else "MISMATCH",
            serialize(recomposed) == serialize(f),
        )
    )
    return VerificationReport("transcription", tuple(checks))


def _leading_term(poly) -> str:
    if poly.is_zero():
        return "0"
    (ex, ey) = next(iter(poly.terms))
    return f"x^{ex}*y^{ey}"


def run_suites(
    which: str,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    maps: Mapping[str, NamedMap] | None = None,
) -> list[VerificationReport]:
    if which not in SUITE_NAMES + ("all",):
        raise ValueError(f"unknown suite {which!r}; choose from {SUITE_NAMES + ('all',)}")
    reports = []
    if which in ("identities", "all"):
        reports.append(identities_suite(seed, trials, maps))
    if which in ("slp", "all"):
        reports.append(slp_suite(maps))
    if which in ("transcription", "all"):
        reports.append(transcription_suite(maps))
    return reports
