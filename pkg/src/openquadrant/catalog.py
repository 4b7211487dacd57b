"""The concrete maps of the toolkit.

Builds, in fully expanded canonical form:

* the three stages ``F``, ``G``, ``H`` of the quadrant construction,
* their compositions ``GF`` (= G∘F) and ``f`` (= H∘G∘F), whose image is the
  open quadrant {x>0, y>0},
* the earlier published two-component map ``g`` with the same image,
  transcribed term for term from its expanded form.

Everything here is pure and deterministic; builders are cached and the
returned values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polynomials import Poly, PolyMap, map_compose

MAP_NAMES = ("F", "G", "H", "GF", "f", "g")

_X = Poly.variable(2, 0)
_Y = Poly.variable(2, 1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class NamedMap:
    name: str
    map: PolyMap
    provenance: str


@lru_cache(maxsize=None)
def build_F() -> PolyMap:
    """Stage 1: (x,y) -> ((xy-1)^2 + x^2, (xy-1)^2 + y^2)."""
    s = (_X * _Y - 1) ** 2
    return PolyMap([s + _X ** 2, s + _Y ** 2])


@lru_cache(maxsize=None)
def build_G() -> PolyMap:
    """Stage 2: (x,y) -> (x, y(xy-2)^2 + x(xy-1)^2)."""
    t = _X * _Y
    return PolyMap([_X, _Y * (t - 2) ** 2 + _X * (t - 1) ** 2])


@lru_cache(maxsize=None)
def build_H() -> PolyMap:
    """Stage 3: (x,y) -> (x(xy-2)^2 + x*y^2/2, y)."""
    t = _X * _Y
    return PolyMap([_X * (t - 2) ** 2 + _HALF * _X * _Y ** 2, _Y])


@lru_cache(maxsize=None)
def build_GF() -> PolyMap:
    return map_compose(build_G(), build_F())


@lru_cache(maxsize=None)
def build_f() -> PolyMap:
    """The full composition H∘G∘F, expanded."""
    return map_compose(build_H(), build_GF())


# The old map, grouped as {y power: {x power: coefficient}}.  Transcribed from
# the published expanded form; the test suite diffs this against a second,
# independently parsed encoding and checks the published spot values.
_G1_BY_Y_POWER = {
    10: {18: 1, 16: 2, 14: 1},
    9: {17: -14, 15: -30, 14: 4, 13: -18, 12: 6, 11: -2, 10: 2},
    8: {16: 87, 14: 202, 13: -44, 12: 143, 11: -72, 10: 34, 9: -30, 8: 7, 7: -2, 6: 1},
    7: {15: -316, 13: -804, 12: 208, 11: -662, 10: 378, 9: -226, 8: 192, 7: -66, 6: 26,
        5: -12, 4: 2},
    6: {14: 743, 12: 2094, 11: -552, 10: 1985, 9: -1134, 8: 828, 7: -688, 6: 269,
        5: -128, 4: 58, 3: -12, 2: 1},
    5: {13: -1182, 11: -3726, 10: 900, 9: -4046, 8: 2124, 7: -1922, 6: 1522, 5: -622,
        4: 340, 3: -146, 2: 28, 1: -2},
    4: {12: 1289, 10: 4582, 9: -924, 8: 5702, 7: -2538, 6: 3022, 5: -2150, 4: 906,
        3: -558, 2: 207, 1: -30, 0: 1},
    3: {11: -952, 9: -3840, 8: 584, 7: -5504, 6: 1884, 5: -3286, 4: 1910, 3: -888,
        2: 586, 1: -162, 0: 12},
    2: {10: 456, 8: 2096, 7: -208, 6: 3487, 5: -792, 4: 2408, 3: -978, 2: 621,
        1: -372, 0: 55},
    1: {9: -128, 7: -672, 6: 32, 5: -1308, 4: 144, 3: -1080, 2: 220, 1: -308, 0: 112},
    0: {8: 16, 6: 96, 4: 220, 2: 224, 0: 85},
}

_G2_BY_Y_POWER = {
    12: {16: 1},
    11: {15: -14, 13: -2, 12: 2},
    10: {14: 89, 12: 26, 11: -22, 10: 1, 9: -2, 8: 1},
    9: {13: -338, 11: -152, 10: 108, 9: -12, 8: 20, 7: -8},
    8: {12: 849, 10: 524, 9: -308, 8: 64, 7: -88, 6: 28},
    7: {11: -1476, 9: -1176, 8: 558, 7: -198, 6: 220, 5: -54},
    6: {10: 1808, 8: 1792, 7: -662, 6: 391, 5: -340, 4: 61},
    5: {9: -1562, 7: -1878, 6: 514, 5: -512, 4: 332, 3: -40},
    4: {8: 944, 6: 1344, 5: -258, 4: 447, 3: -202, 2: 15},
    3: {7: -398, 5: -644, 4: 86, 3: -254, 2: 74, 1: -4},
    2: {6: 121, 4: 206, 3: -22, 2: 90, 1: -18, 0: 1},
    1: {5: -28, 3: -48, 2: 4, 1: -20, 0: 4},
    0: {4: 4, 2: 8, 0: 4},
}


def _from_grouped(grouped: dict[int, dict[int, int]]) -> Poly:
    return Poly(2, {(ex, ey): c for ey, row in grouped.items() for ex, c in row.items()})


@lru_cache(maxsize=None)
def build_g_old() -> PolyMap:
    """The earlier published quadrant map, exactly as printed (168 terms)."""
    return PolyMap([_from_grouped(_G1_BY_Y_POWER), _from_grouped(_G2_BY_Y_POWER)])


@lru_cache(maxsize=None)
def named_maps() -> dict[str, NamedMap]:
    return {
        "F": NamedMap("F", build_F(), "stage 1 of the composed quadrant map"),
        "G": NamedMap("G", build_G(), "stage 2 of the composed quadrant map"),
        "H": NamedMap("H", build_H(), "stage 3 of the composed quadrant map"),
        "GF": NamedMap("GF", build_GF(), "composition of stage 2 after stage 1"),
        "f": NamedMap(
            "f",
            build_f(),
            "full three-stage composition; its image is the open quadrant",
        ),
        "g": NamedMap(
            "g",
            build_g_old(),
            "earlier published quadrant map, transcribed from its expanded form",
        ),
    }


def get_map(name: str) -> NamedMap:
    maps = named_maps()
    if name not in maps:
        raise ValueError(f"unknown map {name!r}; known maps: {', '.join(MAP_NAMES)}")
    return maps[name]


def eval_stagewise(point: Sequence) -> tuple[Fraction, Fraction]:
    """Exact value of f at a point, computed stage by stage.

    Mathematically identical to evaluating the expanded f, but much cheaper:
    each stage is a handful of low-degree terms.
    """
    return build_H().evaluate(build_G().evaluate(build_F().evaluate(point)))
