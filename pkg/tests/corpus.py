"""
Shared test data: fixture quivers and cached enumerations, so that every
test module (acceptance included) enumerates each surface at most once.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import List, Tuple

from mclusters.angulation import Angulation, enumerate_angulations, validate_angulation
from mclusters.formats import parse_quiver
from mclusters.quiver import Arrow, BoundQuiver, bound_quiver
from mclusters.surface import Diagonal, Polygon, Strip, Transjective

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# the strip parameter sets whose enumerations the theorems are checked on
LISTED_STRIPS: List[Tuple[int, int, int]] = [
    (1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 2),
]
# small extra sets where representation-infinite quivers carry saturated cycles
EXTRA_STRIPS: List[Tuple[int, int, int]] = [(1, 3, 1), (1, 3, 2), (2, 3, 1), (2, 2, 3)]


@lru_cache(maxsize=None)
def strip_angulations(m: int, p: int, q: int, winding: int = 2) -> Tuple[Angulation, ...]:
    return tuple(enumerate_angulations(Strip(m, p, q), winding))


@lru_cache(maxsize=None)
def strip_quivers(m: int, p: int, q: int, winding: int = 2) -> Tuple[BoundQuiver, ...]:
    return tuple(bound_quiver(a) for a in strip_angulations(m, p, q, winding))


@lru_cache(maxsize=None)
def polygon_angulations(m: int, n: int) -> Tuple[Angulation, ...]:
    return tuple(enumerate_angulations(Polygon(m, n)))


def q7() -> BoundQuiver:
    return parse_quiver((FIXTURES / "q7.quiver").read_text())


def q7_cut() -> BoundQuiver:
    return parse_quiver((FIXTURES / "q7-cut.quiver").read_text())


def kronecker_angulation() -> Angulation:
    return validate_angulation(Strip(1, 1, 1), [Transjective(0, 0), Transjective(1, 0)])


def kronecker() -> BoundQuiver:
    return bound_quiver(kronecker_angulation())


def a2() -> BoundQuiver:
    return BoundQuiver((1, 2), (Arrow(0, 1, 2),))


def fan_pentagon() -> Angulation:
    return validate_angulation(Polygon(1, 3), [Diagonal(0, 2), Diagonal(0, 3)])


def saturated_triangle() -> BoundQuiver:
    arrows = (Arrow(0, 0, 1), Arrow(1, 1, 2), Arrow(2, 2, 0))
    return BoundQuiver((0, 1, 2), arrows, frozenset({(0, 1), (1, 2), (2, 0)}))
