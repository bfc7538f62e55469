"""
mclusters

Geometric models of m-cluster categories of types A and A-tilde:
m-diagonals on the polygon and the strip, (m+2)-angulations, their gentle
bound quivers, and exhaustive checks of the classification results.
"""

from .angulation import Angulation, Face, enumerate_angulations, validate_angulation
from .classify import classify
from .quiver import Arrow, BoundQuiver, bound_quiver, quivers_isomorphic
from .surface import Diagonal, Peripheral, Polygon, Strip, Transjective

__all__ = [
    "Angulation",
    "Arrow",
    "BoundQuiver",
    "Diagonal",
    "Face",
    "Peripheral",
    "Polygon",
    "Strip",
    "Transjective",
    "bound_quiver",
    "classify",
    "enumerate_angulations",
    "quivers_isomorphic",
    "validate_angulation",
]
