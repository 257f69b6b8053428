"""
The cubic cone over the twisted cubic in projective 4-space.

An element (v, w) embeds as [1 : v : v^2 : v^3 : w]; the images fill the cone
with vertex [0:0:0:0:1] over the curve [1 : v : v^2 : v^3 : 0]. JetMaps act on
the cone linearly through g_from_jetmap.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import sympy as sp

from .errors import (
    CoincidentGeneratorsError,
    ConeVertexError,
    DegenerateConfigurationError,
    SingularMatrixError,
    ZeroPointError,
)
from .invariants import cross_ratio
from .jet import PROBE_ELEMENTS, Element2, JetMap, symmetric_cube_rows
from .exact import to_rat, to_sympy

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class ConePoint:
    """Homogeneous point, stored with its first nonzero coordinate equal to 1."""

    z: Tuple[Fraction, ...]

    def __post_init__(self):
        z = tuple(Fraction(x) for x in self.z)
        if len(z) != 5:
            raise DegenerateConfigurationError(f"cone points have 5 coordinates, got {len(z)}")
        lead = next((x for x in z if x != 0), None)
        if lead is None:
            raise ZeroPointError("all homogeneous coordinates vanish")
        object.__setattr__(self, "z", tuple(x / lead for x in z))

    @classmethod
    def from_coordinates(cls, *z) -> "ConePoint":
        return cls(tuple(z))

    @property
    def is_vertex(self) -> bool:
        return not any(self.z[:4])


VERTEX = ConePoint((0, 0, 0, 0, 1))


def embed(e: Element2) -> ConePoint:
    return ConePoint((1, e.v, e.v**2, e.v**3, e.w))


def on_cone(p: ConePoint) -> bool:
    z1, z2, z3, z4, _ = p.z
    return z1 * z3 - z2**2 == 0 and z2 * z3 - z1 * z4 == 0 and z3**2 - z2 * z4 == 0


def _determinant(rows: Matrix) -> Fraction:
    return to_rat(sp.Matrix([[to_sympy(x) for x in row] for row in rows]).det())


def _checked(rows: Sequence[Sequence]) -> Matrix:
    matrix = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if _determinant(matrix) == 0:
        raise SingularMatrixError("matrix is not invertible")
    return matrix


def g_from_jetmap(g: JetMap) -> Matrix:
    """
    The 5x5 matrix G with G embed(e) proportional to embed(apply(g, e)).

    Rows 1..4 expand (a v + b)^k (c v + d)^(3 - k); row 5 carries the shear
    and the determinant.
    """
    rows = [row + [Fraction(0)] for row in symmetric_cube_rows(*g.linear)]
    rows.append([*g.shear, g.det])
    return tuple(tuple(row) for row in rows)


def sym3(m: Sequence[Sequence]) -> Matrix:
    """
    Symmetric cube of [[a, b], [c, d]], acting on (1, v, v^2, v^3) as the map
    v -> (a v + b) / (c v + d).

    Raises:
        SingularMatrixError: If ad - bc = 0
    """
    (a, b), (c, d) = m
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    if a * d - b * c == 0:
        raise SingularMatrixError("sym3 of a singular matrix")
    return tuple(tuple(row) for row in symmetric_cube_rows(a, b, c, d))


def apply_gmat(G: Sequence[Sequence], p: ConePoint) -> ConePoint:
    image = [sum((Fraction(entry) * z for entry, z in zip(row, p.z)), Fraction(0)) for row in G]
    return ConePoint(tuple(image))


def preserves_cone(G: Sequence[Sequence]) -> bool:
    """Checks the images of the embedded probe elements and of the vertex."""
    G = _checked(G)
    points = [embed(Element2(v, w)) for v, w in PROBE_ELEMENTS] + [VERTEX]
    return all(on_cone(apply_gmat(G, p)) for p in points)


def _generator(p: ConePoint) -> Tuple[Fraction, Fraction]:
    """Homogeneous twisted-cubic parameter (v : 1) of the generator through p."""
    if p.is_vertex:
        raise ConeVertexError("the vertex lies on every generator")
    if not on_cone(p):
        raise DegenerateConfigurationError(f"{p.z} is not on the cone", condition="off-cone")
    z1, z2, _, z4, _ = p.z
    if z1 == 0:
        return (z4, Fraction(0))
    return (z2, z1)


def cone_cross_ratio(points: Sequence[ConePoint]) -> Fraction:
    """
    Cross-ratio of the generators through four cone points.

    Raises:
        ConeVertexError: If a point is the vertex
        CoincidentGeneratorsError: If two points share a generator
    """
    if len(points) != 4:
        raise DegenerateConfigurationError(f"cross-ratio needs four points, got {len(points)}")
    params = [_generator(p) for p in points]
    for i in range(4):
        for j in range(i + 1, 4):
            if params[i][0] * params[j][1] - params[j][0] * params[i][1] == 0:
                raise CoincidentGeneratorsError(f"points {i + 1} and {j + 1} lie on one generator")
    if all(y != 0 for _, y in params):
        return cross_ratio(*(x / y for x, y in params))

    def bracket(i, j):
        (xi, yi), (xj, yj) = params[i], params[j]
        return xi * yj - xj * yi

    # one generator lies over v = infinity
    return bracket(2, 0) * bracket(3, 1) / (bracket(3, 0) * bracket(2, 1))
