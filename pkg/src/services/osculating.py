"""
Incidence geometry of osculating planes.

Each surface case couples a frame model (the second-order system satisfied by
the position vector y) with the geometric datum a connection determines: a
line for conjugate (Laplace) nets, a pencil of planes for parabolic surfaces,
a plane in the second osculating space for general surfaces. The connection
coefficients are read off symbolic determinant expansions; the printed
coefficient maps travel alongside as cross-check values.

An element (v, w) is homogenized as (dx, du, d2x, d2u) = (1, v, 0, w).
"""

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations
from typing import Any, ClassVar, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp

from .connection import ProjConnection
from .errors import (
    AmbientDimensionError,
    FreeParameterError,
    GrassmannRelationError,
    ModelMismatchError,
    PencilError,
    PluckerRelationError,
    TangentPlaneIntersectionError,
    UnsupportedModelError,
    DomainError,
)
from .exact import BinaryForm3, as_poly, det, discriminant3, implicitize_cubic_curve, primitive, to_rat, to_sympy

logger = logging.getLogger(__name__)

DX, DU, D2X, D2U = sp.symbols("dx du d2x d2u")
FORM_VARIABLES = (DX, DU, D2X, D2U)
CHI = sp.symbols("chi1:6")
CHI1, CHI2, CHI3, CHI4, CHI5 = CHI

GENERIC = "generic"
QUADRIC = "quadric"
LINE = "line"


# Frame models

class SurfaceFrameModel:
    """Scalar coefficients of one frame system at the base point."""

    tag: ClassVar[str] = ""

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))

    def coefficients(self) -> Dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class AsymptoticNet(SurfaceFrameModel):
    """y_xx + c y + 2a y_x + 2b y_u = 0,  y_uu + c1 y + 2a1 y_x + 2b1 y_u = 0."""

    tag: ClassVar[str] = "asymptotic-net"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    b1: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)


@dataclass(frozen=True)
class LaplaceNet(SurfaceFrameModel):
    """y_xu + a y_x + b y_u + c y = 0."""

    tag: ClassVar[str] = "laplace-net"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)


@dataclass(frozen=True)
class Parabolic(SurfaceFrameModel):
    """y_uu = a y_x + b y_u + c y; the curves dx = 0 are asymptotic."""

    tag: ClassVar[str] = "parabolic"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)


@dataclass(frozen=True)
class GeneralSurface(SurfaceFrameModel):
    tag: ClassVar[str] = "general-surface"


@dataclass(frozen=True)
class PlaneSurface(SurfaceFrameModel):
    """
    A surface whose second osculating space is a plane:

        y_xu = c y + a y_x + b y_u
        y_xx = p y + alpha y_x + beta y_u
        y_uu = q y + r y_x + s y_u
    """

    tag: ClassVar[str] = "plane-surface"
    c: Fraction = Fraction(0)
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    p: Fraction = Fraction(0)
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)


@dataclass(frozen=True)
class Developable(SurfaceFrameModel):
    """
    y_xu = beta y + a y_x + b y_u,  y_xx = p y + alpha y_x.

    Recorded as data; no connection is extracted from it.
    """

    tag: ClassVar[str] = "developable"
    beta: Fraction = Fraction(0)
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    p: Fraction = Fraction(0)
    alpha: Fraction = Fraction(0)


MODELS = {cls.tag: cls for cls in (AsymptoticNet, LaplaceNet, Parabolic, GeneralSurface, PlaneSurface, Developable)}


def _vector(values: Iterable, length: Optional[int] = None) -> Tuple[Fraction, ...]:
    vector = tuple(Fraction(x) for x in values)
    if length is not None and len(vector) != length:
        raise AmbientDimensionError(f"expected {length} coordinates, got {len(vector)}")
    return vector


# Jets

@dataclass(frozen=True)
class SurfaceJet:
    """Position vector and its derivatives up to order two at the base point."""

    y: Tuple[Fraction, ...]
    y_x: Tuple[Fraction, ...]
    y_u: Tuple[Fraction, ...]
    y_xx: Tuple[Fraction, ...]
    y_xu: Tuple[Fraction, ...]
    y_uu: Tuple[Fraction, ...]

    def __post_init__(self):
        size = len(self.y)
        for f in fields(self):
            object.__setattr__(self, f.name, _vector(getattr(self, f.name), size))
        if not any(self.y):
            raise DomainError("surface jet needs a nonzero position vector", condition="zero-point")


def asymptotic_form(jet: SurfaceJet) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Coefficients (L, M, N) of the asymptotic form L dx^2 + 2M dx du + N du^2.

    Raises:
        AmbientDimensionError: Unless the jet lives in projective 3-space
    """
    if len(jet.y) != 4:
        raise AmbientDimensionError(f"asymptotic form needs 4 homogeneous coordinates, got {len(jet.y)}")
    frame = [jet.y, jet.y_x, jet.y_u]
    return tuple(to_rat(det([second, *frame])) for second in (jet.y_xx, jet.y_xu, jet.y_uu))


def is_developable(jet: SurfaceJet) -> bool:
    L, M, N = asymptotic_form(jet)
    return L * N - M**2 == 0


# Geometric data

def _minor(alpha: Sequence[Fraction], beta: Sequence[Fraction], i: int, j: int) -> Fraction:
    return alpha[i - 1] * beta[j - 1] - alpha[j - 1] * beta[i - 1]


@dataclass(frozen=True)
class PluckerLine:
    """A line of projective 3-space; p42 follows the classical ordering."""

    p12: Fraction
    p13: Fraction
    p14: Fraction
    p23: Fraction
    p42: Fraction
    p34: Fraction

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))
        if not any(self.as_tuple()):
            raise PluckerRelationError("all Plücker coordinates vanish")
        relation = self.p12 * self.p34 + self.p13 * self.p42 + self.p14 * self.p23
        if relation != 0:
            raise PluckerRelationError(f"p12 p34 + p13 p42 + p14 p23 = {relation}")

    @classmethod
    def from_points(cls, alpha: Sequence, beta: Sequence) -> "PluckerLine":
        alpha, beta = _vector(alpha, 4), _vector(beta, 4)
        return cls(
            p12=_minor(alpha, beta, 1, 2),
            p13=_minor(alpha, beta, 1, 3),
            p14=_minor(alpha, beta, 1, 4),
            p23=_minor(alpha, beta, 2, 3),
            p42=_minor(alpha, beta, 4, 2),
            p34=_minor(alpha, beta, 3, 4),
        )

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def coordinates(self) -> Dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def points(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        """Two points spanning the line, assuming p34 != 0."""
        return (
            (self.p13, self.p23, Fraction(0), -self.p34),
            (self.p14, -self.p42, self.p34, Fraction(0)),
        )


def _pencil_coordinates(alpha, beta) -> Dict[str, Fraction]:
    return {
        "p12": _minor(alpha, beta, 1, 2),
        "p13": _minor(alpha, beta, 1, 3),
        "p14": _minor(alpha, beta, 1, 4),
        "p23": _minor(alpha, beta, 2, 3),
        "p42": _minor(alpha, beta, 4, 2),
        "p34": _minor(alpha, beta, 3, 4),
    }


@dataclass(frozen=True)
class PencilData:
    """
    The pencil of planes spanned by y_x, y_u, alpha and beta dx + beta' du,
    with beta'_3 = beta'_4 = 0.
    """

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]
    beta_prime: Tuple[Fraction, ...]

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _vector(getattr(self, f.name), 4))
        if self.beta_prime[2] != 0 or self.beta_prime[3] != 0:
            raise PencilError("beta' must have vanishing third and fourth coordinates")
        if self.p["p34"] == 0:
            raise PencilError("alpha3 beta4 - alpha4 beta3 vanishes: every plane meets the tangent plane in a line")

    @property
    def p(self) -> Dict[str, Fraction]:
        return _pencil_coordinates(self.alpha, self.beta)

    @property
    def p_prime(self) -> Dict[str, Fraction]:
        return _pencil_coordinates(self.alpha, self.beta_prime)


GRASSMANN_INDICES: Tuple[Tuple[int, int, int], ...] = tuple(combinations(range(1, 6), 3))


def _parity(indices: Sequence[int]) -> int:
    inversions = sum(1 for i, j in combinations(range(len(indices)), 2) if indices[i] > indices[j])
    return -1 if inversions % 2 else 1


def _grassmann_relations(value) -> List[Fraction]:
    relations = []
    for first in combinations(range(1, 6), 2):
        for rest in combinations(range(1, 6), 4):
            total = Fraction(0)
            for s, j in enumerate(rest, start=1):
                complement = tuple(x for x in rest if x != j)
                total += (-1) ** s * value((*first, j)) * value(complement)
            relations.append(total)
    return relations


@dataclass(frozen=True)
class GrassmannPlane:
    """A plane of projective 4-space by its ten coordinates p_ikl, i<k<l."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = _vector(self.values)
        if len(values) != len(GRASSMANN_INDICES):
            raise GrassmannRelationError(f"expected 10 Grassmann coordinates, got {len(values)}")
        object.__setattr__(self, "values", values)
        if not any(values):
            raise GrassmannRelationError("all Grassmann coordinates vanish")
        if any(_grassmann_relations(self.coordinate)):
            raise GrassmannRelationError("coordinates do not satisfy the quadratic Grassmann relations")

    @classmethod
    def from_mapping(cls, coords: Mapping[Tuple[int, int, int], object]) -> "GrassmannPlane":
        return cls(tuple(Fraction(coords.get(index, 0)) for index in GRASSMANN_INDICES))

    @classmethod
    def from_points(cls, alpha: Sequence, beta: Sequence, gamma: Sequence) -> "GrassmannPlane":
        rows = [_vector(alpha, 5), _vector(beta, 5), _vector(gamma, 5)]
        return cls(tuple(
            to_rat(det([[row[i - 1] for i in index] for row in rows]))
            for index in GRASSMANN_INDICES
        ))

    def coordinate(self, index: Sequence[int]) -> Fraction:
        """Alternating access: p(k, i, l) = -p(i, k, l)."""
        if len(set(index)) < len(index):
            return Fraction(0)
        ordered = tuple(sorted(index))
        return _parity(index) * self.values[GRASSMANN_INDICES.index(ordered)]

    def coordinates(self) -> Dict[str, Fraction]:
        return {"p" + "".join(map(str, index)): value for index, value in zip(GRASSMANN_INDICES, self.values)}

    def points(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Three points spanning the plane, assuming p345 != 0."""
        p = self.coordinate
        return (
            tuple(p((i, 4, 5)) for i in range(1, 6)),
            tuple(p((i, 3, 5)) for i in range(1, 6)),
            tuple(p((i, 3, 4)) for i in range(1, 6)),
        )


Geometry = Union[PluckerLine, PencilData, GrassmannPlane]


# Incidence forms

@dataclass(frozen=True)
class IncidenceResult:
    """
    form: the incidence cubic, scaled so dx*d2u has coefficient 1
    connection: coefficients read off the form
    printed_map: the closed-form coefficient map evaluated on the same data
    """

    form: sp.Poly
    connection: ProjConnection
    printed_map: ProjConnection


def connection_from_form(form: sp.Poly) -> Tuple[sp.Poly, ProjConnection]:
    """
    Read (A, B, C, D) from k (dx d2u - du d2x) - (A dx^3 + B dx^2 du + C dx du^2 + D du^3).

    Raises:
        TangentPlaneIntersectionError: If the second-order part vanishes
    """
    form = as_poly(form, FORM_VARIABLES)
    k = form.coeff_monomial(DX * D2U)
    if k == 0:
        raise TangentPlaneIntersectionError("the incidence form has no second-order part")
    form = as_poly(form.as_expr() / k, FORM_VARIABLES)
    expected = {(1, 0, 0, 1), (0, 1, 1, 0), (3, 0, 0, 0), (2, 1, 0, 0), (1, 2, 0, 0), (0, 3, 0, 0)}
    stray = set(form.monoms()) - expected
    if stray or form.coeff_monomial(DU * D2X) != -1:
        raise DomainError(f"not a connection form: {form.as_expr()}", condition="not-a-connection-form")
    cubic = [-to_rat(form.coeff_monomial(m)) for m in (DX**3, DX**2 * DU, DX * DU**2, DU**3)]
    return form, ProjConnection(*cubic)


def _laplace_form(model: LaplaceNet, line: PluckerLine) -> Tuple[sp.Expr, ProjConnection]:
    if line.p34 == 0:
        raise TangentPlaneIntersectionError("p34 = 0: the line meets the tangent plane")
    alpha, beta = line.points()
    a, b = to_sympy(model.a), to_sympy(model.b)
    rows = [
        [DX, DU, 0, 0],
        [D2X - 2 * a * DX * DU, D2U - 2 * b * DX * DU, DX**2, DU**2],
        list(alpha),
        list(beta),
    ]
    p = {name: value / line.p34 for name, value in line.coordinates().items()}
    printed = ProjConnection(
        -p["p42"],
        -2 * model.b - p["p14"],
        -2 * model.a - p["p23"],
        p["p13"],
    )
    return det(rows), printed


def _parabolic_form(model: Parabolic, pencil: PencilData) -> Tuple[sp.Expr, ProjConnection]:
    a, b = to_sympy(model.a), to_sympy(model.b)
    moving = [x * DX + y * DU for x, y in zip(pencil.beta, pencil.beta_prime)]
    rows = [
        [DX, DU, 0, 0],
        [D2X + a * DU**2, D2U + b * DU**2, DX**2, 2 * DX * DU],
        list(pencil.alpha),
        moving,
    ]
    full = as_poly(det(rows), FORM_VARIABLES)
    reduced = full.exquo(as_poly(DX, FORM_VARIABLES))
    scale = pencil.p["p34"]
    p = {name: value / scale for name, value in pencil.p.items()}
    q = {name: value / scale for name, value in pencil.p_prime.items()}
    printed = ProjConnection(
        -p["p42"],
        -(2 * p["p23"] + p["p14"] + q["p42"]),
        2 * p["p13"] - model.b - (2 * q["p23"] + q["p14"]),
        model.a + 2 * q["p13"],
    )
    return reduced.as_expr(), printed


def _general_form(plane: GrassmannPlane) -> Tuple[sp.Expr, ProjConnection]:
    p = plane.coordinate
    if p((3, 4, 5)) == 0:
        raise TangentPlaneIntersectionError("p345 = 0: the plane meets the tangent plane")
    rows = [
        [D2X, D2U, DX**2, 2 * DX * DU, DU**2],
        [DX, DU, 0, 0, 0],
        *[list(point) for point in plane.points()],
    ]
    scale = p((3, 4, 5))
    q = {index: p(index) / scale for index in GRASSMANN_INDICES}
    printed = ProjConnection(
        q[(2, 4, 5)],
        -(2 * q[(2, 3, 5)] + q[(1, 4, 5)]),
        2 * q[(1, 3, 5)] + q[(2, 3, 4)],
        -q[(1, 3, 4)],
    )
    return det(rows), printed


def incidence_form(model: SurfaceFrameModel, geometry: Geometry) -> IncidenceResult:
    """
    Expand the determinant stating that the osculating plane of a curve meets
    the given geometric datum, and extract the connection it defines.

    Raises:
        ModelMismatchError: If the geometry does not belong to the model's case
        UnsupportedModelError: For models without an incidence condition
        TangentPlaneIntersectionError: If the datum meets the tangent plane
    """
    if isinstance(model, LaplaceNet):
        if not isinstance(geometry, PluckerLine):
            raise ModelMismatchError("a conjugate net pairs with a Plücker line")
        expr, printed = _laplace_form(model, geometry)
    elif isinstance(model, Parabolic):
        if not isinstance(geometry, PencilData):
            raise ModelMismatchError("a parabolic surface pairs with a pencil")
        expr, printed = _parabolic_form(model, geometry)
    elif isinstance(model, GeneralSurface):
        if not isinstance(geometry, GrassmannPlane):
            raise ModelMismatchError("a general surface pairs with a Grassmann plane")
        expr, printed = _general_form(geometry)
    else:
        raise UnsupportedModelError(f"no incidence condition for {model.tag}")
    form, connection = connection_from_form(as_poly(expr, FORM_VARIABLES))
    if connection != printed:
        logger.debug("printed coefficient map disagrees: %s vs %s", printed, connection)
    return IncidenceResult(form=form, connection=connection, printed_map=printed)


def _free_parameters(free: Optional[Mapping[str, object]], allowed: Sequence[str]) -> Dict[str, Fraction]:
    free = dict(free or {})
    unknown = sorted(set(free) - set(allowed))
    if unknown:
        raise FreeParameterError(f"unknown free parameters {unknown}; allowed: {list(allowed)}")
    values = {name: Fraction(0) for name in allowed}
    values.update({name: Fraction(value) for name, value in free.items()})
    return values


def geometry_from_connection(
    model: SurfaceFrameModel,
    k: ProjConnection,
    free: Optional[Mapping[str, object]] = None,
) -> Geometry:
    """
    A geometric datum whose incidence form is the connection k.

    The parabolic and general cases are underdetermined; their free
    parameters (alpha1, beta1 and p145, p135) default to zero.
    """
    A, B, C, D = k.cubic()
    if isinstance(model, LaplaceNet):
        _free_parameters(free, ())
        p13, p42 = D, -A
        p14, p23 = 2 * model.b - B, -2 * model.a - C
        return PluckerLine(p12=-(p13 * p42 + p14 * p23), p13=p13, p14=p14, p23=p23, p42=p42, p34=1)
    if isinstance(model, Parabolic):
        values = _free_parameters(free, ("alpha1", "beta1"))
        alpha1, beta1 = values["alpha1"], values["beta1"]
        return PencilData(
            alpha=(alpha1, A, 1, 0),
            beta=(beta1, (B + alpha1) / 2, 0, 1),
            beta_prime=((model.a - D) / 2, (C + model.b + 2 * beta1) / 2, 0, 0),
        )
    if isinstance(model, GeneralSurface):
        values = _free_parameters(free, ("p145", "p135"))
        x11, x21 = values["p145"], -values["p135"]
        return GrassmannPlane.from_points(
            (x11, A, 1, 0, 0),
            (x21, (B + x11) / 2, 0, 1, 0),
            (-D, C + 2 * x21, 0, 0, 1),
        )
    raise UnsupportedModelError(f"no geometry is attached to connections on a {model.tag} model")


# Envelopes of osculating planes (asymptotic nets)

def _require(model: SurfaceFrameModel, kind: type) -> None:
    if isinstance(model, Developable):
        raise UnsupportedModelError("developable models carry no connection geometry")
    if not isinstance(model, kind):
        raise ModelMismatchError(f"expected a {kind.tag} model, got {model.tag}")


def plane_family(model: AsymptoticNet, k: ProjConnection) -> BinaryForm3:
    """
    The osculating planes of the geodesics through the base point, as a
    cubic form in the direction (s:t) with coefficients linear in (chi2, chi3, chi4).
    """
    _require(model, AsymptoticNet)
    A, B, C, D = (to_sympy(x) for x in k.cubic())
    a, b, a1, b1 = (to_sympy(x) for x in (model.a, model.b, model.a1, model.b1))
    return BinaryForm3(
        (A - 2 * b) * CHI4,
        -2 * CHI3 + (B + 2 * a) * CHI4,
        2 * CHI2 + (C - 2 * b1) * CHI4,
        (D + 2 * a1) * CHI4,
    )


def envelope_tangential_cubic(model: AsymptoticNet, k: ProjConnection) -> sp.Poly:
    """Class equation of the envelope cone in plane coordinates (chi2, chi3, chi4)."""
    coefficients = plane_family(model, k).coefficients()
    # each plane of the family has coordinates (coefficient of chi2, chi3, chi4)
    dual = [BinaryForm3(*(c.coeff(chi) for c in coefficients)) for chi in (CHI2, CHI3, CHI4)]
    return implicitize_cubic_curve(*dual, gens=(CHI2, CHI3, CHI4))


@dataclass(frozen=True)
class EnvelopeLocus:
    classification: str
    discriminant: sp.Poly
    reduced: Tuple[sp.Poly, ...]


def envelope_point_locus(model: AsymptoticNet, k: ProjConnection) -> EnvelopeLocus:
    """
    Point equation of the envelope: the discriminant of the plane family.

    A vanishing first or last coefficient of the family splits off a square
    factor and leaves a quadric cone; both vanishing leaves a pencil, whose
    envelope is its axis.
    """
    family = plane_family(model, k)
    c0, c1, c2, c3 = family.coefficients()
    gens = (CHI2, CHI3, CHI4)
    disc = primitive(as_poly(discriminant3(family), gens))
    if c0 == 0 and c3 == 0:
        classification = LINE
        reduced = (primitive(as_poly(c1, gens)), primitive(as_poly(c2, gens)))
    elif c3 == 0:
        classification = QUADRIC
        reduced = (primitive(as_poly(c1**2 - 4 * c0 * c2, gens)),)
    elif c0 == 0:
        classification = QUADRIC
        reduced = (primitive(as_poly(c2**2 - 4 * c1 * c3, gens)),)
    else:
        classification = GENERIC
        reduced = (disc,)
    return EnvelopeLocus(classification=classification, discriminant=disc, reduced=reduced)


# Union loci

def union_locus_conjugate(model: LaplaceNet, k: ProjConnection) -> sp.Poly:
    """Locus in (chi1..chi4) swept by the osculating planes of the geodesics."""
    _require(model, LaplaceNet)
    A, B, C, D = (to_sympy(x) for x in k.cubic())
    a, b = to_sympy(model.a), to_sympy(model.b)
    first = CHI2 - A * CHI3 - (C + 2 * a) * CHI4
    second = CHI1 + D * CHI4 + (B - 2 * b) * CHI3
    return primitive(as_poly(first**2 * CHI3 - second**2 * CHI4, CHI[:4]))


def union_locus_general(plane: GrassmannPlane) -> Tuple[sp.Poly, sp.Poly, sp.Poly]:
    """
    Three equations in (chi1..chi5) cutting out the union of the osculating
    planes whose incidence with the plane defines the connection.

    Raises:
        TangentPlaneIntersectionError: If p345 = 0
    """
    if plane.coordinate((3, 4, 5)) == 0:
        raise TangentPlaneIntersectionError("p345 = 0: the plane meets the tangent plane")
    points = [list(point) for point in plane.points()]
    chi = list(CHI)
    e1, e2 = [1, 0, 0, 0, 0], [0, 1, 0, 0, 0]
    la = det([e1, chi, *points])
    lb = -det([e2, chi, *points])
    return (
        primitive(as_poly(2 * la * CHI3 - lb * CHI4, CHI)),
        primitive(as_poly(la * CHI4 - 2 * lb * CHI5, CHI)),
        primitive(as_poly(CHI4**2 - 4 * CHI3 * CHI5, CHI)),
    )


def conjugate_osculating_point(model: LaplaceNet, dx, du, d2x, d2u, rho) -> Tuple[Any, ...]:
    """
    Point y'' + rho y' of an osculating plane, in the frame (y_x, y_u, y_xx, y_uu)
    with y_xu eliminated by the Laplace equation. Entries may be symbolic.
    """
    a, b = to_sympy(model.a), to_sympy(model.b)
    return (
        d2x - 2 * a * dx * du + rho * dx,
        d2u - 2 * b * dx * du + rho * du,
        dx**2,
        du**2,
    )


def general_osculating_point(dx, du, d2x, d2u, rho) -> Tuple[Any, ...]:
    """Point y'' + rho y' in the frame (y_x, y_u, y_xx, y_xu, y_uu)."""
    return (d2x + rho * dx, d2u + rho * du, dx**2, 2 * dx * du, du**2)


# Plane surfaces

def straight_lines_connection(model: PlaneSurface) -> ProjConnection:
    """Connection satisfied by the straight lines of a plane surface frame."""
    _require(model, PlaneSurface)
    v, w = sp.symbols("v w")
    m = {name: to_sympy(value) for name, value in model.coefficients().items()}
    rows = [
        [1, 0, 0],
        [0, 1, v],
        [
            m["p"] + 2 * m["c"] * v + m["q"] * v**2,
            m["alpha"] + 2 * m["a"] * v + m["r"] * v**2,
            m["beta"] + 2 * m["b"] * v + m["s"] * v**2 + w,
        ],
    ]
    expansion = sp.Poly(det(rows), v, w, domain=sp.QQ)
    k = expansion.coeff_monomial(w)
    cubic = [-to_rat(expansion.coeff_monomial(v**i) / k) for i in range(4)]
    return ProjConnection(*cubic)
