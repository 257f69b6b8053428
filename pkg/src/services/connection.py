"""
Projective connections u'' = A + B u' + C u'^2 + D u'^3, rank-two equations,
fitting, pullback under a JetMap and centre-of-curvature loci.
"""

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Sequence, Tuple

import sympy as sp

from .errors import (
    CentreAtInfinityError,
    DomainError,
    InflectionError,
    SingularSystemError,
)
from .exact import as_poly, primitive, to_rat, to_sympy
from .jet import Element2, JetMap, substituted_cubic

logger = logging.getLogger(__name__)

V, W = sp.symbols("v w")
X0, Y0 = sp.symbols("x0 y0")

SEXTIC = "sextic"
QUARTIC = "quartic"
CONIC = "conic"


@dataclass(frozen=True)
class ProjConnection:
    """
    Connection coefficients of E u'' = A + B u' + C u'^2 + D u'^3.

    E is kept as given for display; comparisons and computations use the
    normalized cubic (A/E, B/E, C/E, D/E).
    """

    A: Fraction = Fraction(0)
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    D: Fraction = Fraction(0)
    E: Fraction = Fraction(1)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))
        if self.E == 0:
            raise DomainError("a connection needs E != 0", condition="E=0")

    def __eq__(self, other):
        if not isinstance(other, ProjConnection):
            return NotImplemented
        return self.cubic() == other.cubic()

    def __hash__(self):
        return hash(self.cubic())

    @classmethod
    def from_homogeneous(cls, A, B, C, D, E=1) -> "ProjConnection":
        return cls(A, B, C, D, E)

    def normalized(self) -> "ProjConnection":
        return ProjConnection(*self.cubic())

    def cubic(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(x / self.E for x in (self.A, self.B, self.C, self.D))

    def evaluate(self, v) -> Fraction:
        v = Fraction(v)
        A, B, C, D = self.cubic()
        return A + B * v + C * v**2 + D * v**3

    def to_poly(self) -> sp.Poly:
        """w - (A + B v + C v^2 + D v^3) over QQ in (v, w)."""
        cubic = sum(to_sympy(c) * V**i for i, c in enumerate(self.cubic()))
        return as_poly(W - cubic, (V, W))


@dataclass(frozen=True)
class RankTwoEq:
    """A0 w^2 + (B0 + ... + B3 v^3) w + (C0 + ... + C6 v^6) = 0."""

    A0: Fraction
    B: Tuple[Fraction, ...]
    C: Tuple[Fraction, ...]

    def __post_init__(self):
        B = tuple(Fraction(x) for x in self.B)
        C = tuple(Fraction(x) for x in self.C)
        if len(B) != 4 or len(C) != 7:
            raise DomainError(f"rank-two equation needs 4 B and 7 C coefficients, got {len(B)} and {len(C)}")
        object.__setattr__(self, "A0", Fraction(self.A0))
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        if self.A0 == 0 and not any(B) and not any(C):
            raise DomainError("rank-two equation has all coefficients zero", condition="zero-equation")

    def to_poly(self) -> sp.Poly:
        expr = to_sympy(self.A0) * W**2
        expr += sum(to_sympy(b) * V**k for k, b in enumerate(self.B)) * W
        expr += sum(to_sympy(c) * V**k for k, c in enumerate(self.C))
        return as_poly(expr, (V, W))


@dataclass(frozen=True)
class Centre:
    x0: Fraction
    y0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x0", Fraction(self.x0))
        object.__setattr__(self, "y0", Fraction(self.y0))


def satisfies(k: ProjConnection, e: Element2) -> bool:
    return e.w == k.evaluate(e.v)


def fit_connection(elements: Sequence[Element2]) -> ProjConnection:
    """
    The connection through four elements with distinct directions.

    Raises:
        SingularSystemError: If two directions coincide
    """
    if len(elements) != 4:
        raise SingularSystemError(f"fitting needs exactly four elements, got {len(elements)}")
    vs = [e.v for e in elements]
    if len(set(vs)) < 4:
        raise SingularSystemError("Vandermonde system is singular: directions coincide")
    system = sp.Matrix([[to_sympy(v) ** i for i in range(4)] for v in vs])
    rhs = sp.Matrix([to_sympy(e.w) for e in elements])
    solution = system.LUsolve(rhs)
    return ProjConnection(*(to_rat(x) for x in solution))


def transform_connection(g: JetMap, k: ProjConnection) -> ProjConnection:
    """Image of k under g: on-connection elements go to on-connection elements."""
    shifted = [q + g.det * p for q, p in zip(g.shear, k.cubic())]
    pulled = substituted_cubic(shifted, g.d, -g.b, -g.c, g.a)
    return ProjConnection(*(x / g.det**3 for x in pulled))


def centre(e: Element2) -> Centre:
    """
    Raises:
        InflectionError: If w = 0
    """
    if e.w == 0:
        raise InflectionError(f"element with v={e.v} has w=0 and no centre of curvature")
    lift = 1 + e.v**2
    return Centre(-e.v * lift / e.w, lift / e.w)


def centre_transform(g: JetMap, p: Centre) -> Centre:
    """
    Raises:
        CentreAtInfinityError: If the transformed centre has no affine position
    """
    x0, y0 = p.x0, p.y0
    lam, mu, nu, xi = g.shear
    den = lam * y0**3 - mu * x0 * y0**2 + nu * x0**2 * y0 - xi * x0**3 + g.det * (x0**2 + y0**2)
    if den == 0:
        raise CentreAtInfinityError(f"centre ({x0}, {y0}) is sent to infinity")
    P = g.a * x0 - g.b * y0
    Q = g.c * x0 - g.d * y0
    scale = (P**2 + Q**2) / den
    return Centre(P * scale, -Q * scale)


def centre_substitution(expr: Any) -> sp.Expr:
    """
    Substitute v = -x0/y0, w = (x0^2+y0^2)/y0^3 into a polynomial in (v, w)
    and clear denominators with y0^N, N = max(i + 3j) over its monomials.

    Coefficients may be symbolic.
    """
    if isinstance(expr, sp.Poly):
        expr = expr.as_expr()
    poly = sp.Poly(sp.expand(to_sympy(expr)), V, W)
    if poly.is_zero:
        raise DomainError("central locus of the zero equation", condition="zero-equation")
    terms = poly.terms()
    top = max(i + 3 * j for (i, j), _ in terms)
    return sp.expand(sum(
        coeff * (-X0) ** i * Y0 ** (top - i - 3 * j) * (X0**2 + Y0**2) ** j
        for (i, j), coeff in terms
    ))


def central_locus(eqn: Any) -> sp.Poly:
    """Primitive plane curve in (x0, y0) traced by the centres of the solutions."""
    if isinstance(eqn, (ProjConnection, RankTwoEq)):
        eqn = eqn.to_poly()
    locus = as_poly(centre_substitution(eqn), (X0, Y0))
    lowest = min(monom[1] for monom in locus.monoms())
    if lowest:
        locus = locus.exquo(as_poly(Y0**lowest, (X0, Y0)))
    return primitive(locus)


def central_locus_rank1(k: ProjConnection) -> sp.Poly:
    """E(x0^2+y0^2) + D x0^3 - C x0^2 y0 + B x0 y0^2 - A y0^3, normalized."""
    return central_locus(k)


def classify_rank2(eqn: RankTwoEq) -> Tuple[str, sp.Poly]:
    """
    Sextic central locus, or the quartic/conic left after dividing out the
    circular factors x0^2 + y0^2.
    """
    B, C = eqn.B, eqn.C
    sextic = central_locus(eqn)
    circle = as_poly(X0**2 + Y0**2, (X0, Y0))
    if not (C[3] == C[1] + C[5] and C[0] + C[4] == C[2] + C[6]):
        return SEXTIC, sextic
    quartic = sextic.exquo(circle)
    if B[0] == B[2] and B[1] == B[3] and C[1] == C[5] and C[0] + 2 * C[6] == C[4]:
        logger.debug("rank-two locus degenerates to a conic")
        return CONIC, primitive(quartic.exquo(circle))
    return QUARTIC, primitive(quartic)
