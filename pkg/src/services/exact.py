"""
Exact scalar and polynomial kernel.

Rationals are `fractions.Fraction`; polynomials are sympy expressions, turned
into `sympy.Poly` over QQ whenever a variable list matters. Every locus handed
back to a caller goes through `primitive`.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Any, Iterable, Optional, Sequence, Tuple

import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester

from .errors import DegenerateImageError, ResultantDegreeError, ShapeError

logger = logging.getLogger(__name__)

Rat = Fraction

U, V, W = sp.symbols("U V W")
_S, _T = sp.symbols("s_ t_")


def parse_rat(value: Any) -> Fraction:
    """
    Convert an integer, a "p/q" string or a decimal string to a Fraction.

    Floats are refused: "0.1" is read as 1/10, never through binary floating
    point.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rat(value: Any) -> str:
    return str(to_rat(value))


def to_rat(value: Any) -> Fraction:
    """Convert an int, Fraction or rational sympy number to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    number = sp.sympify(value)
    if not number.is_Rational:
        raise TypeError(f"{value!r} is not an exact rational")
    return Fraction(int(number.p), int(number.q))


def to_sympy(value: Any) -> sp.Expr:
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.sympify(value)


def as_poly(expr: Any, gens: Sequence[sp.Symbol]) -> sp.Poly:
    """A polynomial over QQ in exactly the given variables."""
    if isinstance(expr, sp.Poly):
        expr = expr.as_expr()
    return sp.Poly(sp.expand(to_sympy(expr)), *gens, domain=sp.QQ)


def primitive(poly: sp.Poly) -> sp.Poly:
    """
    Canonical representative of a polynomial up to a rational scalar.

    Divides by the rational content and fixes the sign so that the
    lexicographically first coefficient is positive.
    """
    if poly.is_zero:
        return poly
    coeffs = [sp.Rational(c) for c in poly.coeffs()]
    numerators = reduce(gcd, (abs(int(c.p)) for c in coeffs))
    denominators = reduce(lcm, (int(c.q) for c in coeffs))
    scale = sp.Rational(denominators, numerators)
    if coeffs[0] < 0:
        scale = -scale
    return as_poly(poly.as_expr() * scale, poly.gens)


def proportional(p: sp.Poly, q: sp.Poly) -> bool:
    """True when p and q agree up to a nonzero rational factor."""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return primitive(p) == primitive(as_poly(q, p.gens))


def exact_quotient(p: sp.Poly, q: sp.Poly) -> sp.Poly:
    """Exact division; raises sympy's ExactQuotientFailed on a remainder."""
    return p.exquo(as_poly(q, p.gens))


def det(rows: Sequence[Sequence[Any]]) -> sp.Expr:
    """
    Exact determinant of a square matrix of polynomial entries.

    Raises:
        ShapeError: If the rows do not form a square matrix
    """
    widths = {len(row) for row in rows}
    if len(widths) > 1 or (rows and widths != {len(rows)}):
        raise ShapeError(f"determinant needs a square matrix, got {len(rows)} rows of widths {sorted(widths)}")
    if not rows:
        return sp.Integer(1)
    matrix = sp.Matrix([[to_sympy(entry) for entry in row] for row in rows])
    return sp.expand(matrix.det(method="berkowitz"))


@dataclass(frozen=True)
class BinaryForm3:
    """c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3 with polynomial coefficients."""

    c0: Any
    c1: Any
    c2: Any
    c3: Any

    def coefficients(self) -> Tuple[sp.Expr, sp.Expr, sp.Expr, sp.Expr]:
        return tuple(sp.expand(to_sympy(c)) for c in (self.c0, self.c1, self.c2, self.c3))

    def as_expr(self, s: sp.Expr, t: sp.Expr) -> sp.Expr:
        c0, c1, c2, c3 = self.coefficients()
        return sp.expand(c0 * s**3 + c1 * s**2 * t + c2 * s * t**2 + c3 * t**3)


def discriminant3(form: BinaryForm3) -> sp.Expr:
    c0, c1, c2, c3 = form.coefficients()
    return sp.expand(
        18 * c0 * c1 * c2 * c3
        - 4 * c1**3 * c3
        + c1**2 * c2**2
        - 4 * c0 * c2**3
        - 27 * c0**2 * c3**2
    )


def resultant(p: Any, q: Any, var: sp.Symbol) -> sp.Expr:
    """
    Sylvester resultant of p and q with respect to var, p-rows first.

    Raises:
        ResultantDegreeError: If p or q does not involve var
    """
    p, q = sp.expand(to_sympy(p)), sp.expand(to_sympy(q))
    for name, f in (("p", p), ("q", q)):
        if sp.degree(f, var) <= 0:
            raise ResultantDegreeError(f"{name} has degree 0 in {var}")
    return sp.expand(sylvester(p, q, var, 1).det(method="berkowitz"))


def _monomials(degree: int, count: int) -> Iterable[Tuple[int, ...]]:
    for combo in combinations_with_replacement(range(count), degree):
        yield tuple(combo.count(i) for i in range(count))


def implicitize_cubic_curve(
    u: BinaryForm3,
    v: BinaryForm3,
    w: BinaryForm3,
    gens: Optional[Sequence[sp.Symbol]] = None,
) -> sp.Poly:
    """
    Implicit equation of the plane curve (s:t) -> [u:v:w].

    Looks for the homogeneous relation of least degree (one to three) by
    solving the linear system on its unknown coefficients.

    Raises:
        DegenerateImageError: If the three forms are proportional
    """
    gens = tuple(gens or (U, V, W))
    forms = (u, v, w)
    coefficient_rows = sp.Matrix([list(f.coefficients()) for f in forms])
    if coefficient_rows.rank() <= 1:
        raise DegenerateImageError("the parametrization collapses to a point")

    images = [f.as_expr(_S, _T) for f in forms]
    for degree in (1, 2, 3):
        exponents = list(_monomials(degree, 3))
        unknowns = sp.symbols(f"k0:{len(exponents)}")
        combination = sum(
            k * images[0] ** e[0] * images[1] ** e[1] * images[2] ** e[2]
            for k, e in zip(unknowns, exponents)
        )
        equations = sp.Poly(sp.expand(combination), _S, _T).coeffs()
        matrix, _ = sp.linear_eq_to_matrix(equations, unknowns)
        kernel = matrix.nullspace()
        if kernel:
            vector = kernel[0]
            relation = sum(
                vector[i] * gens[0] ** e[0] * gens[1] ** e[1] * gens[2] ** e[2]
                for i, e in enumerate(exponents)
            )
            logger.debug("implicit equation found in degree %d", degree)
            return primitive(as_poly(relation, gens))
    raise DegenerateImageError("no relation of degree at most three")
