"""
Cross-checks of printed closed-form formulas against the derivations in this
package.

The catalogue (data/errata.yaml) lists, per formula, the printed expressions,
a corrected version and the oracle that decides between them. Each oracle
returns None when the expressions agree with the derivation on every probe
and a counterexample otherwise.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy as sp
import yaml
from sympy.parsing.sympy_parser import parse_expr

from .cone import ConePoint, apply_gmat, embed, g_from_jetmap, sym3
from .connection import ProjConnection, X0, Y0, V, W, centre, centre_substitution
from .errors import CatalogueError, DomainError, ZeroPointError
from .exact import as_poly, proportional, to_rat, to_sympy
from .jet import Element2, JetMap, apply
from .osculating import (
    CHI,
    D2U,
    D2X,
    DU,
    DX,
    AsymptoticNet,
    GeneralSurface,
    GrassmannPlane,
    LaplaceNet,
    Parabolic,
    PencilData,
    PlaneSurface,
    PluckerLine,
    conjugate_osculating_point,
    envelope_tangential_cubic,
    general_osculating_point,
    incidence_form,
    straight_lines_connection,
)

logger = logging.getLogger(__name__)

MATCHES = "matches"
DIFFERS = "differs"

RHO = sp.Symbol("rho")

_NAMES = (
    "a b c d lam mu nu xi x0 y0 v "
    "A B C D E A0 B0 B1 B2 B3 C0 C1 C2 C3 C4 C5 C6 "
    "a1 b1 alpha beta r s dx du d2x d2u rho "
    "p12 p13 p14 p23 p42 p34 pp12 pp13 pp14 pp23 pp42 pp34"
).split()
_GRASSMANN_NAMES = ["p" + "".join(map(str, index)) for index in
                    ((1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5),
                     (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5))]

SYMBOLS: Dict[str, sp.Symbol] = {name: sp.Symbol(name) for name in _NAMES + _GRASSMANN_NAMES}
SYMBOLS.update({str(chi): chi for chi in CHI})
SYMBOLS.update({"x0": X0, "y0": Y0, "v": V, "w": W, "dx": DX, "du": DU, "d2x": D2X, "d2u": D2U, "rho": RHO})

# values assigned, in name order, to free symbols when hunting for a witness
SAMPLE_VALUES = tuple(Fraction(x) for x in ("2", "-3", "5", "1/2", "7", "-1", "3/4", "11", "-2/3", "13", "4", "-5/2"))

Oracle = Callable[[Mapping[str, Any]], Optional[Dict[str, Any]]]


# Probes

CENTRE_PROBES: Tuple[Tuple[JetMap, Element2], ...] = (
    (JetMap(2, 1, 1, 3, 1, -1, 2, Fraction(1, 2)), Element2(1, 2)),
    (JetMap(1, 2, -1, 1, 0, 1, 0, -1), Element2(Fraction(1, 2), -3)),
    (JetMap(3, -1, 2, 1, 2, 0, 1, 1), Element2(-2, 5)),
)

RANK1_PROBES: Tuple[ProjConnection, ...] = (ProjConnection(1, 2, 3, 4), ProjConnection(0, 1, -1, 2))
RANK1_DIRECTIONS = (2, -1, 3)

LAPLACE_PROBES = (
    (LaplaceNet(a=Fraction(1, 2), b=1, c=0), PluckerLine.from_points((1, 2, 1, 0), (0, 1, 3, 1))),
    (LaplaceNet(a=0, b=-2, c=1), PluckerLine.from_points((2, -1, 0, 1), (1, 1, 1, 0))),
)

PARABOLIC_PROBES = (
    (Parabolic(a=1, b=2, c=0), PencilData(alpha=(1, 0, 1, 0), beta=(2, 1, 0, 1), beta_prime=(1, 3, 0, 0))),
    (Parabolic(a=-1, b=Fraction(1, 2), c=3), PencilData(alpha=(0, 2, 1, 1), beta=(1, -1, 2, 1), beta_prime=(2, 0, 0, 0))),
)

GENERAL_PROBES = (
    GrassmannPlane.from_points((1, 0, 1, 0, 0), (0, 2, 0, 1, 0), (1, 1, 0, 0, 1)),
    GrassmannPlane.from_points((2, 1, 1, 1, 0), (0, 1, 0, 1, 1), (1, 0, 2, 0, 1)),
)

ENVELOPE_PROBES = (
    (AsymptoticNet(a=1, b=2, a1=-1, b1=Fraction(1, 2)), ProjConnection(1, 2, 3, 4)),
    (AsymptoticNet(b=1, a1=1), ProjConnection(3, -1, 2, 5)),
)

CONJUGATE_PROBES = (
    (LaplaceNet(a=Fraction(1, 2), b=1), ProjConnection(1, 2, 3, 4)),
    (LaplaceNet(a=-2, b=3, c=1), ProjConnection(0, -1, Fraction(1, 3), 2)),
)

CONE_PROBES = CENTRE_PROBES

DIRECTRIX_PROBES = (
    (((2, 1), (1, 3)), Fraction(1)),
    (((1, 2), (-1, 1)), Fraction(1, 2)),
    (((3, -1), (2, 1)), Fraction(-2)),
)

STRAIGHT_LINE_PROBES = (
    PlaneSurface(c=1, a=2, b=-1, p=0, alpha=3, beta=Fraction(1, 2), q=1, r=2, s=-3),
    PlaneSurface(c=0, a=-1, b=Fraction(2, 3), p=1, alpha=0, beta=-2, q=0, r=5, s=1),
)

# (dx, du, d2x, rho) with dx != 0 for the on-shell checks
SHELL_SAMPLES = ((1, 2, 3, 5), (2, -1, 1, 1), (1, 1, 0, 2), (3, 1, -2, -1))


# Expression handling

def parse_formula(text: str) -> sp.Expr:
    """
    Raises:
        CatalogueError: On unparsable text or unknown symbols
    """
    try:
        expr = parse_expr(str(text), local_dict=SYMBOLS)
    except (SyntaxError, TypeError, ValueError, TokenError, sp.SympifyError) as err:
        raise CatalogueError(f"cannot parse {text!r}: {err}") from err
    unknown = {str(s) for s in expr.free_symbols} - set(SYMBOLS)
    if unknown:
        raise CatalogueError(f"unknown symbols {sorted(unknown)} in {text!r}")
    return expr


def _parse_block(block: Any) -> Any:
    if isinstance(block, Mapping):
        return {key: _parse_block(value) for key, value in block.items()}
    if isinstance(block, (list, tuple)):
        return [_parse_block(value) for value in block]
    return parse_formula(block)


def _values(**named: Any) -> Dict[sp.Symbol, sp.Expr]:
    return {SYMBOLS[name]: to_sympy(value) for name, value in named.items()}


def _evaluate(expr: sp.Expr, values: Mapping[sp.Symbol, Any]) -> Optional[Fraction]:
    """Exact value, or None where the expression is undefined."""
    result = sp.sympify(expr).xreplace(dict(values))
    if result.has(sp.zoo, sp.nan, sp.oo, -sp.oo) or not result.is_Rational:
        return None
    return to_rat(result)


def _sample(expressions: Sequence[sp.Expr]) -> Dict[sp.Symbol, sp.Expr]:
    free = sorted(set().union(*(e.free_symbols for e in expressions)), key=str)
    return {s: to_sympy(SAMPLE_VALUES[i % len(SAMPLE_VALUES)]) for i, s in enumerate(free)}


def _witness(printed: sp.Expr, derived: sp.Expr) -> Dict[str, Any]:
    values = _sample([printed, derived])
    return {
        "values": {str(s): to_rat(x) for s, x in values.items()},
        "printed": _evaluate(printed, values),
        "derived": _evaluate(derived, values),
    }


def _jet_values(g: JetMap) -> Dict[sp.Symbol, sp.Expr]:
    lam, mu, nu, xi = g.shear
    return _values(a=g.a, b=g.b, c=g.c, d=g.d, lam=lam, mu=mu, nu=nu, xi=xi)


def _jet_fields(g: JetMap) -> Dict[str, Fraction]:
    lam, mu, nu, xi = g.shear
    return {"a": g.a, "b": g.b, "c": g.c, "d": g.d, "lambda": lam, "mu": mu, "nu": nu, "xi": xi}


def _connection_values(k: ProjConnection) -> Dict[sp.Symbol, sp.Expr]:
    A, B, C, D = k.cubic()
    return _values(A=A, B=B, C=C, D=D, E=1)


# Oracles

def _centre_commutation(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for g, e in CENTRE_PROBES:
        try:
            start = centre(e)
            expected = centre(apply(g, e))
        except DomainError:
            continue
        values = {**_jet_values(g), **_values(x0=start.x0, y0=start.y0)}
        got = [_evaluate(exprs["X0"], values), _evaluate(exprs["Y0"], values)]
        if got != [expected.x0, expected.y0]:
            return {
                "map": _jet_fields(g),
                "element": [e.v, e.w],
                "centre": [start.x0, start.y0],
                "expected": [expected.x0, expected.y0],
                "printed": got,
            }
    return None


def _rank1_substitution(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    A, B, C, D, E = (SYMBOLS[n] for n in "ABCDE")
    derived = centre_substitution(E * W - (A + B * V + C * V**2 + D * V**3))
    printed = exprs["locus"]
    if sp.expand(printed - derived) == 0:
        return None
    for k in RANK1_PROBES:
        for v in RANK1_DIRECTIONS:
            e = Element2(v, k.evaluate(v))
            try:
                point = centre(e)
            except DomainError:
                continue
            value = _evaluate(printed, {**_connection_values(k), **_values(x0=point.x0, y0=point.y0)})
            if value != 0:
                return {
                    "connection": dict(zip("ABCD", k.cubic())),
                    "element": [e.v, e.w],
                    "centre": [point.x0, point.y0],
                    "printed": value,
                }
    return _witness(printed, derived)


def _rank2_substitution(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    s = SYMBOLS
    eqn = (
        s["A0"] * W**2
        + sum(s[f"B{k}"] * V**k for k in range(4)) * W
        + sum(s[f"C{k}"] * V**k for k in range(7))
    )
    derived = centre_substitution(eqn)
    printed = exprs["locus"]
    if sp.expand(printed - derived) == 0:
        return None
    return _witness(printed, derived)


def _on_shell(expr: sp.Expr, point: Sequence[Any], k: ProjConnection) -> sp.Expr:
    """expr at chi = point, with d2u eliminated through the connection."""
    A, B, C, D = (to_sympy(x) for x in k.cubic())
    d2u = (DU * D2X + A * DX**3 + B * DX**2 * DU + C * DX * DU**2 + D * DU**3) / DX
    chi = {CHI[i]: sp.sympify(value).subs(D2U, d2u) for i, value in enumerate(point)}
    return sp.cancel(expr.xreplace(chi))


def _shell_witness(residual: sp.Expr) -> Dict[str, Any]:
    for dx, du, d2x, rho in SHELL_SAMPLES:
        value = _evaluate(residual, _values(dx=dx, du=du, d2x=d2x, rho=rho))
        if value != 0:
            return {"dx": Fraction(dx), "du": Fraction(du), "d2x": Fraction(d2x), "rho": Fraction(rho), "value": value}
    return {"residual": str(residual)}


def _conjugate_on_shell(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for model, k in CONJUGATE_PROBES:
        values = {**_connection_values(k), **_values(a=model.a, b=model.b)}
        locus = exprs["locus"].xreplace(values)
        point = conjugate_osculating_point(model, DX, DU, D2X, D2U, RHO)
        residual = _on_shell(locus, point, k)
        if residual != 0:
            return {
                "model": model.coefficients(),
                "connection": dict(zip("ABCD", k.cubic())),
                **_shell_witness(residual),
            }
    return None


def _general_on_shell(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for plane in GENERAL_PROBES:
        k = incidence_form(GeneralSurface(), plane).connection
        values = _values(**plane.coordinates())
        point = general_osculating_point(DX, DU, D2X, D2U, RHO)
        for row, expr in enumerate(exprs["rows"], start=1):
            residual = _on_shell(expr.xreplace(values), point, k)
            if residual != 0:
                return {"plane": plane.coordinates(), "row": row, **_shell_witness(residual)}
    return None


def _compare_map(exprs, values, derived: ProjConnection) -> Optional[List[Optional[Fraction]]]:
    printed = [_evaluate(exprs[name], values) for name in "ABCD"]
    return None if printed == list(derived.cubic()) else printed


def _laplace_map(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for model, line in LAPLACE_PROBES:
        derived = incidence_form(model, line).connection
        coords = {name: value / line.p34 for name, value in line.coordinates().items()}
        values = {**_values(**coords), **_values(a=model.a, b=model.b)}
        printed = _compare_map(exprs, values, derived)
        if printed is not None:
            return {"model": model.coefficients(), "plucker": coords, "derived": list(derived.cubic()), "printed": printed}
    return None


def _parabolic_map(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for model, pencil in PARABOLIC_PROBES:
        derived = incidence_form(model, pencil).connection
        scale = pencil.p["p34"]
        p = {name: value / scale for name, value in pencil.p.items()}
        q = {"p" + name: value / scale for name, value in pencil.p_prime.items()}
        values = {**_values(**p), **_values(**q), **_values(a=model.a, b=model.b)}
        printed = _compare_map(exprs, values, derived)
        if printed is not None:
            return {
                "model": model.coefficients(),
                "pencil": {"alpha": list(pencil.alpha), "beta": list(pencil.beta), "beta_prime": list(pencil.beta_prime)},
                "derived": list(derived.cubic()),
                "printed": printed,
            }
    return None


def _general_map(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for plane in GENERAL_PROBES:
        derived = incidence_form(GeneralSurface(), plane).connection
        scale = plane.coordinate((3, 4, 5))
        coords = {name: value / scale for name, value in plane.coordinates().items()}
        printed = _compare_map(exprs, _values(**coords), derived)
        if printed is not None:
            return {"plane": coords, "derived": list(derived.cubic()), "printed": printed}
    return None


def _envelope_cubic(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    gens = CHI[1:4]
    for model, k in ENVELOPE_PROBES:
        derived = envelope_tangential_cubic(model, k)
        values = {**_connection_values(k), **_values(a=model.a, b=model.b, a1=model.a1, b1=model.b1)}
        printed = as_poly(exprs["tangential"].xreplace(values), gens)
        if printed.is_zero or not proportional(printed, derived):
            return {
                "model": model.coefficients(),
                "connection": dict(zip("ABCD", k.cubic())),
                "derived": str(derived.as_expr()),
                "printed": str(printed.as_expr()),
            }
    return None


def _matrix(rows: Sequence[Sequence[sp.Expr]], values) -> Optional[List[List[Fraction]]]:
    evaluated = [[_evaluate(entry, values) for entry in row] for row in rows]
    if any(entry is None for row in evaluated for entry in row):
        return None
    return evaluated


def _cone_equivariance(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for g, e in CONE_PROBES:
        try:
            expected = embed(apply(g, e))
        except DomainError:
            continue
        G = _matrix(exprs["rows"], _jet_values(g))
        try:
            image = apply_gmat(G, embed(e)) if G is not None else None
        except ZeroPointError:
            image = None
        if image != expected:
            return {
                "map": _jet_fields(g),
                "element": [e.v, e.w],
                "expected": list(expected.z),
                "printed": list(image.z) if image is not None else None,
                "derived_rows": [list(row) for row in g_from_jetmap(g)],
            }
    return None


def _directrix_equivariance(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for m, v in DIRECTRIX_PROBES:
        (a, b), (c, d) = m
        if c * v + d == 0:
            continue
        target = (a * v + b) / Fraction(c * v + d)
        expected = ConePoint((1, target, target**2, target**3, 0))
        rows = _matrix(exprs["rows"], _values(a=a, b=b, c=c, d=d))
        try:
            image = apply_gmat([[*row, 0] for row in rows] + [[0, 0, 0, 0, 1]], ConePoint((1, v, v**2, v**3, 0))) if rows else None
        except ZeroPointError:
            image = None
        if image != expected:
            return {
                "matrix": [list(row) for row in m],
                "v": v,
                "expected": list(expected.z[:4]),
                "printed": list(image.z[:4]) if image is not None else None,
                "derived_rows": [list(row) for row in sym3(m)],
            }
    return None


def _straight_lines(exprs: Mapping[str, sp.Expr]) -> Optional[Dict[str, Any]]:
    for model in STRAIGHT_LINE_PROBES:
        derived = straight_lines_connection(model)
        values = {SYMBOLS[name]: to_sympy(value) for name, value in model.coefficients().items() if name in SYMBOLS}
        printed = as_poly(exprs["w"].xreplace(values), (V,))
        coefficients = [to_rat(printed.coeff_monomial(V**i)) for i in range(4)]
        if printed.degree() > 3 or coefficients != list(derived.cubic()):
            return {"model": model.coefficients(), "derived": list(derived.cubic()), "printed": coefficients}
    return None


ORACLES: Dict[str, Oracle] = {
    "centre-commutation": _centre_commutation,
    "rank1-substitution": _rank1_substitution,
    "rank2-substitution": _rank2_substitution,
    "conjugate-on-shell": _conjugate_on_shell,
    "general-on-shell": _general_on_shell,
    "laplace-incidence": _laplace_map,
    "parabolic-incidence": _parabolic_map,
    "general-incidence": _general_map,
    "envelope-proportional": _envelope_cubic,
    "cone-equivariance": _cone_equivariance,
    "directrix-equivariance": _directrix_equivariance,
    "straight-lines": _straight_lines,
}


# Catalogue

@dataclass(frozen=True)
class Finding:
    formula: str
    status: str
    printed: Any
    derived: Any
    description: str = ""
    counterexample: Optional[Dict[str, Any]] = field(default=None)

    def to_entry(self) -> Dict[str, Any]:
        entry = {
            "formula": self.formula,
            "status": self.status,
            "printed": self.printed,
            "derived": self.derived,
            "description": self.description,
        }
        if self.counterexample is not None:
            entry["counterexample"] = self.counterexample
        return entry


def load_catalogue(text: str) -> List[Dict[str, Any]]:
    """
    Raises:
        CatalogueError: If the YAML is not a list of formula entries
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise CatalogueError(f"catalogue is not valid YAML: {err}") from err
    formulas = data.get("formulas") if isinstance(data, dict) else None
    if not isinstance(formulas, list):
        raise CatalogueError("catalogue must have a 'formulas' list")
    for entry in formulas:
        missing = {"name", "oracle", "printed", "corrected"} - set(entry or {})
        if missing:
            raise CatalogueError(f"catalogue entry {entry!r} is missing {sorted(missing)}")
        if entry["oracle"] not in ORACLES:
            raise CatalogueError(f"unknown oracle {entry['oracle']!r} for {entry['name']}")
    return formulas


def check_formula(entry: Mapping[str, Any]) -> Finding:
    """
    Run one catalogue entry through its oracle.

    Raises:
        CatalogueError: If the corrected expressions fail the oracle
    """
    oracle = ORACLES[entry["oracle"]]
    defect = oracle(_parse_block(entry["corrected"]))
    if defect is not None:
        raise CatalogueError(f"corrected form of {entry['name']} fails its oracle: {defect}")
    counterexample = oracle(_parse_block(entry["printed"]))
    status = MATCHES if counterexample is None else DIFFERS
    logger.info("%s: %s", entry["name"], status)
    return Finding(
        formula=entry["name"],
        status=status,
        printed=entry["printed"],
        derived=entry["corrected"],
        description=str(entry.get("description", "")).strip(),
        counterexample=counterexample,
    )


def verify_errata(catalogue: Sequence[Mapping[str, Any]]) -> List[Finding]:
    return [check_formula(entry) for entry in catalogue]
