"""
JSON document codec.

Every document is an object with a "kind" tag. Rationals travel as strings
("p/q" or an integer) or as JSON integers, never as floats; polynomials travel
as {variables, terms: [{exps, coef}]} with terms sorted by exponent tuple.
Unknown fields are rejected.
"""

import json
import logging
from dataclasses import fields
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy as sp

from .connection import Centre, ProjConnection, RankTwoEq
from .cone import ConePoint
from .errors import DocumentError, DomainError, UsageError
from .exact import as_poly, format_rat, parse_rat
from .invariants import InvariantSet
from .jet import Element2, JetMap
from .osculating import (
    GRASSMANN_INDICES,
    MODELS,
    GrassmannPlane,
    IncidenceResult,
    PencilData,
    PluckerLine,
    SurfaceFrameModel,
)

logger = logging.getLogger(__name__)

# kind -> (required fields, optional fields), "kind" itself excluded
SCHEMAS: Dict[str, Tuple[frozenset, frozenset]] = {
    "elements": (frozenset({"elements"}), frozenset({"basepoint"})),
    "jetmap": (frozenset({"a", "b", "c", "d", "lambda", "mu", "nu", "xi"}), frozenset({"basepoint"})),
    "connection": (frozenset({"A", "B", "C", "D"}), frozenset({"E", "basepoint"})),
    "rank2": (frozenset({"A0", "B", "C"}), frozenset({"basepoint"})),
    "model": (frozenset({"model"}), frozenset({"coefficients", "basepoint"})),
    "geometry": (frozenset({"case"}), frozenset({"plucker", "pencil", "grassmann", "basepoint"})),
    "locus": (
        frozenset({"polynomials"}),
        frozenset({"name", "classification", "discriminant", "tangential", "basepoint"}),
    ),
    "invariants": (frozenset(), frozenset({"n", "r", "omega", "cross_ratio", "basepoint"})),
    "report": (frozenset({"entries"}), frozenset()),
    "centre": (frozenset(), frozenset({"x0", "y0", "centres", "basepoint"})),
    "cone": (frozenset({"points"}), frozenset({"on_cone", "basepoint"})),
    "matrix": (frozenset({"rows"}), frozenset({"name"})),
    "incidence": (frozenset({"form", "connection", "printed_map"}), frozenset({"basepoint"})),
    "error": (frozenset({"condition", "message"}), frozenset()),
}

GEOMETRY_CASES = {"laplace": "plucker", "parabolic": "pencil", "general": "grassmann"}
PLUCKER_FIELDS = ("p12", "p13", "p14", "p23", "p42", "p34")


class RationalEncoder(json.JSONEncoder):
    """Writes Fractions and sympy rationals as canonical strings."""

    def default(self, o):
        if isinstance(o, (Fraction, sp.Rational)):
            return format_rat(o)
        return super().default(o)


def dumps(document: Mapping[str, Any]) -> str:
    """Canonical text: sorted keys, compact separators, trailing newline."""
    return json.dumps(document, sort_keys=True, separators=(",", ":"), cls=RationalEncoder) + "\n"


def _reject_float(text: str) -> Any:
    raise DocumentError(f"inexact number {text} in document; write rationals as strings")


def loads(text: str) -> Dict[str, Any]:
    try:
        document = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as err:
        raise DocumentError(f"document is not valid JSON: {err}") from err
    if not isinstance(document, dict):
        raise DocumentError("document must be a JSON object")
    return document


def validate(document: Mapping[str, Any], *kinds: str) -> str:
    """
    Check the kind tag and the field set.

    Returns:
        str: The document's kind

    Raises:
        DocumentError: On a wrong kind, a missing field or an unknown field
    """
    if not isinstance(document, Mapping):
        raise DocumentError("document must be a JSON object")
    kind = document.get("kind")
    if kind not in SCHEMAS:
        raise DocumentError(f"unknown document kind {kind!r}")
    if kinds and kind not in kinds:
        raise DocumentError(f"expected a document of kind {' or '.join(kinds)}, got {kind!r}")
    required, optional = SCHEMAS[kind]
    present = set(document) - {"kind"}
    missing = sorted(required - present)
    if missing:
        raise DocumentError(f"{kind} document is missing {missing}")
    unknown = sorted(present - required - optional)
    if unknown:
        raise DocumentError(f"{kind} document has unknown fields {unknown}")
    return kind


def rat(value: Any, where: str = "value") -> Fraction:
    try:
        return parse_rat(value)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise DocumentError(f"{where}: {value!r} is not an exact rational") from err


def _rats(values: Any, where: str, length: Optional[int] = None) -> Tuple[Fraction, ...]:
    if not isinstance(values, list):
        raise DocumentError(f"{where} must be a list")
    if length is not None and len(values) != length:
        raise DocumentError(f"{where} must have {length} entries, got {len(values)}")
    return tuple(rat(v, f"{where}[{i}]") for i, v in enumerate(values))


def _object(value: Any, where: str, required: Iterable[str], optional: Iterable[str] = ()) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise DocumentError(f"{where} must be an object")
    required, allowed = set(required), set(required) | set(optional)
    missing = sorted(required - set(value))
    unknown = sorted(set(value) - allowed)
    if missing or unknown:
        raise DocumentError(f"{where}: missing {missing}, unknown {unknown}")
    return value


def _guarded(build, *args, **kwargs):
    """Constructor failures on malformed data are document errors."""
    try:
        return build(*args, **kwargs)
    except DomainError as err:
        raise DocumentError(str(err)) from err


def carry_basepoint(source: Mapping[str, Any], target: Dict[str, Any]) -> Dict[str, Any]:
    if "basepoint" in source:
        target["basepoint"] = source["basepoint"]
    return target


# Decoders

def decode_elements(document: Mapping[str, Any]) -> List[Element2]:
    validate(document, "elements")
    entries = document["elements"]
    if not isinstance(entries, list):
        raise DocumentError("elements must be a list")
    elements = []
    for i, entry in enumerate(entries):
        entry = _object(entry, f"elements[{i}]", ("v", "w"))
        elements.append(Element2(rat(entry["v"], f"elements[{i}].v"), rat(entry["w"], f"elements[{i}].w")))
    return elements


def decode_jetmap(document: Mapping[str, Any]) -> JetMap:
    validate(document, "jetmap")
    values = [rat(document[name], name) for name in ("a", "b", "c", "d", "lambda", "mu", "nu", "xi")]
    return JetMap(*values)


def decode_connection(document: Mapping[str, Any]) -> ProjConnection:
    validate(document, "connection")
    values = [rat(document[name], name) for name in "ABCD"]
    return ProjConnection(*values, rat(document.get("E", 1), "E"))


def decode_rank2(document: Mapping[str, Any]) -> RankTwoEq:
    validate(document, "rank2")
    return _guarded(
        RankTwoEq,
        rat(document["A0"], "A0"),
        _rats(document["B"], "B", 4),
        _rats(document["C"], "C", 7),
    )


def decode_model(document: Mapping[str, Any]) -> SurfaceFrameModel:
    """Missing coefficients default to zero."""
    validate(document, "model")
    tag = document["model"]
    if tag not in MODELS:
        raise DocumentError(f"unknown model {tag!r}; expected one of {sorted(MODELS)}")
    cls = MODELS[tag]
    names = [f.name for f in fields(cls)]
    coefficients = _object(document.get("coefficients", {}), "coefficients", (), names)
    return cls(**{name: rat(value, f"coefficients.{name}") for name, value in coefficients.items()})


def decode_geometry(document: Mapping[str, Any]):
    validate(document, "geometry")
    case = document["case"]
    if case not in GEOMETRY_CASES:
        raise DocumentError(f"unknown geometry case {case!r}; expected one of {sorted(GEOMETRY_CASES)}")
    key = GEOMETRY_CASES[case]
    extra = sorted(set(GEOMETRY_CASES.values()) & set(document) - {key})
    if key not in document or extra:
        raise DocumentError(f"{case} geometry needs exactly the field {key!r}")
    body = document[key]
    if case == "laplace":
        body = _object(body, key, PLUCKER_FIELDS)
        return _guarded(PluckerLine, **{name: rat(body[name], f"plucker.{name}") for name in PLUCKER_FIELDS})
    if case == "parabolic":
        body = _object(body, key, ("alpha", "beta", "beta_prime"))
        return _guarded(
            PencilData,
            _rats(body["alpha"], "pencil.alpha", 4),
            _rats(body["beta"], "pencil.beta", 4),
            _rats(body["beta_prime"], "pencil.beta_prime", 4),
        )
    names = ["p" + "".join(map(str, index)) for index in GRASSMANN_INDICES]
    body = _object(body, key, (), names)
    return _guarded(GrassmannPlane, tuple(rat(body.get(name, 0), f"grassmann.{name}") for name in names))


def decode_points(document: Mapping[str, Any]) -> List[ConePoint]:
    validate(document, "cone")
    points = document["points"]
    if not isinstance(points, list):
        raise DocumentError("points must be a list")
    return [_guarded(ConePoint, _rats(p, f"points[{i}]", 5)) for i, p in enumerate(points)]


def decode_matrix(document: Mapping[str, Any], size: Optional[int] = None) -> Tuple[Tuple[Fraction, ...], ...]:
    validate(document, "matrix")
    rows = document["rows"]
    if not isinstance(rows, list) or not rows:
        raise DocumentError("rows must be a nonempty list")
    size = size or len(rows)
    if len(rows) != size:
        raise DocumentError(f"expected a {size}x{size} matrix, got {len(rows)} rows")
    return tuple(_rats(row, f"rows[{i}]", size) for i, row in enumerate(rows))


def decode_polynomial(document: Mapping[str, Any]) -> sp.Poly:
    body = _object(document, "polynomial", ("variables", "terms"))
    names = body["variables"]
    if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
        raise DocumentError("polynomial variables must be a nonempty list of names")
    gens = sp.symbols(names)
    expr = sp.Integer(0)
    if not isinstance(body["terms"], list):
        raise DocumentError("polynomial terms must be a list")
    for i, term in enumerate(body["terms"]):
        term = _object(term, f"terms[{i}]", ("exps", "coef"))
        exps = term["exps"]
        if not isinstance(exps, list) or len(exps) != len(gens) or not all(
            isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in exps
        ):
            raise DocumentError(f"terms[{i}].exps must list {len(gens)} nonnegative integers")
        coef = rat(term["coef"], f"terms[{i}].coef")
        expr += sp.Rational(coef.numerator, coef.denominator) * sp.Mul(*(g**e for g, e in zip(gens, exps)))
    return as_poly(expr, gens)


# Encoders

def encode_elements(elements: Sequence[Element2]) -> Dict[str, Any]:
    return {"kind": "elements", "elements": [{"v": e.v, "w": e.w} for e in elements]}


def encode_jetmap(g: JetMap) -> Dict[str, Any]:
    return {
        "kind": "jetmap",
        "a": g.a, "b": g.b, "c": g.c, "d": g.d,
        "lambda": g.lam, "mu": g.mu, "nu": g.nu, "xi": g.xi,
    }


def _cubic_fields(k: ProjConnection) -> Dict[str, Fraction]:
    return dict(zip("ABCD", (k.A, k.B, k.C, k.D)), E=k.E)


def encode_connection(k: ProjConnection) -> Dict[str, Any]:
    return {"kind": "connection", **_cubic_fields(k)}


def encode_rank2(eqn: RankTwoEq) -> Dict[str, Any]:
    return {"kind": "rank2", "A0": eqn.A0, "B": list(eqn.B), "C": list(eqn.C)}


def encode_model(model: SurfaceFrameModel) -> Dict[str, Any]:
    return {"kind": "model", "model": model.tag, "coefficients": model.coefficients()}


def encode_geometry(geometry) -> Dict[str, Any]:
    if isinstance(geometry, PluckerLine):
        return {"kind": "geometry", "case": "laplace", "plucker": geometry.coordinates()}
    if isinstance(geometry, PencilData):
        return {
            "kind": "geometry",
            "case": "parabolic",
            "pencil": {
                "alpha": list(geometry.alpha),
                "beta": list(geometry.beta),
                "beta_prime": list(geometry.beta_prime),
            },
        }
    return {"kind": "geometry", "case": "general", "grassmann": geometry.coordinates()}


def encode_polynomial(poly: sp.Poly) -> Dict[str, Any]:
    terms = sorted(poly.terms(), key=lambda term: term[0])
    return {
        "variables": [str(g) for g in poly.gens],
        "terms": [{"exps": list(exps), "coef": format_rat(coef)} for exps, coef in terms],
    }


def encode_locus(polynomials: Sequence[sp.Poly], **extra: Any) -> Dict[str, Any]:
    document = {"kind": "locus", "polynomials": [encode_polynomial(p) for p in polynomials]}
    for key, value in extra.items():
        if value is None:
            continue
        document[key] = encode_polynomial(value) if isinstance(value, sp.Poly) else value
    return document


def encode_invariants(invariants: InvariantSet) -> Dict[str, Any]:
    return {
        "kind": "invariants",
        "n": invariants.n,
        "r": [invariants.r[i] for i in sorted(invariants.r)],
        "omega": [invariants.omega[i] for i in sorted(invariants.omega)],
    }


def encode_cross_ratio(value: Fraction) -> Dict[str, Any]:
    return {"kind": "invariants", "cross_ratio": value}


def encode_centre(point: Centre) -> Dict[str, Any]:
    return {"kind": "centre", "x0": point.x0, "y0": point.y0}


def encode_centres(points: Sequence[Centre]) -> Dict[str, Any]:
    return {"kind": "centre", "centres": [{"x0": p.x0, "y0": p.y0} for p in points]}


def encode_points(points: Sequence[ConePoint], on_cone: Optional[Sequence[bool]] = None) -> Dict[str, Any]:
    document = {"kind": "cone", "points": [list(p.z) for p in points]}
    if on_cone is not None:
        document["on_cone"] = list(on_cone)
    return document


def encode_matrix(rows: Sequence[Sequence[Fraction]], name: Optional[str] = None) -> Dict[str, Any]:
    document = {"kind": "matrix", "rows": [list(row) for row in rows]}
    if name:
        document["name"] = name
    return document


def encode_incidence(result: IncidenceResult) -> Dict[str, Any]:
    return {
        "kind": "incidence",
        "form": encode_polynomial(result.form),
        "connection": _cubic_fields(result.connection),
        "printed_map": _cubic_fields(result.printed_map),
    }


def encode_report(entries: Sequence[Mapping[str, Any]]) -> Dict[str, Any]:
    return {"kind": "report", "entries": [dict(entry) for entry in entries]}


def elements_from_context(context) -> List[Element2]:
    """One element from --v/--w, else the elements document under "input"."""
    v, w = context.get("v"), context.get("w")
    if v is None and w is None:
        return decode_elements(context.require("input"))
    if v is None or w is None:
        raise UsageError("--v and --w go together")
    return [Element2(rat(v, "--v"), rat(w, "--w"))]
