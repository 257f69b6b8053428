"""
Second-order differential elements and the eight-parameter action on them.

A point transformation fixing the base point moves the element (v, w) by

    V = (a v + b) / (c v + d)
    W = (lam + mu v + nu v^2 + xi v^3 + (ad - bc) w) / (c v + d)^3
"""

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DegenerateMapError, ElementAtInfinityError, FlowParameterError

logger = logging.getLogger(__name__)

Cubic = Tuple[Fraction, Fraction, Fraction, Fraction]

# Elements used to compare maps, which are only meaningful up to their action.
PROBE_ELEMENTS: Tuple[Tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(v), Fraction(w))
    for v, w in [
        (0, 1), (1, 2), (2, -1), (-3, 5), ("1/2", "1/3"),
        (5, 7), ("-1/7", 2), (4, "-5/3"), ("7/3", 0),
    ]
)

GENERATORS = {
    1: "d/dv",
    2: "d/dw",
    3: "v d/dv + w d/dw",
    4: "-v d/dv - 2w d/dw",
    5: "v^2 d/dv + 3vw d/dw",
    6: "v d/dw",
    7: "v^2 d/dw",
    8: "v^3 d/dw",
}


@dataclass(frozen=True)
class Element2:
    """A differential element: v = u', w = u'' at the base point."""

    v: Fraction
    w: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", Fraction(self.v))
        object.__setattr__(self, "w", Fraction(self.w))


def symmetric_cube_rows(a, b, c, d) -> List[List[Fraction]]:
    """
    Row k holds the ascending coefficients of (a v + b)^k (c v + d)^(3 - k).
    """
    rows = []
    for k in range(4):
        coeffs = [Fraction(1)]
        for slope, const in [(a, b)] * k + [(c, d)] * (3 - k):
            shifted = [Fraction(0)] + coeffs
            coeffs = [const * x for x in coeffs] + [Fraction(0)]
            coeffs = [x + slope * y for x, y in zip(coeffs, shifted)]
        rows.append(coeffs)
    return rows


def substituted_cubic(q: Sequence[Fraction], a, b, c, d) -> Cubic:
    """Coefficients of (c v + d)^3 q((a v + b) / (c v + d))."""
    rows = symmetric_cube_rows(a, b, c, d)
    return tuple(sum((q[k] * rows[k][j] for k in range(4)), Fraction(0)) for j in range(4))


@dataclass(frozen=True)
class JetMap:
    """Linear-fractional part (a, b, c, d) and cubic shear (lam, mu, nu, xi)."""

    a: Fraction = Fraction(1)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(1)
    lam: Fraction = Fraction(0)
    mu: Fraction = Fraction(0)
    nu: Fraction = Fraction(0)
    xi: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))
        if self.det == 0:
            raise DegenerateMapError(f"ad-bc vanishes for {self.linear}")

    @classmethod
    def identity(cls) -> "JetMap":
        return cls()

    @classmethod
    def from_parts(cls, linear: Sequence, shear: Sequence) -> "JetMap":
        return cls(*linear, *shear)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def linear(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def shear(self) -> Cubic:
        return (self.lam, self.mu, self.nu, self.xi)


def apply(g: JetMap, e: Element2) -> Element2:
    """
    Raises:
        ElementAtInfinityError: If c v + d = 0
    """
    den = g.c * e.v + g.d
    if den == 0:
        raise ElementAtInfinityError(f"c*v + d vanishes at v={e.v}")
    q = g.lam + g.mu * e.v + g.nu * e.v**2 + g.xi * e.v**3
    return Element2((g.a * e.v + g.b) / den, (q + g.det * e.w) / den**3)


def apply_all(g: JetMap, elements: Iterable[Element2]) -> List[Element2]:
    return [apply(g, e) for e in elements]


def compose(g2: JetMap, g1: JetMap) -> JetMap:
    """The map e -> apply(g2, apply(g1, e))."""
    a = g2.a * g1.a + g2.b * g1.c
    b = g2.a * g1.b + g2.b * g1.d
    c = g2.c * g1.a + g2.d * g1.c
    d = g2.c * g1.b + g2.d * g1.d
    pulled = substituted_cubic(g2.shear, *g1.linear)
    shear = [p + g2.det * q for p, q in zip(pulled, g1.shear)]
    return JetMap(a, b, c, d, *shear)


def inverse(g: JetMap) -> JetMap:
    det = g.det
    linear = (g.d / det, -g.b / det, -g.c / det, g.a / det)
    pulled = substituted_cubic(g.shear, g.d, -g.b, -g.c, g.a)
    return JetMap(*linear, *(-p / det**4 for p in pulled))


def generator_flow(k: int, t) -> JetMap:
    """
    One-parameter subgroup generated by the k-th listed vector field.

    Flows 3 and 4 compose by (1+s)(1+t) - 1, all others additively.

    Raises:
        FlowParameterError: If k is outside 1..8, or t = -1 for a scaling flow
    """
    t = Fraction(t)
    if k in (3, 4) and t == -1:
        raise FlowParameterError(f"scaling flow {k} is singular at t=-1")
    if k == 1:
        return JetMap(b=t)
    if k == 2:
        return JetMap(lam=t)
    if k == 3:
        return JetMap(a=1 + t)
    if k == 4:
        return JetMap(d=1 + t)
    if k == 5:
        return JetMap(c=-t)
    if k == 6:
        return JetMap(mu=t)
    if k == 7:
        return JetMap(nu=t)
    if k == 8:
        return JetMap(xi=t)
    raise FlowParameterError(f"no generator numbered {k}; expected 1..8")


def same_action(g: JetMap, h: JetMap) -> bool:
    """Compare two maps by their action on the probe elements."""
    compared = 0
    for v, w in PROBE_ELEMENTS:
        e = Element2(v, w)
        try:
            left, right = apply(g, e), apply(h, e)
        except ElementAtInfinityError:
            continue
        if left != right:
            return False
        compared += 1
    logger.debug("compared maps on %d probe elements", compared)
    return compared > 0


def is_identity_action(g: JetMap) -> bool:
    return same_action(g, JetMap.identity())
