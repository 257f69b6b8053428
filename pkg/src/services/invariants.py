"""
Joint rational invariants of n >= 4 differential elements.

The chain normalizes the first two elements away (xi, eta), builds the
cross-ratios r_j and the weighted ratios s_i, then sigma, tau and finally the
omega invariants that appear from the sixth element on.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegenerateConfigurationError, GenericityError
from .jet import Element2

logger = logging.getLogger(__name__)

TOO_FEW = "too few elements"
COINCIDENT = "coincident directions"
EQUAL_W = "w1=w2"
S3_ONE = "s3=1"
SIGMA_EQUALS_R = "sigma4=r4"
OMEGA_DENOMINATOR = "omega-denominator zero"


@dataclass(frozen=True)
class InvariantSet:
    """r_4..r_n and omega_6..omega_n, keyed by element index (1-based)."""

    r: Dict[int, Fraction] = field(default_factory=dict)
    omega: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.r) + 3

    @property
    def count(self) -> int:
        return len(self.r) + len(self.omega)


@dataclass(frozen=True)
class GenericityReport:
    violations: Tuple[str, ...] = ()

    @property
    def is_generic(self) -> bool:
        return not self.violations


def cross_ratio(v1, v2, v3, v4) -> Fraction:
    """
    ((v3-v1)(v4-v2)) / ((v4-v1)(v3-v2)).

    Raises:
        DegenerateConfigurationError: If the denominator vanishes
    """
    v1, v2, v3, v4 = (Fraction(x) for x in (v1, v2, v3, v4))
    den = (v4 - v1) * (v3 - v2)
    if den == 0:
        raise DegenerateConfigurationError("cross-ratio denominator vanishes")
    return (v3 - v1) * (v4 - v2) / den


def _evaluate(elements: Sequence[Element2]) -> Tuple[List[str], Optional[InvariantSet]]:
    n = len(elements)
    v = [Fraction(e.v) for e in elements]
    w = [Fraction(e.w) for e in elements]
    violations: List[str] = []
    if n < 4:
        violations.append(TOO_FEW)
    if len(set(v)) < n:
        violations.append(COINCIDENT)
    if n >= 2 and w[0] == w[1]:
        violations.append(EQUAL_W)

    def distinct(k: int) -> bool:
        return n >= k and len(set(v[:k])) == k

    # each later condition needs the elements it reads to be distinct
    if not distinct(3) or EQUAL_W in violations:
        return violations, None
    # index 0 is element 1
    xi = [(vi - v[0]) / (v[1] - v[0]) for vi in v]
    eta = [(wi - w[0]) / (w[1] - w[0]) for wi in w]
    s3 = eta[2] / xi[2] ** 3
    if s3 == 1:
        violations.append(S3_ONE)
        return violations, None
    if not distinct(4):
        return violations, None

    def r_at(j: int) -> Fraction:
        return xi[2] * (xi[j] - 1) / (xi[j] * (xi[2] - 1))

    def sigma_at(i: int) -> Fraction:
        return (eta[i] / xi[i] ** 3 - 1) / (s3 - 1)

    r4, sigma4 = r_at(3), sigma_at(3)
    if sigma4 == r4:
        violations.append(SIGMA_EQUALS_R)
        return violations, None
    if n >= 6 and distinct(5):
        weight = r4 ** 2 - r4
        r5 = r_at(4)
        den = weight * (sigma_at(4) - r5) / (sigma4 - r4) - (r5 ** 2 - r5)
        if den == 0:
            violations.append(OMEGA_DENOMINATOR)
    if violations:
        return violations, None

    r = {j + 1: r_at(j) for j in range(3, n)}
    sigma = {i + 1: sigma_at(i) for i in range(3, n)}
    omega: Dict[int, Fraction] = {}
    if n >= 6:
        tau = {i: (sigma[i] - r[i]) / (sigma4 - r4) for i in range(5, n + 1)}
        weight = r4 ** 2 - r4
        den = weight * tau[5] - (r[5] ** 2 - r[5])
        omega = {l: (weight * tau[l] - (r[l] ** 2 - r[l])) / den for l in range(6, n + 1)}
    return [], InvariantSet(r=r, omega=omega)


def check_genericity(elements: Sequence[Element2]) -> GenericityReport:
    """
    Lists every violated genericity condition.

    A condition whose inputs are undefined because an earlier one failed is
    not evaluated.
    """
    violations, _ = _evaluate(elements)
    return GenericityReport(tuple(violations))


def compute_invariants(elements: Sequence[Element2]) -> InvariantSet:
    """
    Raises:
        GenericityError: With the first violated condition as its condition string
    """
    violations, invariants = _evaluate(elements)
    if violations:
        raise GenericityError(
            f"element tuple is not generic: {', '.join(violations)}", condition=violations[0]
        )
    logger.debug("computed %d invariants for %d elements", invariants.count, len(elements))
    return invariants
