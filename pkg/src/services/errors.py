"""
Exception hierarchy for the projective connection toolkit.

DomainError subclasses describe mathematical conditions (exit code 1 on the
command line); UsageError subclasses describe bad invocations or malformed
documents (exit code 2).
"""

from typing import Any, Dict, Optional


class ProjectiveToolkitError(Exception):
    """Root of every error raised by the toolkit."""

    condition = "error"

    def __init__(self, message: str = "", condition: Optional[str] = None):
        super().__init__(message or self.condition)
        if condition is not None:
            self.condition = condition

    def to_document(self) -> Dict[str, Any]:
        return {"kind": "error", "condition": self.condition, "message": str(self)}


class DomainError(ProjectiveToolkitError):
    """A well-formed request that is mathematically undefined."""

    condition = "domain-error"


class UsageError(ProjectiveToolkitError):
    condition = "usage-error"


class DocumentError(UsageError):
    condition = "malformed-document"


# exact

class ShapeError(DomainError):
    condition = "shape"


class ResultantDegreeError(DomainError):
    condition = "degree-zero-in-variable"


class DegenerateImageError(DomainError):
    condition = "degenerate-image"


# jet

class DegenerateMapError(DomainError):
    condition = "ad-bc=0"


class ElementAtInfinityError(DomainError):
    condition = "element-at-infinity"


class FlowParameterError(DomainError):
    condition = "flow-parameter"


# invariants

class GenericityError(DomainError):
    condition = "non-generic"


class DegenerateConfigurationError(DomainError):
    condition = "degenerate-configuration"


# connection

class SingularSystemError(DomainError):
    condition = "singular-system"


class InflectionError(DomainError):
    condition = "inflection"


class CentreAtInfinityError(DomainError):
    condition = "centre-at-infinity"


# osculating

class AmbientDimensionError(DomainError):
    condition = "ambient-dimension"


class ModelMismatchError(DomainError):
    condition = "model-mismatch"


class UnsupportedModelError(DomainError):
    condition = "unsupported-model"


class TangentPlaneIntersectionError(DomainError):
    condition = "tangent-plane-intersection"


class PluckerRelationError(DomainError):
    condition = "plucker-relation"


class GrassmannRelationError(DomainError):
    condition = "grassmann-relation"


class PencilError(DomainError):
    condition = "degenerate-pencil"


class FreeParameterError(DomainError):
    condition = "free-parameter"


# cone

class ZeroPointError(DomainError):
    condition = "zero-point"


class ConeVertexError(DomainError):
    condition = "cone-vertex"


class CoincidentGeneratorsError(DomainError):
    condition = "coincident-generators"


class SingularMatrixError(DomainError):
    condition = "singular-matrix"


# errata

class CatalogueError(ProjectiveToolkitError):
    """A catalogued correction that fails its own oracle."""

    condition = "catalogue-defect"
