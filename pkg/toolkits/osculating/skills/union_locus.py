"""
UnionLocus Skill

Locus swept by the osculating planes of all curves of a connection.

A conjugate net needs the connection (--in). A general surface takes the
plane from --geometry, or builds it from the connection and --free.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_connection, decode_geometry, decode_model, encode_locus, rat
from src.services.errors import DomainError, ModelMismatchError, UnsupportedModelError
from src.services.osculating import (
    GeneralSurface,
    GrassmannPlane,
    LaplaceNet,
    geometry_from_connection,
    union_locus_conjugate,
    union_locus_general,
)
from src.skills.base import BaseSkill, SkillContext


class UnionLocusSkill(BaseSkill):
    """
    Skill to compute the union locus of the osculating planes.
    """

    inputs = ("model",)
    optional_inputs = ("input", "geometry")

    def __init__(self):
        super().__init__(name="union_locus", description="Union of osculating planes")

    def wants_stdin(self, request: Dict[str, Any]) -> bool:
        return request.get("geometry") is None

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        model = decode_model(context.get("model"))
        source = context.get("input") or context.get("geometry")
        free = {name: rat(value, f"--free {name}") for name, value in (context.get("free") or {}).items()}
        try:
            if isinstance(model, LaplaceNet):
                polynomials = [union_locus_conjugate(model, decode_connection(context.require("input")))]
            elif isinstance(model, GeneralSurface):
                if context.get("geometry") is not None:
                    plane = decode_geometry(context.get("geometry"))
                    if not isinstance(plane, GrassmannPlane):
                        raise ModelMismatchError("a general surface pairs with a Grassmann plane")
                else:
                    plane = geometry_from_connection(model, decode_connection(context.require("input")), free)
                polynomials = list(union_locus_general(plane))
            else:
                raise UnsupportedModelError(f"no union locus for {model.tag}")
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_locus(polynomials, name="union-locus")))
