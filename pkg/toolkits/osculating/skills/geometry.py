"""
Geometry Skill

Inverse of incidence: a line, pencil or plane whose incidence condition is
the given connection. --free NAME=VALUE fixes the free parameters.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_connection, decode_model, encode_geometry, rat
from src.services.errors import DomainError
from src.services.osculating import geometry_from_connection
from src.skills.base import BaseSkill, SkillContext


class GeometrySkill(BaseSkill):
    """
    Skill to build the geometric datum of a connection.
    """

    inputs = ("model", "input")

    def __init__(self):
        super().__init__(name="geometry", description="Geometric datum realizing a connection")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        model = decode_model(context.get("model"))
        source = context.get("input")
        free = {name: rat(value, f"--free {name}") for name, value in (context.get("free") or {}).items()}
        try:
            k = decode_connection(source)
            geometry = geometry_from_connection(model, k, free)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_geometry(geometry)))
