"""
Incidence Skill

Expands the determinant saying that an osculating plane meets the geometric
datum (line, pencil or plane) and reads the connection off it.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_geometry, decode_model, encode_incidence
from src.services.errors import DomainError
from src.services.osculating import incidence_form
from src.skills.base import BaseSkill, SkillContext


class IncidenceSkill(BaseSkill):
    """
    Skill to read a connection off an incidence condition.
    """

    inputs = ("model", "geometry")

    def __init__(self):
        super().__init__(name="incidence", description="Connection defined by an incidence condition")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        """
        Returns:
            An incidence document with the normalized form, the extracted
            connection and the printed coefficient map on the same data
        """
        model = decode_model(context.get("model"))
        geometry_doc = context.get("geometry")
        geometry = decode_geometry(geometry_doc)
        try:
            result = incidence_form(model, geometry)
        except DomainError as e:
            return self.fail(e)
        if result.connection != result.printed_map:
            self.logger.info("printed coefficient map differs from the expansion")
        return self.succeed(carry_basepoint(geometry_doc, encode_incidence(result)))
