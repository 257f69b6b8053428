"""
StraightLines Skill

Connection whose curves are the straight lines of a plane surface.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_model, encode_connection
from src.services.errors import DomainError
from src.services.osculating import straight_lines_connection
from src.skills.base import BaseSkill, SkillContext


class StraightLinesSkill(BaseSkill):
    """
    Skill to compute the straight-lines connection of a plane surface.
    """

    inputs = ("model",)

    def __init__(self):
        super().__init__(name="straight_lines", description="Straight lines of a plane surface frame")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("model")
        model = decode_model(source)
        try:
            k = straight_lines_connection(model)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_connection(k)))
