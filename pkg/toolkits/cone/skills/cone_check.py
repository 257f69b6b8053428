"""
ConeCheck Skill

Marks which points satisfy the three quadrics of the cone.
"""

from typing import Any, Dict

from src.services.cone import on_cone
from src.services.documents import carry_basepoint, decode_points, encode_points
from src.skills.base import BaseSkill, SkillContext


class ConeCheckSkill(BaseSkill):
    """
    Skill to test points against the cone.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="cone_check", description="Test points for membership in the cone")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        points = decode_points(source)
        flags = [on_cone(p) for p in points]
        self.logger.debug(f"{sum(flags)} of {len(points)} points on the cone")
        return self.succeed(carry_basepoint(source, encode_points(points, flags)))
