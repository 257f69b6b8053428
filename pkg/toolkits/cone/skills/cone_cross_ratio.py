"""
ConeCrossRatio Skill

Cross-ratio of the four generators through four cone points.
"""

from typing import Any, Dict

from src.services.cone import cone_cross_ratio
from src.services.documents import decode_points, encode_cross_ratio
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class ConeCrossRatioSkill(BaseSkill):
    """
    Skill to compute the cross-ratio of four cone generators.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="cone_cross_ratio", description="Cross-ratio of cone generators")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        points = decode_points(context.get("input"))
        try:
            value = cone_cross_ratio(points)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(encode_cross_ratio(value))
