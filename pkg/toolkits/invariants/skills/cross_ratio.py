"""
CrossRatio Skill

Cross-ratio of the directions of four elements.
"""

from typing import Any, Dict

from src.services.documents import decode_elements, encode_cross_ratio
from src.services.errors import DegenerateConfigurationError, DomainError
from src.services.invariants import cross_ratio
from src.skills.base import BaseSkill, SkillContext


class CrossRatioSkill(BaseSkill):
    """
    Skill to compute the cross-ratio of four directions.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="cross_ratio", description="Cross-ratio of four directions")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        elements = decode_elements(context.get("input"))
        try:
            if len(elements) != 4:
                raise DegenerateConfigurationError(f"cross-ratio needs four elements, got {len(elements)}")
            value = cross_ratio(*(e.v for e in elements))
        except DomainError as e:
            return self.fail(e)
        return self.succeed(encode_cross_ratio(value))
