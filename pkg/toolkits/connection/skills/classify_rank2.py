"""
ClassifyRank2 Skill

Sextic, quartic or conic central locus of a rank-two equation.
"""

from typing import Any, Dict

from src.services.connection import classify_rank2
from src.services.documents import carry_basepoint, decode_rank2, encode_locus
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class ClassifyRankTwoSkill(BaseSkill):
    """
    Skill to classify rank-two central loci.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="classify_rank2", description="Classify the central locus of a rank-two equation")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        eqn = decode_rank2(source)
        try:
            classification, locus = classify_rank2(eqn)
        except DomainError as e:
            return self.fail(e)
        self.logger.info(f"rank-two locus is a {classification}")
        return self.succeed(carry_basepoint(source, encode_locus([locus], classification=classification)))
