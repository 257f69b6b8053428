"""
FitConnection Skill

Solves the Vandermonde system for the unique connection through four
elements with distinct directions.
"""

from typing import Any, Dict

from src.services.connection import fit_connection
from src.services.documents import carry_basepoint, decode_elements, encode_connection
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class FitConnectionSkill(BaseSkill):
    """
    Skill to fit a connection through four elements.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="fit_connection", description="Connection through four elements")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        elements = decode_elements(source)
        try:
            k = fit_connection(elements)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_connection(k)))
