"""
GMatrix Skill

The 5x5 matrix of a jet map (--map), or the symmetric cube of a 2x2
matrix document (--sym3).
"""

from typing import Any, Dict

from src.services.cone import g_from_jetmap, sym3
from src.services.documents import decode_jetmap, decode_matrix, encode_matrix
from src.services.errors import DomainError, UsageError
from src.skills.base import BaseSkill, SkillContext


class GMatrixSkill(BaseSkill):
    """
    Skill to build the linear action on the cone.
    """

    optional_inputs = ("map", "sym3")

    def __init__(self):
        super().__init__(name="g_matrix", description="Matrix of the cone action")

    async def validate_input(self, context: SkillContext, **kwargs) -> bool:
        given = [key for key in self.optional_inputs if context.get(key) is not None]
        if len(given) != 1:
            raise UsageError("g-matrix needs exactly one of --map and --sym3")
        return True

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        try:
            if context.get("map") is not None:
                return self.succeed(encode_matrix(g_from_jetmap(decode_jetmap(context.get("map"))), name="G"))
            m = decode_matrix(context.get("sym3"), 2)
            return self.succeed(encode_matrix(sym3(m), name="sym3"))
        except DomainError as e:
            return self.fail(e)
