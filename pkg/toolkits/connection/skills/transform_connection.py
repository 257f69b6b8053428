"""
TransformConnection Skill

Image of a connection under a jet map, in closed form.
"""

from typing import Any, Dict

from src.services.connection import transform_connection
from src.services.documents import carry_basepoint, decode_connection, decode_jetmap, encode_connection
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class TransformConnectionSkill(BaseSkill):
    """
    Skill to move a connection by a jet map.
    """

    inputs = ("input", "map")

    def __init__(self):
        super().__init__(name="transform_connection", description="Transform a connection by a jet map")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        try:
            k = decode_connection(source)
            g = decode_jetmap(context.get("map"))
            image = transform_connection(g, k)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_connection(image)))
