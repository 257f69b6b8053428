"""
Embed Skill

Sends elements to [1 : v : v^2 : v^3 : w] on the cone. With --map the points
are then moved by the matrix of the jet map.
"""

from typing import Any, Dict

from src.services.cone import apply_gmat, embed, g_from_jetmap, on_cone
from src.services.documents import carry_basepoint, decode_elements, decode_jetmap, encode_points
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class EmbedSkill(BaseSkill):
    """
    Skill to embed elements in the cone.
    """

    inputs = ("input",)
    optional_inputs = ("map",)

    def __init__(self):
        super().__init__(name="embed", description="Embed elements in the cubic cone")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        elements = decode_elements(source)
        try:
            points = [embed(e) for e in elements]
            if context.get("map") is not None:
                G = g_from_jetmap(decode_jetmap(context.get("map")))
                points = [apply_gmat(G, p) for p in points]
        except DomainError as e:
            return self.fail(e)
        return self.succeed(carry_basepoint(source, encode_points(points, [on_cone(p) for p in points])))
