"""
TransformElement Skill

Pushes elements (from --in or --v/--w) through the jet map given by --map.
"""

from typing import Any, Dict

from src.services.documents import decode_jetmap, elements_from_context, encode_elements
from src.services.errors import DomainError
from src.services.jet import apply_all
from src.skills.base import BaseSkill, SkillContext


class TransformElementSkill(BaseSkill):
    """
    Skill to move elements by a jet map.
    """

    inputs = ("map",)
    optional_inputs = ("input",)

    def __init__(self):
        super().__init__(name="transform_element", description="Apply a jet map to elements")

    def wants_stdin(self, request: Dict[str, Any]) -> bool:
        return request.get("v") is None and request.get("w") is None

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        elements = elements_from_context(context)
        try:
            g = decode_jetmap(context.get("map"))
            images = apply_all(g, elements)
        except DomainError as e:
            return self.fail(e)
        return self.succeed(encode_elements(images))
