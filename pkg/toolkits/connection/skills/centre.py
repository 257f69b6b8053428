"""
Centre Skill

Centres of curvature of elements. With --map the centres are carried through
the jet map by the induced plane transformation.
"""

from typing import Any, Dict

from src.services.connection import centre, centre_transform
from src.services.documents import decode_jetmap, elements_from_context, encode_centre, encode_centres
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class CentreSkill(BaseSkill):
    """
    Skill to compute centres of curvature.
    """

    optional_inputs = ("input", "map")

    def __init__(self):
        super().__init__(name="centre", description="Centre of curvature of elements")

    def wants_stdin(self, request: Dict[str, Any]) -> bool:
        return request.get("v") is None and request.get("w") is None

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        """
        Returns:
            A centre document: x0, y0 for a single element, a list otherwise
        """
        elements = elements_from_context(context)
        try:
            points = [centre(e) for e in elements]
            if context.get("map") is not None:
                g = decode_jetmap(context.get("map"))
                points = [centre_transform(g, p) for p in points]
        except DomainError as e:
            return self.fail(e)
        if len(points) == 1:
            return self.succeed(encode_centre(points[0]))
        return self.succeed(encode_centres(points))
