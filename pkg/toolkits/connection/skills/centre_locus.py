"""
CentreLocus Skill

Plane curve traced by the centres of curvature of a connection or rank-two equation.
"""

from typing import Any, Dict

from src.services.connection import central_locus
from src.services.documents import (
    carry_basepoint,
    decode_connection,
    decode_rank2,
    encode_locus,
    validate,
)
from src.services.errors import DomainError
from src.skills.base import BaseSkill, SkillContext


class CentreLocusSkill(BaseSkill):
    """
    Skill to compute the central locus of an equation.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(name="centre_locus", description="Central locus of an equation")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        source = context.get("input")
        kind = validate(source, "connection", "rank2")
        try:
            eqn = decode_connection(source) if kind == "connection" else decode_rank2(source)
            locus = central_locus(eqn)
        except DomainError as e:
            return self.fail(e)
        name = "central-cubic" if kind == "connection" else "central-sextic"
        return self.succeed(carry_basepoint(source, encode_locus([locus], name=name)))
