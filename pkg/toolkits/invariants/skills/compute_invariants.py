"""
ComputeInvariants Skill

The 2n-8 joint invariants (n-3 for n in {4, 5}) of an element tuple.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_elements, encode_invariants
from src.services.errors import DomainError
from src.services.invariants import compute_invariants
from src.skills.base import BaseSkill, SkillContext


class ComputeInvariantsSkill(BaseSkill):
    """
    Skill to compute the joint invariants of an element tuple.
    """

    inputs = ("input",)

    def __init__(self):
        super().__init__(
            name="compute_invariants",
            description="Joint rational invariants r_j and omega_l of n >= 4 elements"
        )

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        """
        Args:
            context: Holds the "elements" document under "input"

        Returns:
            An invariants document, or the genericity condition that failed
        """
        source = context.get("input")
        elements = decode_elements(source)
        try:
            invariants = compute_invariants(elements)
        except DomainError as e:
            return self.fail(e)
        self.logger.info(f"{invariants.count} invariants for {len(elements)} elements")
        return self.succeed(carry_basepoint(source, encode_invariants(invariants)))
