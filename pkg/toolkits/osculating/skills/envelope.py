"""
Envelope Skill

Cone enveloped by the osculating planes of the curves of a connection on an
asymptotic net: class equation, point equation and its degeneration.
"""

from typing import Any, Dict

from src.services.documents import carry_basepoint, decode_connection, decode_model, encode_locus
from src.services.errors import DomainError
from src.services.osculating import envelope_point_locus, envelope_tangential_cubic
from src.skills.base import BaseSkill, SkillContext


class EnvelopeSkill(BaseSkill):
    """
    Skill to compute the envelope of the osculating planes.
    """

    inputs = ("model", "input")

    def __init__(self):
        super().__init__(name="envelope", description="Envelope of osculating planes on an asymptotic net")

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        model = decode_model(context.get("model"))
        source = context.get("input")
        try:
            k = decode_connection(source)
            envelope = envelope_point_locus(model, k)
            tangential = envelope_tangential_cubic(model, k)
        except DomainError as e:
            return self.fail(e)
        document = encode_locus(
            envelope.reduced,
            classification=envelope.classification,
            discriminant=envelope.discriminant,
            tangential=tangential,
        )
        return self.succeed(carry_basepoint(source, document))
