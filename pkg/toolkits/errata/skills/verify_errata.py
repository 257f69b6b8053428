"""
VerifyErrata Skill

Loads the printed-formula catalogue and reports, per formula, whether the
printed form matches its oracle, with a counterexample when it does not.
"""

from typing import Any, Dict

from src.services.documents import encode_report
from src.services.errata import DIFFERS, verify_errata
from src.skills.base import BaseSkill, SkillContext


class VerifyErrataSkill(BaseSkill):
    """
    Skill to check the printed-formula catalogue.
    """

    def __init__(self, toolkit):
        """
        Args:
            toolkit: ErrataToolkit that knows where the catalogue lives
        """
        super().__init__(name="verify_errata", description="Check printed formulas against their oracles")
        self.toolkit = toolkit

    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        catalogue = await self.toolkit.load_catalogue(context.get("catalog"))
        findings = verify_errata(catalogue)
        differing = [f.formula for f in findings if f.status == DIFFERS]
        self.logger.info(f"{len(findings)} formulas checked, {len(differing)} differ: {differing}")
        return self.succeed(encode_report([f.to_entry() for f in findings]))
