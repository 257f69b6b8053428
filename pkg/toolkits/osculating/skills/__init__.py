"""Osculating Toolkit Skills"""

import importlib.util
import os

from src.skills.base import SkillRegistry

SKILLS = {
    "incidence": "IncidenceSkill",
    "geometry": "GeometrySkill",
    "envelope": "EnvelopeSkill",
    "union_locus": "UnionLocusSkill",
    "straight_lines": "StraightLinesSkill",
}


def _load_skill_module(skill_file):
    """Dynamically load a skill module from file path."""
    spec = importlib.util.spec_from_file_location(
        f"osculating_skill_{skill_file}",
        os.path.join(os.path.dirname(__file__), f"{skill_file}.py")
    )
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def create_osculating_skills_registry(toolkit) -> SkillRegistry:
    registry = SkillRegistry()
    for skill_file, class_name in SKILLS.items():
        registry.register(getattr(_load_skill_module(skill_file), class_name)())
    return registry
