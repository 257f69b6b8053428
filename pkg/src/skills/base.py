"""
Base classes for the Skills system.

A skill wraps one toolkit operation: it reads decoded documents from the
context, calls into src.services and returns either an output document or an
error document.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.services.errors import DomainError, UsageError


@dataclass
class SkillContext:
    """
    Shared context passed to a skill.

    Attributes:
        data: Raw input documents by role ("input", "map", "model", ...) plus
            scalar flags ("v", "w", "free")
        toolkit: The toolkit running the skill
        command: Subcommand that selected the skill
    """
    data: Dict[str, Any] = field(default_factory=dict)
    toolkit: Optional[Any] = None
    command: Optional[str] = None

    def get(self, key: str, default: Any = None) -> Any:
        return self.data.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self.data[key] = value

    def update(self, updates: Dict[str, Any]) -> None:
        self.data.update(updates)

    def require(self, key: str) -> Any:
        """
        Raises:
            UsageError: If the key was not supplied
        """
        if self.data.get(key) is None:
            raise UsageError(f"{self.command or 'command'} needs --{'in' if key == 'input' else key.replace('_', '-')}")
        return self.data[key]


class BaseSkill(ABC):
    """
    Abstract base class for all skills.

    Subclasses declare the documents they read in `inputs` (always loaded) and
    `optional_inputs` (loaded only when the flag is given), and implement
    execute().
    """

    inputs: Tuple[str, ...] = ()
    optional_inputs: Tuple[str, ...] = ()

    def __init__(self, name: str, description: str = ""):
        """
        Initialize the skill.

        Args:
            name: Unique name for this skill
            description: Human-readable description of what the skill does
        """
        self.name = name
        self.description = description
        self.logger = logging.getLogger(f"skill.{name}")

    @abstractmethod
    async def execute(self, context: SkillContext, **kwargs) -> Dict[str, Any]:
        """
        Execute the skill's main logic.

        Returns:
            {"success": True, "document": ...} or {"success": False, "error": ...}
        """

    async def validate_input(self, context: SkillContext, **kwargs) -> bool:
        """Checks that every required document was loaded."""
        for key in self.inputs:
            if context.get(key) is None:
                self.logger.error(f"Missing required document: {key}")
                return False
        return True

    def wants_stdin(self, request: Dict[str, Any]) -> bool:
        """Whether a missing --in means standard input."""
        return "input" in self.inputs or "input" in self.optional_inputs

    def succeed(self, document: Dict[str, Any]) -> Dict[str, Any]:
        return {"success": True, "document": document}

    def fail(self, error: DomainError) -> Dict[str, Any]:
        self.logger.warning(f"{self.name} failed: {error.condition}: {error}", exc_info=True)
        return {"success": False, "error": error.to_document()}

    def __str__(self) -> str:
        return f"Skill({self.name})"

    def __repr__(self) -> str:
        return f"<Skill name={self.name} desc='{self.description[:50]}'>"


class SkillRegistry:
    """Registry for managing and accessing skills."""

    def __init__(self):
        self._skills: Dict[str, BaseSkill] = {}
        self.logger = logging.getLogger("skill.registry")

    def register(self, skill: BaseSkill) -> None:
        """
        Register a skill.

        Raises:
            ValueError: If a skill with the same name already exists
        """
        if skill.name in self._skills:
            raise ValueError(f"Skill '{skill.name}' is already registered")

        self._skills[skill.name] = skill
        self.logger.debug(f"Registered skill: {skill.name}")

    def get(self, name: str) -> Optional[BaseSkill]:
        return self._skills.get(name)

    def get_all(self) -> List[BaseSkill]:
        return list(self._skills.values())

    def list_names(self) -> List[str]:
        return list(self._skills.keys())

    def unregister(self, name: str) -> bool:
        if name in self._skills:
            del self._skills[name]
            self.logger.debug(f"Unregistered skill: {name}")
            return True
        return False

    def clear(self) -> None:
        self._skills.clear()


class SkillExecutor:
    """Executes skills with proper error handling and logging."""

    def __init__(self, registry: SkillRegistry):
        self.registry = registry
        self.logger = logging.getLogger("skill.executor")

    async def execute(self, skill_name: str, context: SkillContext, **kwargs) -> Dict[str, Any]:
        """
        Execute a skill by name.

        Raises:
            UsageError: If the skill is unknown or its inputs are missing
            Exception: Anything the skill does not turn into an error document
        """
        skill = self.registry.get(skill_name)
        if not skill:
            raise UsageError(f"Skill '{skill_name}' not found in registry")

        self.logger.debug(f"Executing skill: {skill_name}")

        try:
            if not await skill.validate_input(context, **kwargs):
                raise UsageError(f"Input validation failed for skill '{skill_name}'")

            result = await skill.execute(context, **kwargs)

            self.logger.debug(f"Skill '{skill_name}' completed: success={result.get('success')}")
            return result

        except UsageError:
            raise
        except Exception as e:
            self.logger.error(f"Skill '{skill_name}' failed: {e}", exc_info=True)
            raise
