import asyncio
import importlib.util
import logging
import os
import sys
from typing import Any, Dict, Mapping, Optional

import aiofiles
import yaml

from src.services.documents import dumps, loads
from src.services.errors import UsageError
from src.skills.base import SkillContext, SkillExecutor, SkillRegistry

STDIN = "-"


class BaseToolkit:
    """
    A group of subcommands backed by one skill registry.

    Layout of a toolkit directory:
        toolkit.py      BaseToolkit subclass
        config.yaml     description, commands (subcommand -> skill), allowed_tools
        skills/         __init__.py with create_<name>_skills_registry(toolkit)
    """

    required_keys = ("description", "commands", "allowed_tools")

    def __init__(self, toolkit_name: str, toolkit_dir: str, root: Optional[str] = None):
        self.toolkit_name = toolkit_name
        self.toolkit_dir = toolkit_dir
        self.root = root or os.path.dirname(os.path.dirname(toolkit_dir))
        self.logger = logging.getLogger(f"toolkit.{toolkit_name}")
        self.config = self.load_config()
        self.skills_registry = self.load_skills()
        self.skills_executor = SkillExecutor(self.skills_registry)
        self.logger.debug(f"{toolkit_name} initialized with {len(self.skills_registry.list_names())} skills")

    def load_config(self) -> Dict[str, Any]:
        config_path = os.path.join(self.toolkit_dir, "config.yaml")
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Config for toolkit {self.toolkit_name} not found at {config_path}")

        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}

        for key in self.required_keys:
            if key not in config:
                raise ValueError(f"Toolkit {self.toolkit_name} missing required config key: {key}")
        return config

    def load_skills(self) -> SkillRegistry:
        init_path = os.path.join(self.toolkit_dir, "skills", "__init__.py")
        spec = importlib.util.spec_from_file_location(f"{self.toolkit_name}_skills", init_path)
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        factory = getattr(module, f"create_{self.toolkit_name}_skills_registry")
        return factory(self)

    @property
    def commands(self) -> Dict[str, str]:
        return dict(self.config["commands"])

    def can_handle(self, command: str) -> bool:
        return command in self.config["commands"]

    # --- Document I/O ---

    async def read_document(self, path: str) -> Dict[str, Any]:
        """
        Raises:
            UsageError: If the file cannot be read
            DocumentError: If it does not hold a JSON object
        """
        if path == STDIN:
            text = await asyncio.to_thread(sys.stdin.read)
        else:
            try:
                async with aiofiles.open(path, mode="r", encoding="utf-8") as f:
                    text = await f.read()
            except OSError as e:
                raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
        self.logger.debug(f"Document read: {path}")
        return loads(text)

    async def write_document(self, path: str, document: Mapping[str, Any]) -> None:
        async with aiofiles.open(path, mode="w", encoding="utf-8") as f:
            await f.write(dumps(document))
        self.logger.debug(f"Document written: {path}")

    # --- Execution ---

    async def handle(self, command: str, request: Mapping[str, Any]) -> Dict[str, Any]:
        """
        Run the skill bound to command.

        Args:
            command: Subcommand name
            request: Document paths by role ("input", "map", ...) and scalar flags

        Returns:
            The skill's result dict
        """
        skill_name = self.config["commands"][command]
        if skill_name not in self.config["allowed_tools"]:
            raise UsageError(f"Toolkit {self.toolkit_name} may not run skill {skill_name}")
        skill = self.skills_registry.get(skill_name)
        if skill is None:
            raise UsageError(f"Skill '{skill_name}' not found in registry")

        context = SkillContext(toolkit=self, command=command)
        context.update({key: request.get(key) for key in ("v", "w", "free", "catalog")})
        for role in (*skill.inputs, *skill.optional_inputs):
            path = request.get(role)
            if path is None and role == "input" and skill.wants_stdin(request):
                path = STDIN
            if path is not None:
                context.set(role, await self.read_document(path))

        self.logger.info(f"Running {command} with skill {skill_name}")
        return await self.skills_executor.execute(skill_name, context)
