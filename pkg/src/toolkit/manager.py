import importlib.util
import logging
import os
import sys
from typing import Any, Dict, List, Mapping, Optional

from src.services.errors import UsageError

from .base import BaseToolkit


class ToolkitManager:
    def __init__(self, root: str):
        self.root = root
        self.toolkits: Dict[str, BaseToolkit] = {}
        self.logger = logging.getLogger("toolkit.manager")

    def load_toolkits(self) -> None:
        """
        Dynamically loads toolkits from ./toolkits/.

        Directories are visited in sorted order so routing is deterministic.
        """
        toolkits_root = os.path.join(self.root, "toolkits")
        if not os.path.exists(toolkits_root):
            self.logger.warning("No 'toolkits' directory found.")
            return

        for toolkit_name in sorted(os.listdir(toolkits_root)):
            toolkit_dir = os.path.join(toolkits_root, toolkit_name)
            if not os.path.isdir(toolkit_dir):
                continue

            if not os.path.exists(os.path.join(toolkit_dir, "toolkit.py")):
                self.logger.warning(f"Skipping {toolkit_name}: Missing toolkit.py")
                continue
            if not os.path.exists(os.path.join(toolkit_dir, "config.yaml")):
                self.logger.warning(f"Skipping {toolkit_name}: Missing config.yaml")
                continue

            module_name = f"toolkits.{toolkit_name}"
            spec = importlib.util.spec_from_file_location(module_name, os.path.join(toolkit_dir, "toolkit.py"))
            module = importlib.util.module_from_spec(spec)
            sys.modules[module_name] = module
            spec.loader.exec_module(module)

            toolkit_class = None
            for attr_name in dir(module):
                attr = getattr(module, attr_name)
                if isinstance(attr, type) and attr is not BaseToolkit and issubclass(attr, BaseToolkit):
                    toolkit_class = attr
                    break

            if not toolkit_class:
                self.logger.error(f"No valid BaseToolkit subclass found in {toolkit_name}/toolkit.py")
                continue

            self.toolkits[toolkit_name] = toolkit_class(toolkit_name, toolkit_dir, self.root)
            self.logger.debug(f"Registered toolkit: {toolkit_name}")

    def commands(self) -> List[str]:
        return sorted(command for toolkit in self.toolkits.values() for command in toolkit.commands)

    def route(self, command: str) -> Optional[BaseToolkit]:
        """The first toolkit whose can_handle accepts the command."""
        for toolkit in self.toolkits.values():
            if toolkit.can_handle(command):
                return toolkit
        return None

    async def dispatch(self, command: str, request: Mapping[str, Any]) -> Dict[str, Any]:
        """
        Raises:
            UsageError: If no toolkit handles the command
        """
        toolkit = self.route(command)
        if toolkit is None:
            raise UsageError(f"unknown subcommand {command!r}")
        self.logger.info(f"Routing {command} to toolkit: {toolkit.toolkit_name}")
        return await toolkit.handle(command, request)
