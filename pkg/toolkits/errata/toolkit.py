import os
import sys
from typing import Any, Dict, List, Optional

import aiofiles

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.services.errata import load_catalogue
from src.services.errors import UsageError
from src.toolkit.base import BaseToolkit


class ErrataToolkit(BaseToolkit):
    """Runs the printed-formula catalogue through its oracles."""

    required_keys = BaseToolkit.required_keys + ("catalog_path",)

    @property
    def catalog_path(self) -> str:
        path = self.config["catalog_path"]
        return path if os.path.isabs(path) else os.path.join(self.root, path)

    async def load_catalogue(self, path: Optional[str] = None) -> List[Dict[str, Any]]:
        """
        Args:
            path: Catalogue to read instead of the configured one

        Raises:
            UsageError: If the file cannot be read
        """
        path = path or self.catalog_path
        try:
            async with aiofiles.open(path, mode="r", encoding="utf-8") as f:
                text = await f.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
        self.logger.debug(f"Catalogue read: {path}")
        return load_catalogue(text)
