from .base import BaseToolkit
from .manager import ToolkitManager

__all__ = ["BaseToolkit", "ToolkitManager"]
