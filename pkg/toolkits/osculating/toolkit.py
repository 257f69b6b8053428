import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.toolkit.base import BaseToolkit


class OsculatingToolkit(BaseToolkit):
    """Connections defined by surface frames and the planes that osculate their curves."""
