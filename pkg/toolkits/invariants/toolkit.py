import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.toolkit.base import BaseToolkit


class InvariantsToolkit(BaseToolkit):
    """Invariants and cross-ratios of element tuples."""
