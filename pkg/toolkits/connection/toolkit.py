import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

from src.toolkit.base import BaseToolkit


class ConnectionToolkit(BaseToolkit):
    """Connections u'' = A + B u' + C u'^2 + D u'^3 and the jet group acting on them."""
