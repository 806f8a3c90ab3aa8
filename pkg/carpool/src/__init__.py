# carpool/src/__init__.py

from .config import __all__ as config_all
from .model import __all__ as model_all
from .impatience import __all__ as impatience_all
from .coalition import __all__ as coalition_all
from .allocation import __all__ as allocation_all
from .harness import __all__ as harness_all

__all__ = ["config_all", "model_all", "impatience_all", "coalition_all", "allocation_all", "harness_all"]
