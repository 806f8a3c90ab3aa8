# carpool/__init__.py

from .src import __all__ as src_all

__all__ = ["src_all"]
