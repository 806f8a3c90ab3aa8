# carpool/src/config/__init__.py

from .config_loader import (
    ConfigLoader,
    ConfigFileNotFoundError,
    ConfigFileFormatError,
    ConfigLoaderException,
)
from .settings import (
    HarnessSettings,
    LOG_FORMAT,
    load_settings,
    settings_from_dict,
)

__all__ = [
    "ConfigLoader",
    "ConfigFileNotFoundError",
    "ConfigFileFormatError",
    "ConfigLoaderException",
    "HarnessSettings",
    "LOG_FORMAT",
    "load_settings",
    "settings_from_dict",
]
