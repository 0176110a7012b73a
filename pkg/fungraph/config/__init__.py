"""
Configuration Brick

PUBLIC CONTRACT:
- settings: Global settings instance
- Settings: Main settings class

RESPONSIBILITIES:
- Environment variable management
- Configuration validation
- Size guards for the CLI and the oracle
- Debug assertions switch
"""

from .settings import Settings
from .settings import settings

__all__ = ["settings", "Settings"]
