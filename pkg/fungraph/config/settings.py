"""
Settings implementation for fungraph.

This module handles all configuration through environment variables
and provides validated settings objects.
"""

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Main settings class for fungraph.

    All settings are loaded from environment variables with FDG_ prefix.
    """

    # Application settings
    DEBUG: bool = Field(default=False, description="Check canonicality inside the successor functions")
    LOG_LEVEL: str = Field(default="WARNING", description="Minimum structlog level name")

    # Size guards
    MAX_SIZE: int = Field(default=1_000_000, ge=1, description="Largest -n accepted by the CLI")
    ORACLE_MAX_N: int = Field(default=8, ge=1, le=10, description="Largest n the brute-force oracle enumerates")
    ORACLE_WORKERS: int = Field(default=1, ge=1, description="Process pool width for oracle classification")

    # Benchmark settings
    BENCH_LIMIT: int = Field(default=10_000, ge=1, description="Successor calls timed per size")
    BENCH_SLOPE_BOUND: float = Field(default=3.5, gt=0, description="Expected upper bound of the log-log delay slope")

    class Config:
        env_prefix = "FDG_"
        case_sensitive = True


# Global settings instance - import this from other bricks
settings = Settings()
