"""Configuration management using Pydantic Settings."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix PRYMCUSPS_)."""

    # Logging
    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)"
    )

    # Display
    display_digits: int = Field(
        default=15,
        ge=1,
        description="Decimal digits of s written into report records"
    )

    # Stable curves
    stable_precision: int = Field(
        default=15,
        ge=1,
        description="Default decimal precision of marked points in the stable command"
    )
    guard_digits: int = Field(
        default=10,
        ge=0,
        description="Extra working digits used before precision doubling"
    )
    residue_samples: int = Field(
        default=32,
        ge=2,
        description="Sample points for the numeric residue identity"
    )
    residue_tolerance: float = Field(
        default=1e-9,
        gt=0,
        description="Relative deviation allowed in the residue identity"
    )
    residue_working_digits: int = Field(
        default=20,
        ge=15,
        description="mpmath working digits for the residue identity"
    )
    residue_dmax: int = Field(
        default=1000,
        ge=5,
        description="Largest discriminant on which the sweep runs the residue identity"
    )

    # Verification sweep
    verify_dmax: int = Field(
        default=1000,
        ge=5,
        description="Default upper bound of the verification sweep"
    )
    max_workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for the sweep (1 runs inline)"
    )

    # Caching
    enumeration_cache_size: int = Field(
        default=4096,
        ge=1,
        description="Number of discriminants whose enumeration is memoised"
    )

    model_config = SettingsConfigDict(
        env_prefix="PRYMCUSPS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Cached toolkit settings
    """
    return Settings()
