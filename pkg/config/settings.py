"""Engine settings read from SHIFTFORGE_* variables and .env."""

from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator

APPLY_ORDERS = ("rightmost-first",)
LOG_FORMATS = ("console", "json")


class Settings(BaseSettings):
    """Bounds for windowed checks and probes, worker counts and log output."""

    model_config = SettingsConfigDict(
        env_prefix="SHIFTFORGE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: str = Field(default="console", description="console or json log lines on stderr")

    # Windows and search bounds
    window_radius: int = Field(default=16, ge=1, description="Default window radius for windowed operations")
    max_radius: int = Field(default=8, ge=0, le=12, description="Maximum probe radius")
    bs_depth: int = Field(default=8, ge=1, description="Default level depth of BS(1,n) windows")
    kernel_conjugation_depth: int = Field(
        default=1, ge=0, le=4,
        description="Conjugation depth used to sample kernel generators for claimed presentations",
    )

    # Workers
    probe_workers: int = Field(default=4, ge=1, le=32, description="Threads used by probes and batch evaluation")

    # Output
    report_dir: str = Field(default="reports", description="Default directory for probe reports")
    apply_order: str = Field(default="rightmost-first", description="Word composition order")

    @field_validator("apply_order")
    @classmethod
    def _known_apply_order(cls, value: str) -> str:
        if value not in APPLY_ORDERS:
            raise ValueError(f"unsupported apply order: {value}")
        return value

    @field_validator("log_format")
    @classmethod
    def _known_log_format(cls, value: str) -> str:
        value = value.lower()
        if value not in LOG_FORMATS:
            raise ValueError(f"log format must be one of {LOG_FORMATS}, got {value!r}")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_log_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

    @property
    def json_logs(self) -> bool:
        return self.log_format == "json"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
