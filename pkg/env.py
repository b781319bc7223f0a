"""Environment-based configuration using Pydantic settings."""

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Loads runtime knobs from the environment and the .env file."""

    PAM_WORKERS: int = 1
    LOG_LEVEL: str = "INFO"
    PAM_MAX_ORDER_K: int = 10
    PAM_FLOAT_FORMAT: str = "repr"

    @field_validator("PAM_WORKERS", "PAM_MAX_ORDER_K", mode="before")
    @classmethod
    def _parse_positive(cls, value: str | int) -> int:
        if isinstance(value, str):
            value = value.strip() or "1"
        parsed = int(value)
        if parsed < 1:
            raise ValueError(f"expected a positive integer, got {parsed}")
        return parsed

    @field_validator("PAM_FLOAT_FORMAT", mode="before")
    @classmethod
    def _parse_float_format(cls, value: str) -> str:
        raw = str(value).strip().lower()
        if raw not in {"repr", "fixed"}:
            raise ValueError(f"unknown float format '{value}'")
        return raw

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


settings = Settings()
