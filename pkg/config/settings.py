"""Configuration management for the Genetic Fuzzy Airfoil Toolkit."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Dataset
    data_path: str = Field(default='data/airfoil_self_noise.dat')

    # Output Settings
    output_dir: str = Field(default='outputs')
    log_dir: str = Field(default='logs')
    log_level: str = Field(default='INFO')

    # GA worker threads used for fitness evaluation
    threads: int = Field(default=1, ge=1)

    model_config = SettingsConfigDict(
        env_prefix='GFS_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore',
    )


# Global settings instance
settings: Optional[Settings] = None


def load_settings() -> Settings:
    """Load and return application settings."""
    global settings
    if settings is None:
        settings = Settings()
    return settings

