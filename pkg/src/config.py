"""Configuration module for ultranorm."""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Runtime defaults from environment variables (or a local `.env`)."""

    # Field
    ULTRANORM_DEFAULT_PRIME: int = 2

    # Classification harness
    ULTRANORM_STAGNATION_BOUND: int = 128
    ULTRANORM_DEFAULT_SEED: int = 0
    ULTRANORM_SUITE_SAMPLES: int = 100
    ULTRANORM_PROBE_STEPS: int = 1000
    ULTRANORM_ISOMETRY_SAMPLES: int = 64

    # Application Settings
    LOG_LEVEL: str = "WARNING"

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


# Global settings instance
settings = Settings()
