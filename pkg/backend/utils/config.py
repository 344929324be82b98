"""
Configuration utilities for the cofinite injection engine
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from loguru import logger

LOG_LEVELS = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="CFINJ_",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"

    # Arithmetic limits
    int_limit: int = 2**63 - 1
    max_threshold: int = 1_000_000

    # Oracle and self-checks
    brute_force_bound: int = 4
    bicyclic_check_depth: int = 3

    # API Configuration
    api_host: str = "localhost"
    api_port: int = 8000


# Global settings instance
settings = Settings()


def validate_configuration(config: Settings = settings) -> bool:
    """
    Validate the loaded configuration

    Returns:
        True if configuration is valid, False otherwise
    """
    problems = []

    if config.log_level.upper() not in LOG_LEVELS:
        problems.append(f"CFINJ_LOG_LEVEL={config.log_level}")
    if config.int_limit <= 0:
        problems.append("CFINJ_INT_LIMIT must be positive")
    if config.max_threshold <= 0:
        problems.append("CFINJ_MAX_THRESHOLD must be positive")
    if config.brute_force_bound < 0:
        problems.append("CFINJ_BRUTE_FORCE_BOUND must be non-negative")
    if config.bicyclic_check_depth < 1:
        problems.append("CFINJ_BICYCLIC_CHECK_DEPTH must be at least 1")

    if config.brute_force_bound > 6:
        logger.warning("Brute-force bound above 6 - oracle enumerations may be slow")

    if problems:
        logger.error(f"Invalid configuration: {', '.join(problems)}")
        return False

    logger.info("Configuration validation passed")
    return True


def get_api_url() -> str:
    """Get the backend API URL"""
    return f"http://{settings.api_host}:{settings.api_port}"
