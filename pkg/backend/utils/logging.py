"""
Loguru sink setup shared by the CLI and the API
"""

import sys

from loguru import logger

from utils.config import settings


def configure_logging(level: str | None = None) -> None:
    """Replace loguru's default sink with a single stderr sink"""
    logger.remove()
    logger.add(
        sys.stderr,
        level=(level or settings.log_level).upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}",
    )
