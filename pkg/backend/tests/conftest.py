"""
Shared fixtures: one instance of each service per test session
"""

import random
from typing import Iterator

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings
from loguru import logger

from services.chains import ChainEngine
from services.congruences import CongruenceEngine
from services.green_relations import GreenRelations
from services.oracle import BruteForceOracle

hypothesis_settings.register_profile(
    "engine",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("engine")


@pytest.fixture(scope="session")
def green() -> GreenRelations:
    return GreenRelations()


@pytest.fixture(scope="session")
def congruences() -> CongruenceEngine:
    return CongruenceEngine()


@pytest.fixture(scope="session")
def chains() -> ChainEngine:
    return ChainEngine()


@pytest.fixture(scope="session")
def oracle() -> BruteForceOracle:
    return BruteForceOracle()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


@pytest.fixture
def log_records() -> Iterator[list[str]]:
    """Formatted loguru lines emitted during the test"""
    records: list[str] = []
    handler_id = logger.add(records.append, level="DEBUG", format="{level} {message}")
    yield records
    logger.remove(handler_id)

