from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

import helpers

settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")

SCENARIO_DIR = Path(__file__).resolve().parents[1] / "scenarios"


@pytest.fixture
def n1_network():
    return helpers.build_n1()


@pytest.fixture
def n2_network():
    return helpers.build_n2()


@pytest.fixture
def n1_packages():
    return helpers.N1_PACKAGES


@pytest.fixture
def n2_packages():
    return helpers.N2_PACKAGES


@pytest.fixture
def scenario_dir() -> Path:
    return SCENARIO_DIR
