from __future__ import annotations

import os

import pytest

from super_o.algebra import AlgebraDescriptor, build_algebra
from super_o.config import Config


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--long", action="store_true", default=False, help="run the enlarged oracle grids")


def _long_enabled(config: pytest.Config) -> bool:
    flag = os.environ.get("SUPER_O_LONG", "").strip().lower()
    return bool(config.getoption("--long")) or flag in {"1", "true", "yes", "on"}


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if _long_enabled(config):
        return
    skip = pytest.mark.skip(reason="needs --long or SUPER_O_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def config() -> Config:
    return Config()


@pytest.fixture
def gl2() -> AlgebraDescriptor:
    return build_algebra("gl", 2)


@pytest.fixture
def gl3() -> AlgebraDescriptor:
    return build_algebra("gl", 3)


@pytest.fixture
def pe2() -> AlgebraDescriptor:
    return build_algebra("pe", 2)


@pytest.fixture
def pe3() -> AlgebraDescriptor:
    return build_algebra("pe", 3)


@pytest.fixture
def osp22() -> AlgebraDescriptor:
    return build_algebra("osp", 1)


@pytest.fixture
def gl11() -> AlgebraDescriptor:
    return build_algebra("glmn", 1, 1, allow_equal_ranks=True)


@pytest.fixture
def long_config() -> Config:
    return Config(long_tests=True)
