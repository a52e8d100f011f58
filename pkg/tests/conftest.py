"""Shared fixtures: the shipped registry and the full fusion table.

Both are expensive to build (the degree-6 singular vectors have 65
graded-basis coordinates), so they are session-scoped and shared across
the whole suite.
"""

import pytest

from wfusion import ModuleRegistry, build_table


@pytest.fixture(scope="session")
def registry():
    return ModuleRegistry.load()


@pytest.fixture(scope="session")
def table(registry):
    return build_table(registry)
