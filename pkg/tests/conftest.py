"""
Shared pytest fixtures for the lacunary test suite.

This module provides fixtures that are automatically available to all test files:
- Problem contexts at the parameters of the reference tables
- Saddle catalogs built once per session
- The engine, the reference book and a FastAPI TestClient

Saddle catalogs are session-scoped: they are immutable and refining them is
the most expensive setup step.
"""

import pytest
from fastapi.testclient import TestClient

from lacunary.core.context import ProblemContext
from lacunary.core.engine import LacunaryEngine
from lacunary.core.saddles import Saddle, saddle_catalog
from lacunary.data.references import ReferenceBook

# ============================================================================
# CONTEXT FIXTURES
# ============================================================================


@pytest.fixture(scope="session")
def ctx_1000_2() -> ProblemContext:
    """n = 1000, x = 2: the saddle table."""
    return ProblemContext(1000, 2.0)


@pytest.fixture(scope="session")
def ctx_200_2() -> ProblemContext:
    """n = 200, x = 2: the path figure and a value-table column."""
    return ProblemContext(200, 2.0)


@pytest.fixture(scope="session")
def ctx_complex() -> ProblemContext:
    """n = 100, |x| = 3, theta = 0.3 pi: a complex argument above the first Stokes angle."""
    return ProblemContext.from_polar(100, 3.0, 0.3)


# ============================================================================
# SADDLE FIXTURES
# ============================================================================


@pytest.fixture(scope="session")
def saddles_1000_2(ctx_1000_2) -> list[Saddle]:
    """s_0 .. s_5 at n = 1000, x = 2."""
    return saddle_catalog(0, 5, ctx_1000_2)


@pytest.fixture(scope="session")
def symmetric_saddles_200_2(ctx_200_2) -> list[Saddle]:
    """s_{-2} .. s_2 at n = 200, x = 2."""
    return saddle_catalog(-2, 2, ctx_200_2)


# ============================================================================
# ENGINE / SERVICE FIXTURES
# ============================================================================


@pytest.fixture(scope="session")
def references() -> ReferenceBook:
    return ReferenceBook()


@pytest.fixture(scope="function")
def engine() -> LacunaryEngine:
    """A fresh engine (empty Stokes chart cache) per test."""
    return LacunaryEngine()


@pytest.fixture(scope="function")
def test_client() -> TestClient:
    """
    FastAPI TestClient over the service application.

    Example:
        def test_health(test_client):
            response = test_client.get("/health")
            assert response.status_code == 200
    """
    from lacunary.api.server import app

    return TestClient(app)
