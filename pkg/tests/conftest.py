from __future__ import annotations

import pytest

import helpers


@pytest.fixture(scope="session")
def fixture_polytopes():
    """The standard fixture suite, built once so lattice caches are shared."""
    return helpers.build_fixtures()


@pytest.fixture(scope="session")
def square(fixture_polytopes):
    return fixture_polytopes["unit-square"]


@pytest.fixture(scope="session")
def simplex3(fixture_polytopes):
    return fixture_polytopes["3-simplex"]


@pytest.fixture(scope="session")
def cube3(fixture_polytopes):
    return fixture_polytopes["3-cube"]


@pytest.fixture(scope="session")
def octa(fixture_polytopes):
    return fixture_polytopes["octahedron"]


@pytest.fixture(scope="session")
def cone_body():
    return helpers.cone_body()


@pytest.fixture(scope="session")
def stadium_body():
    return helpers.stadium_body()
