import pytest

from trisectagon import (
    heptagon_type1,
    heptagon_type2_radii,
    make_context,
    tridecagon_type2_radii,
)


@pytest.fixture(scope="session")
def ctx():
    return make_context(50)


@pytest.fixture(scope="session")
def ctx100():
    return make_context(100)


@pytest.fixture(scope="session")
def heptagon1(ctx):
    return heptagon_type1(ctx)


@pytest.fixture(scope="session")
def heptagon_ladder(ctx):
    return heptagon_type2_radii(ctx)


@pytest.fixture(scope="session")
def tridecagon_ladder(ctx):
    return tridecagon_type2_radii("corrected", ctx)
