import importlib.resources

import pytest

from fulleroct.goldberg import (
    FIXTURE_NAMES,
    _k4,
    icosahedral_dual,
    icosahedral_fullerene,
    named_fixture,
    tetrakis_triangulation,
)
from fulleroct.graph import EmbeddedGraph, dual, from_faces
from fulleroct.transversal import independent_set, odd_cycle_transversal


@pytest.fixture(scope="session")
def data_dir():
    return importlib.resources.files("fulleroct") / "data"


@pytest.fixture(scope="session")
def fullerenes():
    return {name: named_fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def pipeline(fullerenes):
    """(fullerene, transversal, independent set) for every bundled fixture."""
    out = {}
    for name, f in fullerenes.items():
        tr = odd_cycle_transversal(f)
        out[name] = (f, tr, independent_set(f, tr))
    return out


@pytest.fixture(scope="session")
def k4():
    return _k4()


@pytest.fixture(scope="session")
def triangle():
    return EmbeddedGraph([(1, 2), (0, 2), (0, 1)])


@pytest.fixture(scope="session")
def octahedron():
    return from_faces(
        6,
        [
            (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1),
            (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4),
        ],
    )


@pytest.fixture(scope="session")
def icosa(fullerenes):
    return dual(fullerenes["20:1"])


@pytest.fixture(scope="session")
def gp11_dual():
    return icosahedral_dual(1)


@pytest.fixture(scope="session")
def gp22_dual():
    return icosahedral_dual(2)


@pytest.fixture(scope="session")
def gp11():
    return icosahedral_fullerene(1)


@pytest.fixture(scope="session")
def gp22():
    return icosahedral_fullerene(2)


@pytest.fixture(scope="session")
def tetrakis():
    return tetrakis_triangulation()
