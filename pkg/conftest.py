import random

import pytest

from src.config import settings
from src.hypergraph.hypergraph import Hypergraph


@pytest.fixture(autouse=True, scope="session")
def verify_decompositions():
    """Re-validate every decomposition compute_db returns during the test run."""
    previous = settings.VERIFY_DECOMPOSITIONS
    settings.VERIFY_DECOMPOSITIONS = True
    yield
    settings.VERIFY_DECOMPOSITIONS = previous


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def chain():
    """{a,b}, {b,c}, {c,d}: edges 0, 1, 2 and vertices a=0 .. d=3."""
    return Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["c", "d"]])


@pytest.fixture
def triangle():
    return Hypergraph.from_edge_sets([["a", "b"], ["b", "c"], ["a", "c"]])


@pytest.fixture
def covered_triangle():
    """{a,b,c} together with its three pairs: alpha- but not beta-acyclic."""
    return Hypergraph.from_edge_sets([["a", "b", "c"], ["a", "b"], ["b", "c"], ["a", "c"]])
