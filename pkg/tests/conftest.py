import random

import pytest

from kappatools.corpus import (
    connected_simple_graphs,
    random_connected_graph,
    random_forest,
)
from kappatools.orientations import kappa_partition_bruteforce

RANDOM_CORPUS_SEED = 20240
FOREST_SEED = 4711


@pytest.fixture(scope="session")
def small_corpus():
    """Every labeled connected simple graph on up to 5 vertices."""
    graphs = connected_simple_graphs(5)
    assert len(graphs) == 772
    return graphs


@pytest.fixture(scope="session")
def random_corpus():
    """100 seeded random connected simple graphs with at most 12 edges."""
    rng = random.Random(RANDOM_CORPUS_SEED)
    return [random_connected_graph(rng, max_edges=12) for _ in range(100)]


@pytest.fixture(scope="session")
def forest_corpus():
    rng = random.Random(FOREST_SEED)
    return [random_forest(rng, max_vertices=12) for _ in range(100)]


@pytest.fixture(scope="session")
def small_partitions(small_corpus):
    return {g: kappa_partition_bruteforce(g) for g in small_corpus}


@pytest.fixture(scope="session")
def random_partitions(random_corpus):
    return {g: kappa_partition_bruteforce(g) for g in random_corpus}
