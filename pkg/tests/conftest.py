import random
from itertools import combinations

import pytest

from pathcover import FamilySpec, build_graph, generate, is_connected


def family(name, *params):
    return generate(FamilySpec(name, tuple(params)))


def random_connected_graph(rng, max_n=8, edge_prob=0.4):
    """Random connected simple graph with 2 <= n <= max_n."""
    while True:
        n = rng.randint(2, max_n)
        edges = [e for e in combinations(range(n), 2)
                 if rng.random() < edge_prob]
        G = build_graph(n, edges)
        if is_connected(G):
            return G


@pytest.fixture
def rng():
    return random.Random(0x5eed)
