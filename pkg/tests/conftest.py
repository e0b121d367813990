import functools
import random

import pytest

from combclass.enumeration import enumerate_connected
from combclass.graph import Graph
from combclass.patterns import PatternSpec, make_pattern


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

def complete_graph(n):
    return make_pattern(PatternSpec.complete(n))

def path_graph(n):
    return make_pattern(PatternSpec.path(n))

def permuted(g, perm):
    """ g with vertex v renamed to perm[v] """
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])

@functools.lru_cache(maxsize=None)
def connected_graphs(n):
    return tuple(enumerate_connected(n))

def connected_graphs_up_to(n):
    for k in range(1, n + 1):
        for g in connected_graphs(k):
            yield g


@pytest.fixture
def rng():
    return random.Random(20240917)

@pytest.fixture
def named():
    """ small graphs used across the suite """
    return {
        'K3': complete_graph(3),
        'K4': complete_graph(4),
        'P4': path_graph(4),
        'P5': path_graph(5),
        'C5': cycle_graph(5),
        'C6': cycle_graph(6),
        'claw': make_pattern(PatternSpec.claw()),
        'bull': make_pattern(PatternSpec.b(1, 1)),
        'net': make_pattern(PatternSpec.net()),
        'paw': make_pattern(PatternSpec.z(1)),
        'K2,2': Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        'K1,1,2': Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    }
