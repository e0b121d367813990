import itertools

import networkx as nx
import pytest

from combclass.exceptions import PreconditionError
from combclass.generators import random_fan_cycle_system, random_three_connected_fat, random_three_connected_h
from combclass.graph import Graph, vertex_connectivity
from combclass.halin import (
    FanCycleSystem, HalinCandidate, fan_cycle_for_H, fixed_fan_cycle_system, halin_for_fat,
    halin_from_fan_cycle, spanning_halin, verify_fan_cycle_system, verify_halin,
)
from combclass.hgraphs import h_graph
from combclass.structures import CombDescription, FatDescription, FatKind, HExpansion, build_H, build_fat

from conftest import complete_graph, cycle_graph, permuted


def wheel(k):
    """ cycle 0..k-1 plus hub k """
    return Graph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])

def planar_union(candidate, n):
    union = nx.Graph()
    union.add_nodes_from(range(n))
    union.add_edges_from(candidate.tree_edges)
    cycle = candidate.cycle
    union.add_edges_from((cycle[i - 1], cycle[i]) for i in range(len(cycle)))
    return nx.check_planarity(union)[0]


def test_wheel_is_a_fan_cycle_system():
    g = wheel(5)
    f = FanCycleSystem(range(5), 5)
    assert verify_fan_cycle_system(g, f)
    h = halin_from_fan_cycle(g, f)
    assert verify_halin(g, h)
    assert sorted(h.tree_edges) == [(i, 5) for i in range(5)]

@pytest.mark.parametrize('index', [7, 8])
def test_fixed_systems(index):
    g = h_graph(index).graph
    f = fixed_fan_cycle_system(index)
    assert verify_fan_cycle_system(g, f)
    assert verify_halin(g, halin_from_fan_cycle(g, f))

def test_fixed_systems_exist_for_h7_h8_only():
    with pytest.raises(PreconditionError):
        fixed_fan_cycle_system(6)


def test_axiom_violations():
    # uncovered vertex 4 lies outside C and is not the apex
    check = verify_fan_cycle_system(complete_graph(5), FanCycleSystem([0, 1, 2], 3))
    assert not check and check.axiom == 3
    # a single path covering all of C
    check = verify_fan_cycle_system(complete_graph(6), FanCycleSystem([0, 1, 2, 3], 4, [[0, 1, 2, 3]], [5]))
    assert not check and check.axiom == 4
    # x_1 = 7 misses vertex 1 of Q_1
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, v) for v in (2, 3, 4, 5, 7)] + [(7, 0)]
    check = verify_fan_cycle_system(Graph.from_edges(8, edges), FanCycleSystem(range(6), 6, [[0, 1]], [7]))
    assert not check and check.axiom == 6
    # a path that is not a subpath of C
    check = verify_fan_cycle_system(complete_graph(6), FanCycleSystem(range(5), 5, [[0, 2]], []))
    assert not check and check.axiom == 2

def test_halin_from_non_system_raises():
    with pytest.raises(PreconditionError):
        halin_from_fan_cycle(complete_graph(5), FanCycleSystem([0, 1, 2], 3))

def test_random_fan_cycle_systems(rng):
    for _ in range(200):
        g, f = random_fan_cycle_system(rng, max_cycle=9)
        assert verify_fan_cycle_system(g, f)
        h = halin_from_fan_cycle(g, f)
        assert verify_halin(g, h)
        if g.n <= 11:
            assert planar_union(h, g.n)


def test_verify_halin_rejects():
    g = complete_graph(6)
    # star tree, cycle through the leaves: a wheel
    assert verify_halin(g, HalinCandidate([(0, v) for v in range(1, 6)], [1, 2, 3, 4, 5]))
    # tree vertex of degree 2
    check = verify_halin(g, HalinCandidate([(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)], [3, 4, 5]))
    assert not check and 'degree 2' in check.reason
    # two internal vertices with interleaved leaves: K3,3
    tree = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
    assert verify_halin(g, HalinCandidate(tree, [2, 3, 4, 5]))
    check = verify_halin(g, HalinCandidate(tree, [2, 4, 3, 5]))
    assert not check and 'contiguous' in check.reason
    # cycle edge missing from the host
    check = verify_halin(wheel(5), HalinCandidate([(5, v) for v in range(5)], [0, 2, 1, 3, 4]))
    assert not check

def test_contiguity_agrees_with_planarity(rng):
    disagreements = 0
    for _ in range(200):
        g, f = random_fan_cycle_system(rng, max_cycle=8)
        if g.n > 11:
            continue
        h = halin_from_fan_cycle(g, f)
        leaves = list(h.cycle)
        rng.shuffle(leaves)
        scrambled = HalinCandidate(h.tree_edges, leaves)
        ok = bool(verify_halin(complete_graph(g.n), scrambled))
        if ok != planar_union(scrambled, g.n):
            disagreements += 1
    assert disagreements == 0


def test_three_connected_fat_structures(rng):
    for _ in range(200):
        d = random_three_connected_fat(rng)
        g = build_fat(d)
        h = halin_for_fat(d)
        assert verify_halin(g, h)
        if g.n <= 11:
            assert planar_union(h, g.n)

def test_complete_fat_path_gives_a_wheel():
    d = FatDescription(FatKind.PATH, [2, 3])
    h = halin_for_fat(d)
    assert verify_halin(build_fat(d), h)
    assert len(h.cycle) == 4

def test_fat_precondition():
    with pytest.raises(PreconditionError):
        halin_for_fat(FatDescription(FatKind.PATH, [1, 1, 1, 1, 1]))
    with pytest.raises(PreconditionError):
        halin_for_fat(FatDescription(FatKind.CYCLE, [1, 2, 1, 2, 2, 2]))


@pytest.mark.parametrize('index', [0, 1, 4, 7, 8])
def test_fan_cycle_constructions(rng, index):
    for _ in range(20):
        e = random_three_connected_h(rng, index)
        g = build_H(e)
        f = fan_cycle_for_H(g, e)
        assert verify_fan_cycle_system(g, f)
        h = halin_from_fan_cycle(g, f)
        assert verify_halin(g, h)
        if g.n <= 11:
            assert planar_union(h, g.n)

def test_pointed_comb_with_triple_roots():
    e = HExpansion(0, comb=CombDescription([1, 1, 1], [3, 3, 3], 9))
    g = build_H(e)
    assert verify_fan_cycle_system(g, fan_cycle_for_H(g, e))

@pytest.mark.parametrize('index', [2, 3, 5, 6])
def test_other_h_families_are_not_three_connected(index):
    h = h_graph(index)
    slots = len(h.expandable)
    checked = 0
    for sizes in itertools.product(range(1, 5), repeat=slots):
        if len(h.labels) + sum(sizes) - slots > 10:
            continue
        e = HExpansion(index, sizes) if slots else HExpansion(index)
        assert vertex_connectivity(build_H(e)) <= 2
        checked += 1
    assert checked > 0

def test_fan_cycle_preconditions():
    with pytest.raises(PreconditionError):
        fan_cycle_for_H(build_H(HExpansion(2)), HExpansion(2))
    with pytest.raises(PreconditionError):
        fan_cycle_for_H(build_H(HExpansion(1)), HExpansion(1))


def test_spanning_halin_on_relabelled_hosts(rng):
    descriptions = [HExpansion(1, [3, 4, 1]), HExpansion(7), HExpansion(4, [2, 2, 1])]
    fats = [FatDescription(FatKind.CYCLE, [2, 3, 1, 1, 2, 2]), FatDescription(FatKind.PATH, [1, 3, 3, 3, 1])]
    for g in [build_H(e) for e in descriptions] + [build_fat(d) for d in fats]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        host = permuted(g, perm)
        assert verify_halin(host, spanning_halin(host))

def test_spanning_halin_preconditions():
    with pytest.raises(PreconditionError):
        spanning_halin(cycle_graph(6))
    with pytest.raises(PreconditionError):
        spanning_halin(Graph.from_networkx(nx.complete_bipartite_graph(3, 3)))

def test_candidate_json():
    h = HalinCandidate([(5, 0), (1, 5), (2, 5)], [0, 1, 2])
    assert h.tree_edges == ((0, 5), (1, 5), (2, 5))
    assert HalinCandidate.from_json(h.to_json()) == h

@pytest.mark.parametrize('data', [
    {'tree_edges': [[0, 1, 2]], 'cycle': [0, 1, 2]},
    {'tree_edges': [[0, True]], 'cycle': [0, 1, 2]},
    {'tree_edges': [[0, 1]], 'cycle': '012'},
])
def test_candidate_json_rejects_malformed_input(data):
    with pytest.raises(ValueError):
        HalinCandidate.from_json(data)
