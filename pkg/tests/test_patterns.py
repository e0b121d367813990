import itertools

import networkx as nx
import pytest

from combclass.exceptions import DescriptionError
from combclass.graph import induced
from combclass.hgraphs import h_graph
from combclass.patterns import (
    PatternSpec, contains, family_leq, find_induced, is_free, is_isomorphic,
    iter_induced, make_pattern, parse_family, parse_pattern,
)

from conftest import complete_graph, connected_graphs, connected_graphs_up_to, path_graph, permuted


def test_pattern_constructions():
    assert make_pattern(PatternSpec.z(0)) == complete_graph(3)
    net = make_pattern(PatternSpec.net())
    assert net.n == 6 and net.edge_count() == 6
    assert sorted(net.degrees()) == [1, 1, 1, 3, 3, 3]
    claw = make_pattern(PatternSpec.claw())
    assert claw.n == 4 and sorted(claw.degrees()) == [1, 1, 1, 3]

@pytest.mark.parametrize('k, l, m', list(itertools.product(range(5), repeat=3)))
def test_nklm_order(k, l, m):
    spec = PatternSpec.nklm(k, l, m)
    assert make_pattern(spec).n == k + l + m + 3 == spec.order

def test_bull_is_h1():
    assert is_isomorphic(make_pattern(PatternSpec.b(1, 1)), h_graph(1).graph)

def test_invalid_specs():
    with pytest.raises(DescriptionError):
        PatternSpec.path(0)
    with pytest.raises(DescriptionError):
        PatternSpec.nklm(1, -1, 0)


def test_find_induced(named):
    p5 = make_pattern(PatternSpec.path(5))
    embedding = find_induced(named['C6'], p5)
    assert embedding is not None and embedding.is_valid(named['C6'], p5)
    assert find_induced(named['bull'], make_pattern(PatternSpec.claw())) is None
    assert find_induced(named['C6'], make_pattern(PatternSpec.claw())) is None

def test_every_embedding_is_induced(named):
    p3 = path_graph(3)
    embeddings = list(iter_induced(named['C6'], p3))
    # 6 centers, 2 orientations each
    assert len(embeddings) == 12
    assert all(e.is_valid(named['C6'], p3) for e in embeddings)
    assert list(iter_induced(complete_graph(4), p3)) == []

def test_is_free(named):
    assert is_free(complete_graph(5), [PatternSpec.claw(), PatternSpec.z(2)])
    result = is_free(named['P5'], [PatternSpec.path(5)])
    assert not result
    assert result.pattern == PatternSpec.path(5)
    assert result.embedding.mapping == (0, 1, 2, 3, 4)

def test_containment_is_monotone():
    p4 = make_pattern(PatternSpec.path(4))
    for g in connected_graphs(6):
        for v in range(g.n):
            sub = induced(g, [u for u in range(g.n) if u != v])
            if find_induced(sub, p4) is not None:
                assert contains(g, PatternSpec.path(4))


def test_parse_family():
    assert parse_family('K1,3,Z2') == [PatternSpec.claw(), PatternSpec.z(2)]
    assert parse_family('K1,3,B1,2') == [PatternSpec.claw(), PatternSpec.b(1, 2)]
    assert parse_family('N, N(2,1,1), K4, P6') == [
        PatternSpec.net(), PatternSpec.nklm(2, 1, 1), PatternSpec.complete(4), PatternSpec.path(6)]
    assert parse_pattern('B1,1') == PatternSpec.b(1, 1)

@pytest.mark.parametrize('name', ['K1,3', 'K4', 'P6', 'Z2', 'B1,2', 'N', 'N(2,1,1)'])
def test_pattern_names(name):
    assert parse_pattern(name).name == name

@pytest.mark.parametrize('text', ['K1,3,,Z2', 'Q5', 'P5 Z2', ''])
def test_parse_family_errors(text):
    with pytest.raises(DescriptionError):
        parse_family(text)

def test_parse_pattern_wants_one():
    with pytest.raises(DescriptionError):
        parse_pattern('K1,3,Z2')


def test_family_order():
    claw = PatternSpec.claw()
    family = [claw, PatternSpec.z(2)]
    assert family_leq(family, family)
    assert family_leq([claw, PatternSpec.z(2)], [claw, PatternSpec.b(1, 2)])
    assert family_leq([claw, PatternSpec.path(5)], [claw, PatternSpec.path(6)])
    assert not family_leq([claw, PatternSpec.path(6)], [claw, PatternSpec.path(5)])

def test_family_order_transfers_freeness():
    f1 = [PatternSpec.claw(), PatternSpec.z(2)]
    f2 = [PatternSpec.claw(), PatternSpec.b(1, 2)]
    assert family_leq(f1, f2)
    for g in connected_graphs_up_to(6):
        if is_free(g, f1):
            assert is_free(g, f2)


def test_isomorphism_matches_networkx(rng):
    graphs = list(connected_graphs(5))
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert is_isomorphic(g, permuted(g, perm))
    for g, h in itertools.combinations(graphs, 2):
        assert not is_isomorphic(g, h)
        assert not nx.is_isomorphic(g.to_networkx(), h.to_networkx())
