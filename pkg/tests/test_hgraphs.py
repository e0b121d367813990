import pytest

from combclass.graph import closed_twin_classes, is_connected
from combclass.hgraphs import ALL_H_GRAPHS, HGraphsManager, h_graph
from combclass.patterns import PatternSpec, contains, is_free


@pytest.mark.parametrize('index, order, size', [
    (1, 5, 5), (2, 6, 7), (3, 6, 8), (4, 6, 9), (5, 7, 10), (6, 7, 11), (7, 8, 14), (8, 9, 18),
])
def test_orders_and_sizes(index, order, size):
    g = h_graph(index).graph
    assert g.n == order
    assert g.edge_count() == size

@pytest.mark.parametrize('h', ALL_H_GRAPHS, ids=lambda h: h.identifier)
def test_h_graphs_are_twin_free_and_connected(h):
    g = h.graph
    assert is_connected(g)
    assert all(len(members) == 1 for members in closed_twin_classes(g))

@pytest.mark.parametrize('h', ALL_H_GRAPHS, ids=lambda h: h.identifier)
def test_h_graphs_satisfy_the_threshold(h):
    g = h.graph
    assert is_free(g, [PatternSpec.claw(), PatternSpec.z(2)])
    assert contains(g, PatternSpec.b(1, 1))

def test_expandable_vertices():
    assert h_graph(1).expandable == ('s3', 's4', 's5')
    assert h_graph(3).expandable_vertices == (5,)
    assert h_graph(6).expandable == ()
    assert h_graph(8).vertex('z9') == 8

def test_manager():
    manager = HGraphsManager()
    assert list(manager.iter_identifiers()) == ['H%d' % i for i in range(1, 9)]
    with pytest.raises(KeyError):
        manager.get('H9')
    manager.deregister(h_graph(8))
    assert 'H8' not in list(manager.iter_identifiers())
    # the module level catalog is untouched
    assert 'H8' in list(HGraphsManager().iter_identifiers())

def test_manager_lookup_and_register():
    manager = HGraphsManager()
    assert manager.get(' h3 ') is h_graph(3)
    h1 = h_graph(1)
    manager.deregister(h1)
    manager.register(h1, pos=0)
    assert next(manager.iter_identifiers()) == 'H1'
    # duplicates are refused
    manager.register(h1)
    assert list(manager.iter_identifiers()).count('H1') == 1
