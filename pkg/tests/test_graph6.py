import io

import networkx as nx
import pytest

from combclass.exceptions import Graph6Error
from combclass.graph import Graph
from combclass.graph6 import iter_graph6, parse_graph6, write_graph6

from conftest import complete_graph, connected_graphs_up_to, path_graph


def test_parse_examples():
    assert parse_graph6('A_') == Graph.from_edges(2, [(0, 1)])
    assert parse_graph6('A?') == Graph.empty(2)
    assert parse_graph6('Bw') == complete_graph(3)
    assert parse_graph6(b'Bw\n') == complete_graph(3)
    assert parse_graph6('>>graph6<<Bw') == complete_graph(3)

def test_write_examples():
    assert write_graph6(complete_graph(3)) == 'Bw'
    assert write_graph6(Graph.empty(1)) == '@'
    assert write_graph6(complete_graph(3), header=True) == '>>graph6<<Bw'

def test_matches_networkx_encoding():
    for g in connected_graphs_up_to(6):
        expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()
        assert write_graph6(g) == expected
        assert parse_graph6(expected) == g

@pytest.mark.slow
def test_matches_networkx_encoding_up_to_eight():
    for g in connected_graphs_up_to(8):
        text = nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()
        assert write_graph6(g) == text
        assert parse_graph6(text) == g

def test_medium_order_uses_long_header():
    g = path_graph(70)
    text = write_graph6(g)
    assert text[0] == '~'
    assert text == nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()
    assert parse_graph6(text) == g


@pytest.mark.parametrize('text, offset', [
    ('A', 1),            # edge byte missing
    ('Bw?', 2),          # one byte too many
    ('B ', 1),           # below the graph6 range
    ('A`', 1),           # padding bit set
    ('>>graph6<<A`', 11),
])
def test_parse_errors_name_the_offset(text, offset):
    with pytest.raises(Graph6Error) as excinfo:
        parse_graph6(text)
    assert excinfo.value.offset == offset
    assert 'byte %d' % offset in str(excinfo.value)

def test_stream_reports_line_numbers():
    stream = io.StringIO('Bw\n\nA_\nA`\nBw\n')
    graphs = iter_graph6(stream)
    assert next(graphs) == complete_graph(3)
    assert next(graphs).edge_count() == 1
    with pytest.raises(Graph6Error) as excinfo:
        next(graphs)
    assert excinfo.value.line == 4
    assert 'line 4' in str(excinfo.value)
