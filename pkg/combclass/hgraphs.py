"""
The fixed pattern graphs H1 to H8.

Each graph keeps the vertex labels of its drawing (s1..s5, t1..t6, u1..u6,
v1..v6, w1..w7, x1..x7, y1..y8, z1..z9); vertex i of :py:attr:`HGraph.graph`
is ``labels[i]``. The expandable vertices are the ones that may be blown up
into cliques by :py:func:`combclass.structures.build_H`.
"""

from typing import Tuple

from attr import attrs, attrib

from .graph import Graph
from .helpers import ElementsManager


def _pairs(edges):
    if isinstance(edges, str):
        edges = [edge.split('-') for edge in edges.split()]
    return tuple(tuple(edge) for edge in edges)

@attrs(frozen=True)
class HGraph(object):
    """
    One of the pattern graphs H1..H8.
    """
    #: A string identifier, 'H1' .. 'H8'.
    identifier = attrib(type=str)
    #: Vertex labels in index order.
    labels = attrib(type=Tuple[str, ...], converter=tuple)
    #: Edges as pairs of labels.
    edges = attrib(type=Tuple[Tuple[str, str], ...], converter=_pairs)
    #: Labels of the vertices that may be expanded to cliques.
    expandable = attrib(type=Tuple[str, ...], converter=tuple, default=())

    @property
    def index(self):
        return int(self.identifier[1:])

    @property
    def name(self):
        return self.identifier

    def vertex(self, label):
        return self.labels.index(label)

    @property
    def expandable_vertices(self):
        return tuple(self.vertex(label) for label in self.expandable)

    @property
    def graph(self):
        return Graph.from_edges(len(self.labels), [(self.vertex(a), self.vertex(b)) for a, b in self.edges])


def _labels(prefix, count):
    return ['%s%d' % (prefix, i) for i in range(1, count + 1)]

_H7_EDGES = 'y1-y2 y1-y3 y1-y5 y2-y4 y2-y6 y3-y4 y3-y5 y3-y7 y4-y6 y4-y7 y5-y6 y5-y8 y6-y8 y7-y8'

ALL_H_GRAPHS = (
  HGraph('H1', _labels('s', 5), 's1-s3 s2-s4 s3-s4 s3-s5 s4-s5', ('s3', 's4', 's5')),
  HGraph('H2', _labels('t', 6), 't1-t2 t2-t3 t2-t4 t3-t4 t3-t5 t4-t6 t5-t6', ('t3', 't4')),
  HGraph('H3', _labels('u', 6), 'u1-u2 u1-u3 u2-u4 u2-u6 u3-u5 u3-u6 u4-u6 u5-u6', ('u6',)),
  HGraph('H4', _labels('v', 6), 'v4-v5 v4-v6 v5-v6 v1-v4 v1-v6 v2-v4 v2-v5 v3-v5 v3-v6', ('v4', 'v5', 'v6')),
  HGraph('H5', _labels('w', 7), 'w1-w3 w1-w5 w2-w4 w2-w6 w3-w4 w5-w6 w7-w3 w7-w4 w7-w5 w7-w6', ('w7',)),
  HGraph('H6', _labels('x', 7), 'x1-x2 x1-x3 x1-x5 x2-x4 x2-x6 x3-x4 x3-x5 x4-x6 x5-x6 x5-x7 x6-x7'),
  HGraph('H7', _labels('y', 8), _H7_EDGES),
  HGraph('H8', _labels('z', 9), _H7_EDGES.replace('y', 'z') + ' z9-z1 z9-z2 z9-z7 z9-z8'),
)

class HGraphsManager(ElementsManager):
    DEFAULT_ELEMENTS = ALL_H_GRAPHS
    ELEMENT_NAME = 'H graph'

    @classmethod
    def normalize(cls, identifier):
        return identifier.strip().upper()

def h_graph(index):
    return HGraphsManager().get('H%d' % index)
