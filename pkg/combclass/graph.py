"""
Simple undirected graphs on the vertices 0..n-1.

The central piece of this module is the immutable class :py:class:`Graph`
which stores one adjacency bitset per vertex. All other functions here are
pure helpers working on it: induced subgraphs, connectivity, twin classes
and the small exhaustive searches the recognizers rely on.
"""

import logging
from typing import FrozenSet, Iterable, List, Optional, Tuple

from attr import attrs, attrib
import networkx as nx

from .exceptions import GraphArgumentError

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]


def iter_bits(mask):
    """ yield the indices of the set bits of `mask` in increasing order """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def popcount(mask):
    return bin(mask).count('1')

def mask_of(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@attrs(frozen=True, repr=False)
class Graph(object):
    """
    A simple undirected graph with vertices 0..n-1.

    Instances are immutable and hashable; two graphs compare equal iff they
    have the same order and the same labelled edge set.
    """
    #: Number of vertices.
    n = attrib(type=int)
    #: Adjacency bitsets: bit u of adj[v] is set iff u and v are adjacent.
    adj = attrib(type=Tuple[int, ...], converter=tuple)

    def __attrs_post_init__(self):
        if self.n < 0:
            raise GraphArgumentError('Negative vertex count: %d' % self.n)
        if len(self.adj) != self.n:
            raise GraphArgumentError('Expected %d adjacency sets, got %d' % (self.n, len(self.adj)))
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise GraphArgumentError('Vertex %d has a neighbor outside 0..%d' % (v, self.n - 1))
            if nbrs >> v & 1:
                raise GraphArgumentError('Loop at vertex %d' % v)
            for u in iter_bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise GraphArgumentError('Asymmetric adjacency between %d and %d' % (v, u))

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError('Edge (%d, %d) outside 0..%d' % (u, v, n - 1))
            if u == v:
                raise GraphArgumentError('Loop at vertex %d' % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n):
        return cls(n, [0] * n)

    @classmethod
    def from_networkx(cls, nx_graph):
        """ Vertices are relabelled 0..n-1 following the sorted node order. """
        index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
        return cls.from_edges(len(index), [(index[u], index[v]) for u, v in nx_graph.edges()])

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertex_mask(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return list(iter_bits(self.adj[v]))

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(nbrs) for nbrs in self.adj]

    def edges(self):
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def complement(self):
        full = self.vertex_mask
        return Graph(self.n, [full & ~nbrs & ~(1 << v) for v, nbrs in enumerate(self.adj)])

    def is_complete(self):
        return self.edge_count() == self.n * (self.n - 1) // 2

    def is_clique(self, mask):
        return all(not mask & ~(self.adj[v] | 1 << v) for v in iter_bits(mask))

    def is_independent(self, mask):
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def __repr__(self):
        return 'Graph(n=%d, edges=%r)' % (self.n, self.edges())


def _check_vertices(g, vertices):
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphArgumentError('Vertex %r outside 0..%d' % (v, g.n - 1))

def induced(g, s):
    # type: (Graph, Iterable[int]) -> Graph
    """
    The subgraph induced by the vertex set `s`, relabelled 0..|s|-1 in
    increasing order of the original indices.
    """
    members = sorted(set(s))
    _check_vertices(g, members)
    position = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        adj.append(mask_of(position[u] for u in iter_bits(g.adj[v]) if u in position))
    return Graph(len(members), adj)

def reachable(g, start, allowed=None):
    """ bitset of vertices reachable from `start` inside the vertex bitset `allowed` """
    if allowed is None:
        allowed = g.vertex_mask
    seen = 1 << start
    frontier = seen
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= g.adj[v]
        frontier = step & allowed & ~seen
        seen |= frontier
    return seen

def _connected_within(g, allowed):
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reachable(g, start, allowed) == allowed

def is_connected(g):
    if g.n == 0:
        raise GraphArgumentError('Connectivity is undefined for the graph with no vertices')
    return _connected_within(g, g.vertex_mask)

def vertex_connectivity(g):
    """
    The minimum number of vertices whose deletion disconnects `g`,
    n-1 for complete graphs and 0 for the single vertex.
    """
    if g.n == 0:
        raise GraphArgumentError('Connectivity is undefined for the graph with no vertices')
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    # flow based: unit vertex capacities on the split auxiliary digraph
    return nx.node_connectivity(g.to_networkx())

def cut_vertices(g):
    full = g.vertex_mask
    return [v for v in range(g.n) if g.n > 1 and not _connected_within(g, full & ~(1 << v))]

def closed_twin_classes(g):
    # type: (Graph) -> List[Tuple[int, ...]]
    """
    Partition of the vertices into classes of equal closed neighborhoods,
    ordered by smallest member.
    """
    classes = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v] | 1 << v, []).append(v)
    return sorted(tuple(members) for members in classes.values())

def is_complete_multipartite(g):
    # type: (Graph) -> Optional[List[Tuple[int, ...]]]
    """
    The partite sets of `g` if its complement is a disjoint union of
    cliques, else None. The number of parts is the length of the result.
    """
    if g.n == 0:
        return None
    parts = {}
    for v in range(g.n):
        parts.setdefault(g.adj[v], []).append(v)
    full = g.vertex_mask
    for nbrs, members in parts.items():
        if nbrs != full & ~mask_of(members):
            return None
    return sorted(tuple(members) for members in parts.values())

def is_hamiltonian_cycle(g, cycle):
    if g.n < 3 or len(cycle) != g.n or sorted(cycle) != list(range(g.n)):
        return False
    return all(g.has_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))

def find_hamiltonian_cycle(g):
    """
    Exhaustive search for a Hamiltonian cycle; returns the vertex sequence
    starting at 0 or None. Meant for small graphs.
    """
    n = g.n
    if n < 3 or not is_connected(g):
        return None
    full = g.vertex_mask
    path = [0]

    def extend(v, visited):
        if visited == full:
            return bool(g.adj[v] & 1)
        remaining = full & ~visited
        # every unvisited vertex needs an unvisited or endpoint neighbour pair
        for u in iter_bits(remaining):
            if popcount(g.adj[u] & (remaining | 1 | 1 << v)) < 2:
                return False
        for u in iter_bits(g.adj[v] & remaining):
            path.append(u)
            if extend(u, visited | 1 << u):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return list(path)
    return None

def twin_quotient(g):
    # type: (Graph) -> Tuple[List[Tuple[int, ...]], Graph]
    """
    The closed-twin classes of `g` together with the quotient graph on them:
    class i and class j are adjacent iff some (hence every) pair of their
    members is.
    """
    classes = closed_twin_classes(g)
    index = [0] * g.n
    for i, members in enumerate(classes):
        for v in members:
            index[v] = i
    edges = set()
    for u, v in g.edges():
        if index[u] != index[v]:
            edges.add((min(index[u], index[v]), max(index[u], index[v])))
    return classes, Graph.from_edges(len(classes), sorted(edges))
