"""
Canonical labeling and enumeration of connected graphs.

The labeling refines an ordered partition of the vertices to an equitable
one, individualizes vertices of the first non-singleton cell and keeps the
leaf whose relabeled adjacency is largest. Enumeration is by canonical
augmentation: a connected graph on n vertices is produced from the
representative of its canonical deletion only.
"""

import functools
import logging
from typing import Iterator, List

from attr import attrs, attrib

from .exceptions import GraphArgumentError
from .graph import Graph, cut_vertices, induced, iter_bits, mask_of, popcount
from .graph6 import parse_graph6, write_graph6
from .pool import map_tasks

logger = logging.getLogger(__name__)

MAX_ORDER = 9
SPLIT_DEPTH = 5


def _refine(g, cells):
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(popcount(g.adj[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined

def _twins(g, u, v):
    others = ~(1 << u | 1 << v)
    return g.adj[u] & others == g.adj[v] & others

def _relabeled(g, order):
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return tuple(mask_of(position[u] for u in iter_bits(g.adj[v])) for v in order)

def canonical_labeling(g):
    # type: (Graph) -> List[int]
    """
    The canonical vertex order of g: order[i] is the vertex placed at
    position i. Isomorphic graphs relabeled by their canonical orders are
    identical.
    """
    best = [None, None]

    def search(cells):
        cells = _refine(g, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            key = _relabeled(g, order)
            if best[0] is None or key > best[0]:
                best[0], best[1] = key, order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            # swapping twins is an automorphism fixing the partition
            if any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if g.n == 0:
        return []
    search([list(range(g.n))])
    return best[1]

def canonical_graph(g):
    return Graph(g.n, _relabeled(g, canonical_labeling(g)))

def canonical_form(g):
    """ graph6 string of the canonically relabeled graph """
    return write_graph6(canonical_graph(g))


@attrs(frozen=True)
class EnumConfig(object):
    #: Number of vertices.
    n = attrib(type=int)
    connected_only = attrib(type=bool, default=True)
    #: Worker processes, 1 generates in-process.
    jobs = attrib(type=int, default=1)
    #: Emit subtrees in their canonical order instead of as they finish.
    deterministic = attrib(type=bool, default=True)

    def __attrs_post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphArgumentError('In-process enumeration supports 1 <= n <= %d, got %d' % (MAX_ORDER, self.n))
        if not self.connected_only:
            raise GraphArgumentError('Only connected graphs are enumerated')


def _invariant(g, v):
    return g.degree(v), sorted(g.degree(u) for u in iter_bits(g.adj[v]))

def _children(parent, parent_form):
    """ canonical representatives of the children of one parent, in subset order """
    k = parent.n
    seen = set()
    for subset in range(1, 1 << k):
        adj = [nbrs | (1 << k if subset >> v & 1 else 0) for v, nbrs in enumerate(parent.adj)]
        child = Graph(k + 1, adj + [subset])
        cuts = set(cut_vertices(child))
        candidates = [v for v in range(child.n) if v not in cuts]
        invariants = {v: _invariant(child, v) for v in candidates}
        top = max(invariants.values())
        if invariants[k] != top:
            continue
        order = canonical_labeling(child)
        position = {v: i for i, v in enumerate(order)}
        deletion = max((v for v in candidates if invariants[v] == top), key=position.get)
        if deletion != k:
            rest = [v for v in range(child.n) if v != deletion]
            if canonical_form(induced(child, rest)) != parent_form:
                continue
        canonical = Graph(child.n, _relabeled(child, order))
        form = write_graph6(canonical)
        if form in seen:
            continue
        seen.add(form)
        yield canonical, form

def _descend(graph, form, n):
    if graph.n == n:
        yield graph
        return
    for child, child_form in _children(graph, form):
        yield from _descend(child, child_form, n)

def _subtree(n, form):
    """ worker: graph6 strings of all descendants of one shallow graph """
    graph = parse_graph6(form)
    return [write_graph6(g) for g in _descend(graph, form, n)]

def enumerate_connected(n, jobs=1, deterministic=True):
    # type: (int, int, bool) -> Iterator[Graph]
    """
    One representative per isomorphism class of connected graphs on n
    vertices, each in canonical labeling.

    With jobs > 1 the search tree is cut at a shallow depth and the
    subtrees are generated in a worker pool; `deterministic` keeps the
    single-process output order.
    """
    return _generate(EnumConfig(n, jobs=jobs, deterministic=deterministic))

def _generate(config):
    n = config.n
    root = Graph.empty(1)
    root_form = write_graph6(root)
    depth = min(SPLIT_DEPTH, n)
    if config.jobs <= 1 or depth == n:
        yield from _descend(root, root_form, n)
        return
    shallow = [write_graph6(g) for g in _descend(root, root_form, depth)]
    logger.info('Enumerating n=%d from %d subtrees at depth %d on %d workers', n, len(shallow), depth, config.jobs)
    worker = functools.partial(_subtree, n)
    for forms in map_tasks(worker, shallow, config.jobs, config.deterministic, chunksize=1):
        for form in forms:
            yield parse_graph6(form)
