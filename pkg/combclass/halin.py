"""
Spanning Halin subgraphs.

A Halin graph is a tree T without vertices of degree 2 together with a
cycle C through exactly the leaves of T, drawn in the plane. This module
provides

* fan-cycle systems (:py:class:`FanCycleSystem`), their verification and
  the constructions for 3-connected members of H_0, H_1, H_4, H_7 and H_8,
* the construction of a Halin subgraph from a fan-cycle system,
* the direct construction for 3-connected fat paths and fat cycles,
* :py:func:`verify_halin`, the checker every construction is run through.

Planarity of T + C is tested by leaf contiguity: for every tree edge, the
leaves on either side must form an arc of C.
"""

import logging
from typing import Tuple

from attr import attrs, attrib

from .exceptions import PreconditionError, TheoremViolation
from .graph import Graph, vertex_connectivity
from .hgraphs import h_graph
from .structures import FatKind, build_fat, format_description, host_map, recognize_H_union, recognize_fat

logger = logging.getLogger(__name__)

FAN_CYCLE_INDICES = (0, 1, 4, 7, 8)


def _tuples(paths):
    return tuple(tuple(path) for path in paths)

@attrs(frozen=True)
class FanCycleSystem(object):
    """
    A fan-cycle system (C; v; Q_1, .., Q_m; x_1, .., x_m) of a graph.
    """
    #: The cycle C as a vertex sequence.
    cycle = attrib(type=Tuple[int, ...], converter=tuple)
    #: The apex v.
    apex = attrib(type=int)
    #: The subpaths Q_1 .. Q_m of C.
    paths = attrib(type=Tuple[Tuple[int, ...], ...], converter=_tuples, default=())
    #: The attachment vertices x_1 .. x_m, x_i joined to all of Q_i.
    attach = attrib(type=Tuple[int, ...], converter=tuple, default=())

    @property
    def uncovered(self):
        """ vertices of C on none of the paths, in cycle order """
        covered = set(v for path in self.paths for v in path)
        return [v for v in self.cycle if v not in covered]

    def relabel(self, mapping):
        return FanCycleSystem([mapping[v] for v in self.cycle], mapping[self.apex],
                              [[mapping[v] for v in path] for path in self.paths],
                              [mapping[v] for v in self.attach])

    def to_json(self):
        return {'cycle': list(self.cycle), 'apex': self.apex,
                'paths': [list(path) for path in self.paths], 'attach': list(self.attach)}

    @classmethod
    def from_json(cls, data):
        return cls(data['cycle'], data['apex'], data.get('paths', []), data.get('attach', []))


@attrs(frozen=True)
class HalinCandidate(object):
    #: Edges of the tree T as sorted pairs.
    tree_edges = attrib(type=Tuple[Tuple[int, int], ...], converter=lambda edges: tuple(sorted(tuple(sorted(e)) for e in edges)))
    #: The cycle C through the leaves of T.
    cycle = attrib(type=Tuple[int, ...], converter=tuple)

    def relabel(self, mapping):
        return HalinCandidate([(mapping[u], mapping[v]) for u, v in self.tree_edges], [mapping[v] for v in self.cycle])

    def to_json(self):
        return {'tree_edges': [list(edge) for edge in self.tree_edges], 'cycle': list(self.cycle)}

    @classmethod
    def from_json(cls, data):
        """
        :raises ValueError: if an edge is not a pair of vertices or the cycle
            holds anything but vertices
        """
        edges, cycle = data['tree_edges'], data['cycle']
        is_vertex = lambda v: isinstance(v, int) and not isinstance(v, bool)
        if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 and all(map(is_vertex, e)) for e in edges):
            raise ValueError('tree_edges must be a list of vertex pairs, got %r' % (edges,))
        if not isinstance(cycle, list) or not all(map(is_vertex, cycle)):
            raise ValueError('cycle must be a list of vertices, got %r' % (cycle,))
        return cls(edges, cycle)


@attrs(frozen=True)
class CheckResult(object):
    """ Outcome of a verifier; truthy iff everything holds. """
    ok = attrib(type=bool)
    #: Number of the first violated axiom of a fan-cycle system.
    axiom = attrib(default=None)
    reason = attrib(type=str, default='')

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {'ok': self.ok, 'axiom': self.axiom, 'reason': self.reason}

def _fail(axiom, reason, *args):
    return CheckResult(False, axiom, reason % args)

def _cycle_problem(g, cycle):
    if len(cycle) < 3:
        return 'cycle has only %d vertices' % len(cycle)
    if len(set(cycle)) != len(cycle):
        return 'cycle repeats a vertex'
    for v in cycle:
        if not 0 <= v < g.n:
            return 'vertex %r outside the graph' % (v,)
    for i in range(len(cycle)):
        if not g.has_edge(cycle[i - 1], cycle[i]):
            return 'missing cycle edge %d-%d' % (cycle[i - 1], cycle[i])
    return None

def _is_subpath(cycle, path):
    position = {v: i for i, v in enumerate(cycle)}
    if any(v not in position for v in path):
        return False
    k = len(cycle)
    steps = set((position[b] - position[a]) % k for a, b in zip(path, path[1:]))
    return steps in ({1}, {k - 1})

def verify_fan_cycle_system(g, f):
    # type: (Graph, FanCycleSystem) -> CheckResult
    """
    Check the six axioms of a fan-cycle system:

    1. C is a cycle of g,
    2. the Q_i are pairwise disjoint subpaths of C of order at least 2,
    3. the apex and the x_i are distinct and are exactly the vertices off C,
    4. |V(C) - V(Q_1..Q_m)| + m >= 3,
    5. the apex is adjacent to the uncovered cycle vertices and to every x_i,
    6. every x_i is adjacent to all vertices of Q_i.
    """
    problem = _cycle_problem(g, f.cycle)
    if problem:
        return _fail(1, problem)
    seen = set()
    for i, path in enumerate(f.paths):
        if len(path) < 2:
            return _fail(2, 'Q_%d has order %d', i + 1, len(path))
        if not _is_subpath(f.cycle, path):
            return _fail(2, 'Q_%d is not a subpath of C', i + 1)
        if seen & set(path):
            return _fail(2, 'Q_%d meets an earlier path', i + 1)
        seen.update(path)
    if len(f.attach) != len(f.paths):
        return _fail(3, '%d attachments for %d paths', len(f.attach), len(f.paths))
    outside = [f.apex] + list(f.attach)
    if len(set(outside)) != len(outside):
        return _fail(3, 'apex and attachments are not distinct')
    if set(outside) & set(f.cycle):
        return _fail(3, 'apex or attachment lies on C')
    if set(outside) | set(f.cycle) != set(range(g.n)):
        return _fail(3, 'C, apex and attachments do not cover all %d vertices', g.n)
    uncovered = f.uncovered
    if len(uncovered) + len(f.paths) < 3:
        return _fail(4, '|V(C) - V(Q)| + m = %d', len(uncovered) + len(f.paths))
    for w in uncovered + list(f.attach):
        if not g.has_edge(f.apex, w):
            return _fail(5, 'apex %d not adjacent to %d', f.apex, w)
    for i, (x, path) in enumerate(zip(f.attach, f.paths)):
        for u in path:
            if not g.has_edge(x, u):
                return _fail(6, 'x_%d = %d not adjacent to %d', i + 1, x, u)
    return CheckResult(True)

def verify_halin(g, h):
    # type: (Graph, HalinCandidate) -> CheckResult
    """
    Check that (T, C) is a spanning Halin subgraph of g: T is a spanning
    tree of g without degree-2 vertices and with an internal vertex, C is
    a cycle of g through exactly the leaves of T, and for every tree edge
    the leaves on each side occupy a contiguous arc of C.
    """
    n = g.n
    edges = list(h.tree_edges)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or not g.has_edge(u, v):
            return _fail(None, 'tree edge %d-%d not in the graph', u, v)
    if len(set(edges)) != n - 1:
        return _fail(None, 'a spanning tree on %d vertices needs %d edges, got %d', n, n - 1, len(set(edges)))
    tree = Graph.from_edges(n, edges)
    if n == 0 or len(_component(tree, 0, None)) != n:
        return _fail(None, 'tree edges do not connect all vertices')
    degrees = tree.degrees()
    if 2 in degrees:
        return _fail(None, 'tree vertex %d has degree 2', degrees.index(2))
    if not any(d >= 3 for d in degrees):
        return _fail(None, 'tree has no internal vertex')
    leaves = set(v for v in range(n) if degrees[v] == 1)
    problem = _cycle_problem(g, h.cycle)
    if problem:
        return _fail(None, problem)
    if set(h.cycle) != leaves:
        return _fail(None, 'cycle does not run exactly through the leaves of T')
    for u, v in edges:
        side = _component(tree, u, v)
        changes = sum(1 for i in range(len(h.cycle)) if (h.cycle[i] in side) != (h.cycle[i - 1] in side))
        if changes > 2:
            return _fail(None, 'leaves beyond tree edge %d-%d are not contiguous on C', u, v)
    return CheckResult(True)

def _component(tree, start, blocked):
    """ vertices reachable from start in the tree without entering `blocked` """
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in tree.neighbors(v):
            if u != blocked and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def halin_from_fan_cycle(g, f):
    # type: (Graph, FanCycleSystem) -> HalinCandidate
    """
    T joins the apex to the uncovered cycle vertices and to every x_i, and
    each x_i to the vertices of Q_i; C is the cycle of the system.

    :raises PreconditionError: if f is not a fan-cycle system of g
    """
    check = verify_fan_cycle_system(g, f)
    if not check:
        raise PreconditionError('Not a fan-cycle system (axiom %s): %s' % (check.axiom, check.reason))
    tree = [(f.apex, w) for w in f.uncovered + list(f.attach)]
    for x, path in zip(f.attach, f.paths):
        tree.extend((x, u) for u in path)
    return _verified(g, HalinCandidate(tree, f.cycle), 'fan-cycle system')

def _verified(g, candidate, what):
    check = verify_halin(g, candidate)
    if not check:
        raise TheoremViolation('Halin construction from %s failed: %s' % (what, check.reason))
    return candidate


def fixed_fan_cycle_system(index):
    """ the fan-cycle systems of H7 and H8 in the vertex numbering of the fixture """
    if index not in (7, 8):
        raise PreconditionError('Only H7 and H8 have fixed fan-cycle systems, not H%d' % index)
    h = h_graph(index)
    p = 'y' if index == 7 else 'z'
    cycle = ['2', '4', '7', '8', '6'] if index == 7 else ['2', '4', '7', '9', '8', '6']
    at = lambda *names: [h.vertex(p + name) for name in names]
    return FanCycleSystem(at(*cycle), h.vertex(p + '1'), [at('4', '7'), at('8', '6')], at('3', '5'))

def _pointed_comb_system(d):
    m = d.m
    segments = []
    anchors = []
    for i in range(m):
        root = d.roots(i)
        anchors.append(root[0])
        segments.append([root[1]] + list(d.leaves(i)) + list(root[2:]))
    cycle = [v for segment in segments for v in segment] + list(d.layout()[m])
    return FanCycleSystem(cycle, anchors[0], segments[1:], anchors[1:])

def _h1_system(e):
    c3, c4, c5 = e.clique_of('s3'), e.clique_of('s4'), e.clique_of('s5')
    s1, s2 = e.clique_of('s1')[0], e.clique_of('s2')[0]
    path = [c4[1], s2] + list(c4[2:])
    cycle = [c3[1], s1] + list(c3[2:]) + list(c5) + path
    return FanCycleSystem(cycle, c3[0], [path], [c4[0]])

def _h4_system(e):
    h = e.h_graph
    ears = {}
    for ear in ('v1', 'v2', 'v3'):
        pair = frozenset(h.labels[u] for u in e.h_graph.graph.neighbors(h.vertex(ear)))
        ears[pair] = e.clique_of(ear)[0]
    big = [label for label in h.expandable if len(e.clique_of(label)) >= 2]
    if len(big) < 2:
        raise PreconditionError('H4 expansion %s has fewer than two cliques of order >= 2' % format_description(e))
    p, q = big[:2]
    r = [label for label in h.expandable if label not in (p, q)][0]
    cp, cq, cr = e.clique_of(p), e.clique_of(q), e.clique_of(r)
    ear = lambda a, b: ears[frozenset((a, b))]
    path = [ear(q, r)] + list(cq[1:])
    cycle = path + [ear(p, q)] + list(cp[1:]) + [ear(p, r)] + list(cr)
    return FanCycleSystem(cycle, cp[0], [path], [cq[0]])

def fan_cycle_for_H(g, e):
    """
    A fan-cycle system of a 3-connected member of H_0, H_1, H_4, H_7 or H_8.
    Members of H_2, H_3, H_5 and H_6 are never 3-connected.

    The system is built in the numbering of build_H(e); when `e` comes from
    recognition it is translated to the host vertices.

    :raises PreconditionError: if g is not 3-connected or the index is excluded
    """
    if e.index not in FAN_CYCLE_INDICES:
        raise PreconditionError('No fan-cycle construction for H%d' % e.index)
    if g.n == 0 or vertex_connectivity(g) < 3:
        raise PreconditionError('%s is not 3-connected' % format_description(e))
    if e.index == 0:
        f = _pointed_comb_system(e.comb)
    elif e.index == 1:
        f = _h1_system(e)
    elif e.index == 4:
        f = _h4_system(e)
    else:
        f = fixed_fan_cycle_system(e.index)
    mapping = host_map(e)
    if mapping is not None:
        f = f.relabel(mapping)
    check = verify_fan_cycle_system(g, f)
    if not check:
        raise TheoremViolation('Fan-cycle construction for %s failed axiom %s: %s' % (format_description(e), check.axiom, check.reason))
    return f


def _fat_cycle_start(sizes):
    """ rotation start s such that all cliques of order 1 lie in {s-1, s} """
    c = len(sizes)
    ones = [i for i, size in enumerate(sizes) if size == 1]
    for s in range(c):
        if all(i in (s, (s - 1) % c) for i in ones):
            return s
    return None

def halin_for_fat(d):
    # type: (FatDescription) -> HalinCandidate
    """
    A spanning Halin subgraph of a 3-connected fat path or fat cycle, in the
    numbering of build_fat(d).

    One designated vertex a_i is taken from every inner fundamental clique;
    the a_i form a path in T and each a_i is joined to the rest of its
    clique, the first and last also to the outer cliques. The cycle runs
    through all other vertices: for paths forward and back through the
    halves of the inner cliques, for cycles once around.

    :raises PreconditionError: if build_fat(d) is not 3-connected
    """
    g = build_fat(d)
    if g.n < 4 or vertex_connectivity(g) < 3:
        raise PreconditionError('%s is not 3-connected' % format_description(d))
    blocks = d.layout()
    if len(blocks) <= 2 and d.kind == FatKind.PATH:
        # complete graph: a wheel
        return _verified(g, HalinCandidate([(0, v) for v in range(1, g.n)], range(1, g.n)), format_description(d))
    if d.kind == FatKind.CYCLE:
        start = _fat_cycle_start(d.clique_sizes)
        if start is None:
            raise PreconditionError('%s has non-consecutive cliques of order 1' % format_description(d))
        blocks = blocks[start:] + blocks[:start]
    inner = blocks[1:-1]
    anchors = [block[0] for block in inner]
    tree = list(zip(anchors, anchors[1:]))
    for a, block in zip(anchors, inner):
        tree.extend((a, v) for v in block[1:])
    tree.extend((anchors[0], v) for v in blocks[0])
    tree.extend((anchors[-1], v) for v in blocks[-1])
    if d.kind == FatKind.CYCLE:
        cycle = list(blocks[0]) + [v for block in inner for v in block[1:]] + list(blocks[-1])
    else:
        rests = [block[1:] for block in inner]
        forward = [v for rest in rests for v in rest[:(len(rest) + 1) // 2]]
        back = [v for rest in reversed(rests) for v in rest[(len(rest) + 1) // 2:]]
        cycle = list(blocks[0]) + forward + list(blocks[-1]) + back
    return _verified(g, HalinCandidate(tree, cycle), format_description(d))


def spanning_halin(g):
    # type: (Graph) -> HalinCandidate
    """
    A spanning Halin subgraph of a 3-connected graph that is a member of
    H_0..H_8 or a fat structure with parameter at least 5, in host numbering.

    :raises PreconditionError: if g is not 3-connected or no construction applies
    """
    if g.n == 0 or vertex_connectivity(g) < 3:
        raise PreconditionError('Graph is not 3-connected')
    e = recognize_H_union(g)
    if e is not None and e.index in FAN_CYCLE_INDICES:
        logger.debug('spanning Halin via fan-cycle system of %s', format_description(e))
        return halin_from_fan_cycle(g, fan_cycle_for_H(g, e))
    d = recognize_fat(g, 5)
    if d is not None:
        logger.debug('spanning Halin via %s', format_description(d))
        return _verified(g, halin_for_fat(d).relabel(host_map(d)), format_description(d))
    raise PreconditionError('Graph is neither in H_0..H_8 nor a fat structure with parameter >= 5')
