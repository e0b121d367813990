"""
The characterized graph classes.

This module builds and recognizes generalized combs, the expansions H_i(C)
of the pattern graphs H0..H8, fat paths and fat cycles, and the boundary
family F'. All builders go through :py:func:`blow_up`, which replaces every
vertex of a small quotient graph by a clique; the recognizers invert this
by taking the closed-twin quotient of the host.

Descriptions produced by a recognizer carry ``blocks``: for every block of
the builder's vertex layout, the host vertices realizing it. Concatenating
the blocks maps builder vertex i to its host vertex.
"""

import logging
import re
from enum import Enum
from typing import List, Optional, Tuple

from attr import attrs, attrib

from .exceptions import DescriptionError, GraphArgumentError, PreconditionError, TheoremViolation
from .graph import Graph, iter_bits, is_connected, is_hamiltonian_cycle, mask_of, twin_quotient, vertex_connectivity
from .hgraphs import HGraphsManager, h_graph
from .patterns import iter_induced

logger = logging.getLogger(__name__)


class FatKind(Enum):
    PATH = 'path'
    CYCLE = 'cycle'


def _sizes(values):
    return tuple(int(v) for v in values)

def _consecutive_blocks(sizes):
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return blocks

def host_map(description):
    """
    Builder vertex -> host vertex for a recognized description,
    None if it was not produced by a recognizer.
    """
    if description.blocks is None:
        return None
    return tuple(v for block in description.blocks for v in block)


@attrs(frozen=True)
class CombDescription(object):
    """
    A generalized comb: a base clique C and leaf cliques L_1..L_m, where
    every vertex of L_i is joined to all vertices of its root R_i, a
    subset of C. The roots are pairwise disjoint and non-empty.

    Only the sizes matter up to isomorphism. :py:func:`build_comb` numbers
    the base clique first, with R_1..R_m as consecutive blocks followed by
    the uncovered base vertices U, and then L_1..L_m.
    """
    #: The orders |L_1| .. |L_m|.
    leaf_sizes = attrib(type=Tuple[int, ...], converter=_sizes)
    #: The orders |R_1| .. |R_m|.
    root_sizes = attrib(type=Tuple[int, ...], converter=_sizes)
    #: The order of the base clique C.
    base_size = attrib(type=int)
    #: Host vertices per layout block (R_1..R_m, U, L_1..L_m), set by recognition.
    blocks = attrib(default=None, eq=False, repr=False)

    def __attrs_post_init__(self):
        if self.m < 3:
            raise DescriptionError('A generalized comb needs m >= 3 leaf cliques, got %d' % self.m)
        if len(self.root_sizes) != self.m:
            raise DescriptionError('Expected %d root sizes, got %d' % (self.m, len(self.root_sizes)))
        if min(self.leaf_sizes) < 1:
            raise DescriptionError('Leaf cliques must be non-empty: %r' % (self.leaf_sizes,))
        if min(self.root_sizes) < 1:
            raise DescriptionError('Roots must be non-empty: %r' % (self.root_sizes,))
        if sum(self.root_sizes) > self.base_size:
            raise DescriptionError('Disjoint roots need %d base vertices, but |C| = %d' % (sum(self.root_sizes), self.base_size))

    @property
    def m(self):
        return len(self.leaf_sizes)

    @property
    def pointed(self):
        return all(size == 1 for size in self.leaf_sizes)

    @property
    def uncovered(self):
        return self.base_size - sum(self.root_sizes)

    @property
    def order(self):
        return self.base_size + sum(self.leaf_sizes)

    def layout(self):
        return _consecutive_blocks(self.root_sizes + (self.uncovered,) + self.leaf_sizes)

    def roots(self, i):
        return self.layout()[i]

    def leaves(self, i):
        return self.layout()[self.m + 1 + i]


@attrs(frozen=True)
class HExpansion(object):
    """
    A member of one of the families H_0..H_8.

    For index 0 the member is a pointed generalized comb given by `comb`.
    For indices 1..5, `cliques` holds the clique order of every expandable
    vertex of H_i, in the order of :py:attr:`HGraph.expandable`; omitted
    cliques default to single vertices. Indices 6..8 take no parameters.
    """
    index = attrib(type=int)
    cliques = attrib(type=Tuple[int, ...], converter=_sizes, default=())
    comb = attrib(default=None)
    #: Host vertices per vertex of H_i (or per comb layout block), set by recognition.
    blocks = attrib(default=None, eq=False, repr=False)

    def __attrs_post_init__(self):
        if not 0 <= self.index <= 8:
            raise DescriptionError('H index must lie in 0..8, got %d' % self.index)
        if self.index == 0:
            if not isinstance(self.comb, CombDescription):
                raise DescriptionError('H0 members need a comb description')
            if not self.comb.pointed:
                raise DescriptionError('H0 members are pointed combs, leaf sizes %r' % (self.comb.leaf_sizes,))
            if self.cliques:
                raise DescriptionError('H0 takes no clique orders')
            return
        if self.comb is not None:
            raise DescriptionError('Only H0 carries a comb')
        expected = len(self.h_graph.expandable)
        if not self.cliques and expected:
            object.__setattr__(self, 'cliques', (1,) * expected)
        if len(self.cliques) != expected:
            raise DescriptionError('H%d has %d expandable vertices, got %d clique orders' % (self.index, expected, len(self.cliques)))
        if self.cliques and min(self.cliques) < 1:
            raise DescriptionError('Clique orders must be at least 1: %r' % (self.cliques,))

    @property
    def h_graph(self):
        return None if self.index == 0 else h_graph(self.index)

    def vertex_sizes(self):
        """ clique order of every vertex of H_i, in label order """
        h = self.h_graph
        sizes = [1] * len(h.labels)
        for v, size in zip(h.expandable_vertices, self.cliques):
            sizes[v] = size
        return sizes

    def layout(self):
        if self.index == 0:
            return self.comb.layout()
        return _consecutive_blocks(self.vertex_sizes())

    def clique_of(self, label):
        """ builder vertices of the clique replacing the H_i vertex `label` """
        return self.layout()[self.h_graph.vertex(label)]


@attrs(frozen=True)
class FatDescription(object):
    """
    A fat path (kind PATH, l fundamental cliques) or a fat l-cycle (kind
    CYCLE, l+1 fundamental cliques). Consecutive cliques are completely
    joined, cyclically for CYCLE.
    """
    kind = attrib(type=FatKind, converter=FatKind)
    clique_sizes = attrib(type=Tuple[int, ...], converter=_sizes)
    #: Host vertices per fundamental clique, set by recognition.
    blocks = attrib(default=None, eq=False, repr=False)

    def __attrs_post_init__(self):
        if not self.clique_sizes or min(self.clique_sizes) < 1:
            raise DescriptionError('Fundamental cliques must be non-empty: %r' % (self.clique_sizes,))
        if self.kind == FatKind.CYCLE and len(self.clique_sizes) < 3:
            raise DescriptionError('A fat cycle needs at least 3 fundamental cliques, got %d' % len(self.clique_sizes))

    @property
    def parameter(self):
        """ l for fat l-paths and fat l-cycles """
        if self.kind == FatKind.PATH:
            return len(self.clique_sizes)
        return len(self.clique_sizes) - 1

    @property
    def order(self):
        return sum(self.clique_sizes)

    def layout(self):
        return _consecutive_blocks(self.clique_sizes)


def f_prime_path_length(m):
    return max(3 * m - 1, m + 3)

def f_prime_joined(m):
    """ 1-based indices of the fundamental cliques joined to K in F'(m) """
    return (max(m - 1, 1), max(m, 2), max(2 * m, 3), max(2 * m + 1, 4))

@attrs(frozen=True)
class FPrimeDescription(object):
    """
    The boundary graph F'(m): a fat path with max{3m-1, m+3} cliques and
    a clique K joined to four of them. Path vertices come first, then K.
    """
    m = attrib(type=int)
    leaf_sizes = attrib(type=Tuple[int, ...], converter=_sizes, default=())
    k_size = attrib(type=int, default=1)

    def __attrs_post_init__(self):
        if self.m < 1:
            raise DescriptionError('F\' needs m >= 1, got %d' % self.m)
        length = f_prime_path_length(self.m)
        if not self.leaf_sizes:
            object.__setattr__(self, 'leaf_sizes', (1,) * length)
        if len(self.leaf_sizes) != length:
            raise DescriptionError('F\'(%d) has %d path cliques, got %d sizes' % (self.m, length, len(self.leaf_sizes)))
        if min(self.leaf_sizes) < 1 or self.k_size < 1:
            raise DescriptionError('Clique orders must be at least 1')


def blow_up(base, sizes):
    # type: (Graph, List[int]) -> Graph
    """
    Replace vertex a of `base` by a clique of order sizes[a], joined
    completely to the cliques of a's neighbours. The cliques are numbered
    consecutively in base order; order 0 deletes the vertex.
    """
    if len(sizes) != base.n:
        raise GraphArgumentError('Expected %d clique orders, got %d' % (base.n, len(sizes)))
    masks = [mask_of(block) for block in _consecutive_blocks(sizes)]
    adj = []
    for a in range(base.n):
        outside = 0
        for b in iter_bits(base.adj[a]):
            outside |= masks[b]
        for v in iter_bits(masks[a]):
            adj.append(outside | masks[a] & ~(1 << v))
    return Graph(sum(sizes), adj)

def _chain(k, closed=False):
    edges = [(i, i + 1) for i in range(k - 1)]
    if closed and k >= 3:
        edges.append((k - 1, 0))
    return Graph.from_edges(k, edges)

def _comb_quotient(m):
    # nodes: R_1..R_m, U, L_1..L_m
    core = m + 1
    edges = [(a, b) for a in range(core) for b in range(a + 1, core)]
    edges.extend((i, core + i) for i in range(m))
    return Graph.from_edges(core + m, edges)


def build_comb(d):
    # type: (CombDescription) -> Graph
    return blow_up(_comb_quotient(d.m), list(d.root_sizes + (d.uncovered,) + d.leaf_sizes))

def build_H(e):
    # type: (HExpansion) -> Graph
    if e.index == 0:
        return build_comb(e.comb)
    return blow_up(e.h_graph.graph, e.vertex_sizes())

def build_fat(d):
    # type: (FatDescription) -> Graph
    base = _chain(len(d.clique_sizes), closed=d.kind == FatKind.CYCLE)
    return blow_up(base, list(d.clique_sizes))

def build_F_prime(m, leaf_sizes=None, k_size=1):
    """
    :param int m: the parameter of the family, at least 1
    :param leaf_sizes: orders of the path cliques, all 1 by default
    :param int k_size: order of the clique K
    """
    d = FPrimeDescription(m, leaf_sizes or (), k_size)
    length = f_prime_path_length(m)
    base = _chain(length)
    edges = base.edges() + [(i - 1, length) for i in f_prime_joined(m)]
    return blow_up(Graph.from_edges(length + 1, edges), list(d.leaf_sizes) + [d.k_size])

def build(description):
    """ Build the graph of any description object. """
    if isinstance(description, CombDescription):
        return build_comb(description)
    if isinstance(description, HExpansion):
        return build_H(description)
    if isinstance(description, FatDescription):
        return build_fat(description)
    if isinstance(description, FPrimeDescription):
        return build_F_prime(description.m, description.leaf_sizes, description.k_size)
    raise DescriptionError('Not a description: %r' % (description,))


def recognize_comb(g):
    # type: (Graph) -> Optional[CombDescription]
    """
    Recognize a generalized comb from its closed-twin quotient, which is a
    clique of roots (plus at most one class of uncovered base vertices)
    with one pendant leaf class per root. Leaves are listed in order of
    their roots' smallest host vertex.
    """
    if g.n == 0 or not is_connected(g):
        return None
    classes, quotient = twin_quotient(g)
    degrees = quotient.degrees()
    leaves = [c for c in range(quotient.n) if degrees[c] == 1]
    if len(leaves) < 3:
        return None
    core = [c for c in range(quotient.n) if degrees[c] != 1]
    core_mask = mask_of(core)
    if not quotient.is_clique(core_mask):
        return None
    pairs = []
    for leaf in leaves:
        root = quotient.neighbors(leaf)[0]
        if not core_mask >> root & 1:
            return None
        pairs.append((root, leaf))
    roots = [root for root, _ in pairs]
    if len(set(roots)) != len(roots):
        return None
    uncovered = [c for c in core if c not in roots]
    if len(uncovered) > 1:
        return None
    pairs.sort()
    blocks = [classes[root] for root, _ in pairs]
    blocks.append(classes[uncovered[0]] if uncovered else ())
    blocks.extend(classes[leaf] for _, leaf in pairs)
    d = CombDescription(leaf_sizes=[len(classes[leaf]) for _, leaf in pairs],
                        root_sizes=[len(classes[root]) for root, _ in pairs],
                        base_size=sum(len(classes[c]) for c in core),
                        blocks=tuple(blocks))
    logger.debug('recognized comb %s', format_description(d))
    return d

def recognize_H_union(g):
    # type: (Graph) -> Optional[HExpansion]
    """
    Find the least index i such that g is a member of H_i.

    Index 0 is decided by :py:func:`recognize_comb`. For 1..8 the twin
    quotient of g must be isomorphic to H_i under a map sending every
    non-expandable vertex to a single host vertex.
    """
    if g.n == 0 or not is_connected(g):
        return None
    comb = recognize_comb(g)
    if comb is not None and comb.pointed:
        return HExpansion(0, comb=comb, blocks=comb.blocks)
    classes, quotient = twin_quotient(g)
    sizes = [len(members) for members in classes]
    for h in HGraphsManager().iter_elements():
        pattern = h.graph
        if pattern.n != quotient.n or pattern.edge_count() != quotient.edge_count():
            continue
        expandable = set(h.expandable_vertices)
        for embedding in iter_induced(quotient, pattern, exact_degree=True):
            image = embedding.mapping
            if any(sizes[image[v]] != 1 for v in range(pattern.n) if v not in expandable):
                continue
            cliques = [sizes[image[v]] for v in h.expandable_vertices]
            return HExpansion(h.index, cliques, blocks=tuple(classes[image[v]] for v in range(pattern.n)))
    return None

def _walk(quotient, start):
    order = [start]
    prev = None
    while True:
        step = [c for c in quotient.neighbors(order[-1]) if c != prev and c != start]
        if not step:
            return order
        prev = order[-1]
        order.append(step[0])

def recognize_fat(g, min_l=5):
    # type: (Graph, int) -> Optional[FatDescription]
    """
    Recognize a fat path or fat cycle with parameter at least `min_l`.

    For parameters of 5 and more the fundamental cliques are exactly the
    closed-twin classes, so g is such a structure iff its twin quotient is
    a path or a cycle. The clique order returned is the least rotation or
    reflection of the size sequence.

    :raises GraphArgumentError: if min_l < 5
    """
    if min_l < 5:
        raise GraphArgumentError('Fat recognition needs min_l >= 5, got %d' % min_l)
    if g.n == 0 or not is_connected(g):
        return None
    classes, quotient = twin_quotient(g)
    k = quotient.n
    if max(quotient.degrees()) > 2:
        return None
    if quotient.edge_count() == k - 1:
        kind = FatKind.PATH
        if k < min_l:
            return None
        start = min(c for c in range(k) if quotient.degree(c) <= 1)
        order = _walk(quotient, start)
        candidates = [order, order[::-1]]
    elif quotient.edge_count() == k:
        kind = FatKind.CYCLE
        if k - 1 < min_l:
            return None
        order = _walk(quotient, 0)
        backwards = order[::-1]
        candidates = [seq[i:] + seq[:i] for seq in (order, backwards) for i in range(k)]
    else:
        return None
    best = min(candidates, key=lambda seq: [len(classes[c]) for c in seq])
    return FatDescription(kind, [len(classes[c]) for c in best], blocks=tuple(classes[c] for c in best))

def in_P(g, l):
    return recognize_fat(g, l) is not None


def fat_hamiltonian_cycle(d):
    # type: (FatDescription) -> List[int]
    """
    A Hamiltonian cycle of build_fat(d), in builder numbering.

    Cycles are traversed clique by clique. For paths each interior clique
    is split into a forward and a return strand.

    :raises PreconditionError: if build_fat(d) is not 2-connected
    """
    g = build_fat(d)
    if g.n < 3 or vertex_connectivity(g) < 2:
        raise PreconditionError('%s is not 2-connected' % format_description(d))
    blocks = d.layout()
    if d.kind == FatKind.CYCLE or len(blocks) <= 2:
        cycle = [v for block in blocks for v in block]
    else:
        interior = blocks[1:-1]
        forward = [block[:(len(block) + 1) // 2] for block in interior]
        back = [block[(len(block) + 1) // 2:] for block in interior]
        cycle = list(blocks[0])
        for strand in forward:
            cycle.extend(strand)
        cycle.extend(blocks[-1])
        for strand in reversed(back):
            cycle.extend(strand)
    if not is_hamiltonian_cycle(g, cycle):
        raise TheoremViolation('Constructed cycle %r is not Hamiltonian in %s' % (cycle, format_description(d)))
    return cycle

def comb_hamiltonian_cycle(d):
    # type: (CombDescription) -> List[int]
    """
    A Hamiltonian cycle of build_comb(d). The comb is 2-connected iff
    every root has at least two vertices; each leaf clique is then entered
    and left through two different root vertices.

    :raises PreconditionError: if some root is a single vertex
    """
    if min(d.root_sizes) < 2:
        raise PreconditionError('%s is not 2-connected' % format_description(d))
    cycle = []
    for i in range(d.m):
        root = d.roots(i)
        cycle.append(root[0])
        cycle.extend(d.leaves(i))
        cycle.extend(root[1:])
    cycle.extend(d.layout()[d.m])
    g = build_comb(d)
    if not is_hamiltonian_cycle(g, cycle):
        raise TheoremViolation('Constructed cycle %r is not Hamiltonian in %s' % (cycle, format_description(d)))
    return cycle


_H_HEAD = re.compile(r'^[Hh]([0-8])$')

def _int_list(text, what):
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise DescriptionError('Cannot read %s from %r' % (what, text))

def _fields(body):
    fields = {}
    for item in body.split(';'):
        if not item.strip():
            continue
        key, sep, value = item.partition('=')
        if not sep:
            raise DescriptionError('Expected key=value, got %r' % item)
        fields[key.strip()] = value.strip()
    return fields

def _parse_comb(body):
    fields = _fields(body)
    missing = [key for key in ('C', 'R', 'L') if key not in fields]
    if missing:
        raise DescriptionError('Comb description lacks %s' % ', '.join(missing))
    leaves = _int_list(fields['L'], 'leaf sizes')
    d = CombDescription(leaves, _int_list(fields['R'], 'root sizes'), _int_list(fields['C'], 'base size')[0])
    if 'm' in fields and int(fields['m']) != d.m:
        raise DescriptionError('m=%s does not match %d leaf sizes' % (fields['m'], d.m))
    return d

def parse_description(text):
    """
    Parse the textual description syntax, for example
    ``fatpath:2,1,3,1,2``, ``fatcycle:1,1,1,1,1,1``,
    ``comb:m=3;C=4;R=1,1,1;L=1,1,2``, ``H3:u6=2``, ``H7``,
    ``H0:C=3;R=1,1,1;L=1,1,1`` or ``Fprime:m=2;K=2``.

    :raises DescriptionError: on syntax errors or violated invariants
    """
    head, _, body = text.strip().partition(':')
    key = head.strip().lower()
    if key in ('fatpath', 'fatcycle'):
        kind = FatKind.PATH if key == 'fatpath' else FatKind.CYCLE
        return FatDescription(kind, _int_list(body, 'clique sizes'))
    if key == 'comb':
        return _parse_comb(body)
    if key == 'fprime':
        fields = _fields(body)
        if 'm' not in fields:
            raise DescriptionError('Fprime needs m')
        try:
            m, k_size = int(fields['m']), int(fields.get('K', 1))
        except ValueError:
            raise DescriptionError('Cannot read m or K from %r' % body)
        return FPrimeDescription(m, _int_list(fields.get('L', ''), 'path clique sizes'), k_size)
    match = _H_HEAD.match(head.strip())
    if match:
        index = int(match.group(1))
        if index == 0:
            return HExpansion(0, comb=_parse_comb(body))
        h = h_graph(index)
        fields = _fields(body)
        unknown = set(fields) - set(h.expandable)
        if unknown:
            raise DescriptionError('%s has no expandable vertices %s' % (h.identifier, ', '.join(sorted(unknown))))
        try:
            cliques = [int(fields.get(label, 1)) for label in h.expandable]
        except ValueError:
            raise DescriptionError('Cannot read clique orders from %r' % body)
        return HExpansion(index, cliques)
    raise DescriptionError('Unknown description %r' % text)

def _join(values):
    return ','.join(str(v) for v in values)

def format_description(d):
    """ textual form of a description, accepted back by :py:func:`parse_description` """
    if isinstance(d, FatDescription):
        return 'fat%s:%s' % (d.kind.value, _join(d.clique_sizes))
    if isinstance(d, CombDescription):
        return 'comb:m=%d;C=%d;R=%s;L=%s' % (d.m, d.base_size, _join(d.root_sizes), _join(d.leaf_sizes))
    if isinstance(d, HExpansion):
        if d.index == 0:
            return 'H0:' + format_description(d.comb)[len('comb:'):]
        h = d.h_graph
        if not h.expandable:
            return h.identifier
        return '%s:%s' % (h.identifier, ';'.join('%s=%d' % pair for pair in zip(h.expandable, d.cliques)))
    if isinstance(d, FPrimeDescription):
        return 'Fprime:m=%d;K=%d;L=%s' % (d.m, d.k_size, _join(d.leaf_sizes))
    raise DescriptionError('Not a description: %r' % (d,))
