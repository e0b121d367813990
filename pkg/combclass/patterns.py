"""
Named forbidden subgraphs and the induced-subgraph containment engine.

A :py:class:`PatternSpec` names one member of a forbidden family (complete
graphs, paths, the claw and the triangle-with-three-tails graphs N(k,l,m)
together with their aliases Z(k), B(k,l) and the net N). The engine
:py:func:`iter_induced` enumerates induced embeddings by backtracking over
the pattern vertices in a connected search order.
"""

import logging
import re
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

from attr import attrs, attrib

from .exceptions import DescriptionError
from .graph import Graph, iter_bits

logger = logging.getLogger(__name__)


class PatternKind(Enum):
    COMPLETE = 'complete'
    PATH = 'path'
    STAR13 = 'star13'
    NKLM = 'nklm'


@attrs(frozen=True)
class PatternSpec(object):
    """
    Symbolic descriptor of a forbidden-subgraph family member.
    Use the class methods rather than the raw constructor.
    """
    kind = attrib(type=PatternKind)
    #: (n,) for complete graphs and paths, (k, l, m) for NKLM, () for the claw
    params = attrib(type=Tuple[int, ...], converter=tuple, default=())

    def __attrs_post_init__(self):
        expected = {PatternKind.COMPLETE: 1, PatternKind.PATH: 1, PatternKind.STAR13: 0, PatternKind.NKLM: 3}[self.kind]
        if len(self.params) != expected:
            raise DescriptionError('%s takes %d parameters, got %r' % (self.kind.value, expected, self.params))
        if self.kind in (PatternKind.COMPLETE, PatternKind.PATH) and self.params[0] < 1:
            raise DescriptionError('Pattern order must be at least 1, got %d' % self.params[0])
        if any(p < 0 for p in self.params):
            raise DescriptionError('Tail lengths must be non-negative, got %r' % (self.params,))

    @classmethod
    def complete(cls, n):
        return cls(PatternKind.COMPLETE, (n,))

    @classmethod
    def path(cls, n):
        return cls(PatternKind.PATH, (n,))

    @classmethod
    def claw(cls):
        return cls(PatternKind.STAR13)

    @classmethod
    def nklm(cls, k, l, m):
        return cls(PatternKind.NKLM, (k, l, m))

    @classmethod
    def z(cls, k):
        return cls.nklm(k, 0, 0)

    @classmethod
    def b(cls, k, l):
        return cls.nklm(k, l, 0)

    @classmethod
    def net(cls):
        return cls.nklm(1, 1, 1)

    @property
    def order(self):
        if self.kind == PatternKind.STAR13:
            return 4
        if self.kind == PatternKind.NKLM:
            return sum(self.params) + 3
        return self.params[0]

    @property
    def name(self):
        """ canonical textual name, accepted back by :py:func:`parse_pattern` """
        if self.kind == PatternKind.STAR13:
            return 'K1,3'
        if self.kind == PatternKind.COMPLETE:
            return 'K%d' % self.params
        if self.kind == PatternKind.PATH:
            return 'P%d' % self.params
        k, l, m = self.params
        if (k, l, m) == (1, 1, 1):
            return 'N'
        if l == 0 and m == 0:
            return 'Z%d' % k
        if m == 0:
            return 'B%d,%d' % (k, l)
        return 'N(%d,%d,%d)' % (k, l, m)

    def __str__(self):
        return self.name


@attrs(frozen=True)
class Embedding(object):
    """ An induced embedding: pattern vertex i is mapped to host vertex mapping[i]. """
    mapping = attrib(type=Tuple[int, ...], converter=tuple)

    def is_valid(self, host, pattern):
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= v < host.n for v in self.mapping):
            return False
        return all(pattern.has_edge(a, b) == host.has_edge(self.mapping[a], self.mapping[b])
                   for a in range(pattern.n) for b in range(a + 1, pattern.n))


@attrs(frozen=True)
class FreeCheck(object):
    """
    Outcome of :py:func:`is_free`; truthy iff the host is free of the family.
    On failure it names the first violating pattern and its embedding.
    """
    free = attrib(type=bool)
    pattern = attrib(default=None)
    embedding = attrib(default=None)

    def __bool__(self):
        return self.free


_TOKEN = re.compile(r'\s*(K1,3|B\d+,\d+|N\(\s*\d+\s*,\s*\d+\s*,\s*\d+\s*\)|N|K\d+|P\d+|Z\d+)\s*')

def _spec_from_token(token):
    token = token.replace(' ', '')
    if token == 'K1,3':
        return PatternSpec.claw()
    if token == 'N':
        return PatternSpec.net()
    head, body = token[0], token[1:]
    if head == 'N':
        return PatternSpec.nklm(*[int(x) for x in body.strip('()').split(',')])
    if head == 'B':
        return PatternSpec.b(*[int(x) for x in body.split(',')])
    if head == 'Z':
        return PatternSpec.z(int(body))
    if head == 'K':
        return PatternSpec.complete(int(body))
    return PatternSpec.path(int(body))

def parse_family(text):
    # type: (str) -> List[PatternSpec]
    """
    Parse a comma separated family such as ``"K1,3,Z2"`` or ``"K1,3,B1,2"``.

    :raises DescriptionError: naming the position of the first unparsable token
    """
    family = []
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if not match:
            raise DescriptionError('Cannot parse pattern at position %d of %r' % (pos, text))
        family.append(_spec_from_token(match.group(1)))
        pos = match.end()
        if pos == len(text):
            return family
        if text[pos] != ',':
            raise DescriptionError('Expected "," at position %d of %r' % (pos, text))
        pos += 1

def parse_pattern(text):
    family = parse_family(text)
    if len(family) != 1:
        raise DescriptionError('Expected a single pattern, got %d in %r' % (len(family), text))
    return family[0]


@lru_cache(maxsize=None)
def make_pattern(spec):
    # type: (PatternSpec) -> Graph
    if spec.kind == PatternKind.COMPLETE:
        n = spec.params[0]
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if spec.kind == PatternKind.PATH:
        n = spec.params[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == PatternKind.STAR13:
        return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    # triangle 0, 1, 2 with tails of lengths k, l, m hanging off 0, 1, 2
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for end, length in enumerate(spec.params):
        prev = end
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _search_order(pattern):
    order = []
    seen = 0
    while len(order) < pattern.n:
        rest = [v for v in range(pattern.n) if not seen >> v & 1]
        start = max(rest, key=lambda v: (pattern.degree(v), -v))
        seen |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in iter_bits(pattern.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order

def iter_induced(host, pattern, exact_degree=False):
    """
    Generate every induced embedding of `pattern` into `host`.

    Pattern vertices are placed in breadth-first order from a vertex of
    maximum degree; host candidates are tried in increasing order, so the
    first embedding produced is the lexicographically least one for that
    order.

    :param bool exact_degree: require equal degrees (used by isomorphism tests)
    """
    if pattern.n > host.n:
        return
    order = _search_order(pattern)
    position = {v: i for i, v in enumerate(order)}
    # for each step: (index of earlier step, adjacent?) pairs
    constraints = [[(position[u], pattern.has_edge(v, u)) for u in order[:t]] for t, v in enumerate(order)]
    want = [pattern.degree(v) for v in order]
    host_deg = host.degrees()
    full = host.vertex_mask
    chosen = [0] * pattern.n

    def extend(t, used):
        if t == pattern.n:
            mapping = [0] * pattern.n
            for i, v in enumerate(order):
                mapping[v] = chosen[i]
            yield Embedding(mapping)
            return
        candidates = full & ~used
        for s, adjacent in constraints[t]:
            candidates &= host.adj[chosen[s]] if adjacent else ~host.adj[chosen[s]]
        for h in iter_bits(candidates):
            if host_deg[h] < want[t] or (exact_degree and host_deg[h] != want[t]):
                continue
            chosen[t] = h
            yield from extend(t + 1, used | 1 << h)

    yield from extend(0, 0)

def find_induced(host, pattern):
    # type: (Graph, Graph) -> Optional[Embedding]
    return next(iter_induced(host, pattern), None)

def contains(host, spec):
    return find_induced(host, make_pattern(spec)) is not None

def is_free(host, family):
    # type: (Graph, List[PatternSpec]) -> FreeCheck
    """
    Check that `host` contains no member of `family` as an induced subgraph.
    Members are tested in the given order; the first hit is reported.
    """
    for spec in family:
        embedding = find_induced(host, make_pattern(spec))
        if embedding is not None:
            logger.debug('%s contains %s at %r', host, spec.name, embedding.mapping)
            return FreeCheck(False, spec, embedding)
    return FreeCheck(True)

def family_leq(f1, f2):
    """ True iff every member of `f2` contains some member of `f1` as an induced subgraph """
    return all(any(find_induced(make_pattern(h2), make_pattern(h1)) is not None for h1 in f1) for h2 in f2)

def is_isomorphic(g, h):
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return next(iter_induced(g, h, exact_degree=True), None) is not None

def family_name(family):
    return ','.join(spec.name for spec in family)
