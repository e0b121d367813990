"""
Executable verifiers for the characterization theorems.

Every theorem has the shape: a connected graph that is free of the
forbidden family contains the threshold pattern as an induced subgraph if
and only if it belongs to the target class. :py:func:`check` evaluates both
sides for one graph, :py:func:`sweep` aggregates the verdicts over a
stream of graphs into a :py:class:`SweepReport`.
"""

import functools
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from attr import attrs, attrib

from .graph import is_complete_multipartite, is_connected
from .graph6 import parse_graph6, write_graph6
from .helpers import ElementsManager
from .patterns import PatternSpec, find_induced, family_name, is_free, make_pattern
from .pool import DEFAULT_CHUNKSIZE, map_tasks
from .structures import format_description, recognize_H_union, recognize_comb, recognize_fat

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 10000


class TargetClass(Enum):
    #: generalized combs
    COMB = 'comb'
    #: members of H_0 .. H_8
    H_UNION = 'h-union'
    #: fat paths and fat cycles with parameter at least min_l
    FAT = 'fat'
    #: complete multipartite graphs with at least three partite sets
    MULTIPARTITE = 'multipartite'

class Status(Enum):
    NOT_APPLICABLE = 'not_applicable'
    HOLDS = 'holds'
    COUNTEREXAMPLE = 'counterexample'

class Direction(Enum):
    #: contains the threshold pattern but is not in the target class
    FORWARD = 'forward'
    #: in the target class but free of the threshold pattern
    BACKWARD = 'backward'


@attrs(frozen=True)
class Theorem(object):
    """
    One characterization statement. Theorems are plain values, so a
    variant with a different threshold can be derived with ``attr.evolve``.
    """
    #: A string identifier given to each theorem, eg. 'thm1z'.
    identifier = attrib(type=str)
    #: The forbidden family the graph must be free of.
    forbidden = attrib(type=Tuple[PatternSpec, ...], converter=tuple)
    #: The pattern whose presence is characterized.
    threshold = attrib(type=PatternSpec)
    target = attrib(type=TargetClass)
    #: Least fat parameter for TargetClass.FAT.
    min_l = attrib(type=int, default=0)
    #: The m of the B(1,m) family for thm3 style statements.
    m = attrib(default=None)

    @property
    def name(self):
        return self.identifier

    @property
    def statement(self):
        target = {
            TargetClass.COMB: 'generalized comb',
            TargetClass.H_UNION: 'member of H0..H8',
            TargetClass.FAT: 'fat path or cycle with parameter >= %d' % self.min_l,
            TargetClass.MULTIPARTITE: 'complete multipartite with >= 3 parts',
        }[self.target]
        return 'connected {%s}-free: not %s-free <=> %s' % (family_name(self.forbidden), self.threshold.name, target)

    def recognize(self, g):
        """ the target-class witness of g, or None """
        if self.target == TargetClass.COMB:
            return recognize_comb(g)
        if self.target == TargetClass.H_UNION:
            return recognize_H_union(g)
        if self.target == TargetClass.FAT:
            return recognize_fat(g, self.min_l)
        parts = is_complete_multipartite(g)
        if parts is not None and len(parts) >= 3:
            return parts
        return None


def thm3(m, identifier=None):
    """ {K1,3, B1,m}-free: not P_t-free iff in P(t) with t = max{3m, m+4} """
    if m < 1:
        raise ValueError('thm3 needs m >= 1, got %d' % m)
    t = max(3 * m, m + 4)
    return Theorem(identifier or 'thm3(m=%d)' % m, (PatternSpec.claw(), PatternSpec.b(1, m)),
                   PatternSpec.path(t), TargetClass.FAT, min_l=t, m=m)

ALL_THEOREMS = (
  Theorem('thma', (PatternSpec.claw(), PatternSpec.b(1, 2)), PatternSpec.net(), TargetClass.COMB),
  Theorem('thm1z', (PatternSpec.claw(), PatternSpec.z(2)), PatternSpec.b(1, 1), TargetClass.H_UNION),
  thm3(1, 'thm1'),
  thm3(2, 'thm2'),
  Theorem('olariu', (PatternSpec.z(1),), PatternSpec.complete(3), TargetClass.MULTIPARTITE),
)

class TheoremsManager(ElementsManager):
    DEFAULT_ELEMENTS = ALL_THEOREMS
    ELEMENT_NAME = 'theorem'

    @classmethod
    def normalize(cls, identifier):
        return identifier.strip().lower()

def theorem(identifier, m=None):
    """
    Look up a theorem by identifier (case-insensitive). ``thm3`` needs `m`.

    :raises KeyError: for unknown identifiers
    """
    if TheoremsManager.normalize(identifier) == 'thm3':
        if m is None:
            raise KeyError('thm3 needs a value for m')
        return thm3(m)
    return TheoremsManager().get(identifier)


@attrs(frozen=True)
class Evidence(object):
    """ Both sides of the equivalence for one graph. """
    #: Induced embedding of the threshold pattern, None if the graph is free of it.
    embedding = attrib(default=None)
    #: Target-class witness (a description or a partition), None if not a member.
    member = attrib(default=None)

    def to_json(self):
        data = {'embedding': list(self.embedding.mapping) if self.embedding is not None else None}
        if self.member is None:
            data['member'] = None
        elif isinstance(self.member, list):
            data['member'] = [list(part) for part in self.member]
        else:
            data['member'] = format_description(self.member)
            data['blocks'] = [list(block) for block in self.member.blocks]
        return data

@attrs(frozen=True)
class Verdict(object):
    status = attrib(type=Status)
    direction = attrib(default=None)
    witness = attrib(default=None)
    #: Why the theorem does not apply.
    reason = attrib(type=str, default=None)

    def __bool__(self):
        return self.status != Status.COUNTEREXAMPLE

    def to_json(self):
        return {
            'status': self.status.value,
            'direction': self.direction.value if self.direction else None,
            'reason': self.reason,
            'witness': self.witness.to_json() if self.witness else None,
        }


def check(g, theorem):
    # type: (Graph, Theorem) -> Verdict
    """
    Evaluate `theorem` on `g`.

    The verdict is not_applicable for the empty graph, for disconnected
    graphs and for graphs containing a forbidden pattern; otherwise it is
    holds if both sides of the equivalence agree and counterexample if not.
    """
    if g.n == 0:
        return Verdict(Status.NOT_APPLICABLE, reason='empty')
    if not is_connected(g):
        return Verdict(Status.NOT_APPLICABLE, reason='disconnected')
    free = is_free(g, theorem.forbidden)
    if not free:
        return Verdict(Status.NOT_APPLICABLE, reason='contains %s' % free.pattern.name)
    embedding = find_induced(g, make_pattern(theorem.threshold))
    member = theorem.recognize(g)
    evidence = Evidence(embedding, member)
    if (embedding is None) == (member is None):
        return Verdict(Status.HOLDS, witness=evidence)
    direction = Direction.FORWARD if embedding is not None else Direction.BACKWARD
    logger.warning('%s: counterexample (%s) %s', theorem.identifier, direction.value, write_graph6(g))
    return Verdict(Status.COUNTEREXAMPLE, direction, evidence)


@attrs
class SweepReport(object):
    """
    Aggregated verdicts of one theorem over a stream of graphs.
    Merging is associative; counterexamples are kept sorted by graph6.
    """
    theorem = attrib(type=str)
    #: Smallest and largest order seen, None before the first graph.
    n_range = attrib(default=None)
    counts = attrib(type=Dict[str, int], factory=lambda: {status.value: 0 for status in Status})
    #: Disconnected inputs; they are counted here and not checked.
    skipped = attrib(type=int, default=0)
    counterexamples = attrib(type=List[dict], factory=list)

    @property
    def total(self):
        return sum(self.counts.values()) + self.skipped

    def _see(self, n):
        if self.n_range is None:
            self.n_range = [n, n]
        else:
            self.n_range = [min(self.n_range[0], n), max(self.n_range[1], n)]

    def record(self, graph6, n, verdict):
        self._see(n)
        if verdict is None:
            self.skipped += 1
            return
        self.counts[verdict.status.value] += 1
        if verdict.status == Status.COUNTEREXAMPLE:
            self.counterexamples.append({
                'graph6': graph6,
                'direction': verdict.direction.value,
                'witness': verdict.witness.to_json(),
            })
            self.counterexamples.sort(key=lambda item: item['graph6'])

    def merge(self, other):
        if other.theorem != self.theorem:
            raise ValueError('Cannot merge reports of %s and %s' % (self.theorem, other.theorem))
        merged = SweepReport(self.theorem, skipped=self.skipped + other.skipped)
        for part in (self, other):
            if part.n_range is not None:
                merged._see(part.n_range[0])
                merged._see(part.n_range[1])
            for key, value in part.counts.items():
                merged.counts[key] += value
        merged.counterexamples = sorted(self.counterexamples + other.counterexamples, key=lambda item: item['graph6'])
        return merged

    def to_json(self):
        return {
            'theorem': self.theorem,
            'n_range': self.n_range,
            'counts': dict(self.counts),
            'skipped': self.skipped,
            'counterexamples': list(self.counterexamples),
        }


def check_graph6(theorem, graph6):
    """ worker: (graph6, n, verdict or None for disconnected input) """
    g = parse_graph6(graph6)
    if g.n > 0 and not is_connected(g):
        return graph6, g.n, None
    return graph6, g.n, check(g, theorem)

def sweep(stream, theorem, jobs=1, deterministic=True, chunksize=DEFAULT_CHUNKSIZE):
    """
    Check `theorem` on every graph of `stream`.

    :param stream: iterable of :py:class:`Graph` (or graph6 strings)
    :param int jobs: worker processes; 1 checks in-process
    :param bool deterministic: consume results in input order
    """
    report = SweepReport(theorem.identifier)
    lines = (item if isinstance(item, str) else write_graph6(item) for item in stream)
    worker = functools.partial(check_graph6, theorem)
    for count, (graph6, n, verdict) in enumerate(map_tasks(worker, lines, jobs, deterministic, chunksize), start=1):
        report.record(graph6, n, verdict)
        if count % PROGRESS_EVERY == 0:
            logger.info('%s: %d graphs checked, %d counterexamples', theorem.identifier, count, len(report.counterexamples))
    logger.info('%s: done, counts %s, %d disconnected skipped', theorem.identifier, report.counts, report.skipped)
    return report
