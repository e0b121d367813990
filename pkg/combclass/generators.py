"""
Randomized members of the characterized classes.

Every generator takes an explicit :py:class:`random.Random` so that runs
are reproducible from a seed.
"""

import logging

from .graph import Graph
from .hgraphs import h_graph
from .structures import CombDescription, FatDescription, FatKind, HExpansion
from .halin import FanCycleSystem

logger = logging.getLogger(__name__)

RANDOM_KINDS = ('comb', 'pointed-comb', 'h', 'fat', 'fat3')


def _spread(rng, budget, slots):
    """ split up to `budget` extra units at random over `slots` counters """
    extra = [0] * slots
    if slots:
        for _ in range(rng.randint(0, max(budget, 0))):
            extra[rng.randrange(slots)] += 1
    return extra

def random_comb(rng, max_order=10, pointed=False, min_root=1):
    """
    A random generalized comb with at most `max_order` vertices.

    :param int min_root: least root order (2 gives 2-connected combs,
        3 gives 3-connected pointed combs)
    """
    most = max_order // (min_root + 1)
    if most < 3:
        raise ValueError('max_order %d too small for combs with roots of order %d' % (max_order, min_root))
    m = rng.randint(3, most)
    budget = max_order - m * (min_root + 1)
    slots = m + 1 + (0 if pointed else m)
    extra = _spread(rng, budget, slots)
    roots = [min_root + extra[i] for i in range(m)]
    uncovered = extra[m]
    leaves = [1] * m if pointed else [1 + extra[m + 1 + i] for i in range(m)]
    return CombDescription(leaves, roots, sum(roots) + uncovered)

def random_h_expansion(rng, max_order=14):
    """ a random member of H_0 .. H_8 with at most `max_order` vertices """
    index = rng.randint(0, 8)
    if index == 0:
        return HExpansion(0, comb=random_comb(rng, max_order, pointed=True))
    h = h_graph(index)
    budget = max_order - len(h.labels)
    extra = _spread(rng, budget, len(h.expandable))
    return HExpansion(index, [1 + e for e in extra])

def random_three_connected_h(rng, index, max_order=14):
    """ a random 3-connected member of H_0, H_1, H_4, H_7 or H_8 """
    if index == 0:
        return HExpansion(0, comb=random_comb(rng, max_order, pointed=True, min_root=3))
    if index == 1:
        budget = max_order - 9
        extra = _spread(rng, budget, 3)
        return HExpansion(1, [3 + extra[0], 3 + extra[1], 1 + extra[2]])
    if index == 4:
        sizes = [2 + e for e in _spread(rng, max_order - 9, 3)]
        if rng.random() < 0.5:
            sizes[rng.randrange(3)] = 1
        return HExpansion(4, sizes)
    if index in (7, 8):
        return HExpansion(index)
    raise ValueError('H%d has no 3-connected members' % index)

def random_fat(rng, min_l=5, max_l=8, max_size=3, kind=None):
    """ a random fat path or fat cycle with parameter in min_l..max_l """
    if kind is None:
        kind = rng.choice((FatKind.PATH, FatKind.CYCLE))
    kind = FatKind(kind)
    l = rng.randint(min_l, max_l)
    count = l if kind == FatKind.PATH else l + 1
    return FatDescription(kind, [rng.randint(1, max_size) for _ in range(count)])

def random_three_connected_fat(rng, min_l=5, max_l=8, max_size=4, kind=None):
    """
    A random 3-connected fat structure: inner cliques of fat paths have
    order >= 3, fat cycles have at most two consecutive cliques of order 1.
    """
    if max_size < 3:
        raise ValueError('3-connected fat structures need max_size >= 3')
    if kind is None:
        kind = rng.choice((FatKind.PATH, FatKind.CYCLE))
    kind = FatKind(kind)
    l = rng.randint(min_l, max_l)
    if kind == FatKind.PATH:
        sizes = [rng.randint(1, max_size)] + [rng.randint(3, max_size) for _ in range(l - 2)] + [rng.randint(1, max_size)]
        return FatDescription(kind, sizes)
    sizes = [rng.randint(2, max_size) for _ in range(l + 1)]
    ones = rng.randint(0, 2)
    start = rng.randrange(l + 1)
    for i in range(ones):
        sizes[(start + i) % (l + 1)] = 1
    return FatDescription(kind, sizes)

def random_fan_cycle_system(rng, max_cycle=10, extra_edges=0.3):
    """
    A random graph together with a fan-cycle system of it. The cycle is
    0..k-1 in order, the apex is k and the attachments follow. Random
    chords are added with probability `extra_edges`.
    """
    while True:
        k = rng.randint(3, max_cycle)
        paths = []
        pos = 0
        while pos < k:
            left = k - pos
            if left >= 2 and rng.random() < 0.5:
                length = rng.randint(2, min(4, left))
                paths.append(list(range(pos, pos + length)))
                pos += length
            else:
                pos += 1
        covered = sum(len(path) for path in paths)
        if k - covered + len(paths) >= 3:
            break
    apex = k
    attach = list(range(k + 1, k + 1 + len(paths)))
    f = FanCycleSystem(list(range(k)), apex, paths, attach)
    n = k + 1 + len(paths)
    edges = set((i, (i + 1) % k) for i in range(k))
    edges.update((apex, w) for w in f.uncovered + attach)
    for x, path in zip(attach, paths):
        edges.update((x, u) for u in path)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_edges:
                edges.add((u, v))
    normalized = set((min(u, v), max(u, v)) for u, v in edges)
    return Graph.from_edges(n, sorted(normalized)), f

def random_member(rng, kind, max_order=14):
    """ a random description of the given kind, see RANDOM_KINDS """
    if kind == 'comb':
        return random_comb(rng, min(max_order, 10))
    if kind == 'pointed-comb':
        return random_comb(rng, min(max_order, 10), pointed=True)
    if kind == 'h':
        return random_h_expansion(rng, max_order)
    if kind == 'fat':
        return random_fat(rng)
    if kind == 'fat3':
        return random_three_connected_fat(rng)
    raise ValueError('Unknown kind %r, expected one of %s' % (kind, ', '.join(RANDOM_KINDS)))
