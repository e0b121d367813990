"""
Independence numbers.

:py:func:`alpha_bruteforce` is an exact branch and bound over adjacency
bitsets. Fat structures have a closed form (:py:func:`alpha_fat`), and
:py:func:`alpha_B11free` dispatches connected {K1,3, B1,1}-free graphs:
those containing an induced P5 are fat structures with parameter at least
5, all others go to the branch and bound.
"""

import logging
from enum import Enum
from typing import FrozenSet

from attr import attrs, attrib

from .exceptions import PreconditionError, TheoremViolation
from .graph import iter_bits, is_connected, mask_of, popcount
from .patterns import PatternSpec, contains, is_free
from .structures import FatKind, build_fat, format_description, host_map, recognize_fat

logger = logging.getLogger(__name__)

B11_FREE_FAMILY = (PatternSpec.claw(), PatternSpec.b(1, 1))


class AlphaMethod(Enum):
    BRUTEFORCE = 'bruteforce'
    FAT_FORMULA = 'fat_formula'
    DISPATCHER = 'dispatcher'


@attrs(frozen=True)
class AlphaResult(object):
    #: The independence number.
    alpha = attrib(type=int)
    #: A maximum independent set.
    witness = attrib(type=FrozenSet[int], converter=frozenset)
    method = attrib(type=AlphaMethod)

    def to_json(self):
        return {'alpha': self.alpha, 'witness': sorted(self.witness), 'method': self.method.value}


def _verified(g, result):
    mask = mask_of(result.witness)
    if popcount(mask) != result.alpha or not g.is_independent(mask):
        raise TheoremViolation('Witness %r is not an independent set of order %d' % (sorted(result.witness), result.alpha))
    return result

def _max_independent_mask(g):
    closed = [nbrs | 1 << v for v, nbrs in enumerate(g.adj)]
    best = [0, 0]

    def branch(mask, chosen, size):
        if size + popcount(mask) <= best[0]:
            return
        if not mask:
            best[0], best[1] = size, chosen
            return
        # a maximal independent set meets N[v]; branch on v of least degree
        v = min(iter_bits(mask), key=lambda u: popcount(g.adj[u] & mask))
        for u in iter_bits(closed[v] & mask):
            branch(mask & ~closed[u], chosen | 1 << u, size + 1)

    branch(g.vertex_mask, 0, 0)
    return best[1]

def alpha_bruteforce(g, method=AlphaMethod.BRUTEFORCE):
    # type: (Graph) -> AlphaResult
    """
    Exact independence number; meant for graphs with up to a few dozen
    vertices.
    """
    mask = _max_independent_mask(g)
    return _verified(g, AlphaResult(popcount(mask), iter_bits(mask), method))

def alpha_fat(d):
    # type: (FatDescription) -> AlphaResult
    """
    At most one vertex per fundamental clique and none in consecutive
    cliques: ceil(l/2) for a fat path with l cliques, floor(c/2) for a fat
    cycle with c cliques. The witness takes the first vertex of every
    second clique, in host numbering when `d` comes from recognition.
    """
    blocks = d.layout()
    count = len(blocks)
    picked = count // 2 if d.kind == FatKind.CYCLE else (count + 1) // 2
    witness = [blocks[2 * i][0] for i in range(picked)]
    result = _verified(build_fat(d), AlphaResult(picked, witness, AlphaMethod.FAT_FORMULA))
    mapping = host_map(d)
    if mapping is None:
        return result
    return AlphaResult(result.alpha, [mapping[v] for v in result.witness], result.method)

def alpha_B11free(g):
    # type: (Graph) -> AlphaResult
    """
    :raises PreconditionError: if g is empty, disconnected or not {K1,3, B1,1}-free
    :raises TheoremViolation: if g contains an induced P5 but is not a fat
        structure with parameter at least 5
    """
    if g.n == 0 or not is_connected(g):
        raise PreconditionError('alpha_B11free needs a connected graph')
    free = is_free(g, B11_FREE_FAMILY)
    if not free:
        raise PreconditionError('Graph contains %s' % free.pattern.name)
    if contains(g, PatternSpec.path(5)):
        d = recognize_fat(g, 5)
        if d is None:
            raise TheoremViolation('{K1,3, B1,1}-free graph with an induced P5 is not in P(5)')
        logger.debug('alpha via %s', format_description(d))
        return _verified(g, alpha_fat(d))
    return alpha_bruteforce(g, method=AlphaMethod.DISPATCHER)
