"""
Reading and writing the graph6 interchange format.

Every graph6 line starts with the encoded order N(n) followed by the upper
triangle of the adjacency matrix, column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...), packed big-endian into groups of six bits. Each group is
stored as one printable byte by adding 63.
"""

import logging

from .exceptions import Graph6Error
from .graph import Graph

logger = logging.getLogger(__name__)

HEADER = '>>graph6<<'
BIAS = 63
MAX_BYTE = 126
SHORT_LIMIT = 62
MEDIUM_LIMIT = 258047
LONG_LIMIT = 68719476735


def _check_char(line, offset):
    code = ord(line[offset])
    if not BIAS <= code <= MAX_BYTE:
        raise Graph6Error('Character %r outside the graph6 range 63..126' % line[offset], offset)
    return code - BIAS

def _read_groups(line, start, count):
    value = 0
    for offset in range(start, start + count):
        if offset >= len(line):
            raise Graph6Error('Truncated vertex count', offset)
        value = value << 6 | _check_char(line, offset)
    return value

def _decode_order(line):
    """ returns (n, offset of the first edge byte) """
    if not line:
        raise Graph6Error('Empty graph6 line', 0)
    first = _check_char(line, 0)
    if first < MAX_BYTE - BIAS:
        return first, 1
    if len(line) > 1 and ord(line[1]) == MAX_BYTE:
        return _read_groups(line, 2, 6), 8
    return _read_groups(line, 1, 3), 4

def _encode_order(n):
    if n <= SHORT_LIMIT:
        return chr(n + BIAS)
    if n <= MEDIUM_LIMIT:
        return chr(MAX_BYTE) + ''.join(chr((n >> shift & 0x3f) + BIAS) for shift in (12, 6, 0))
    if n <= LONG_LIMIT:
        return chr(MAX_BYTE) * 2 + ''.join(chr((n >> shift & 0x3f) + BIAS) for shift in (30, 24, 18, 12, 6, 0))
    raise ValueError('Order %d too large for graph6' % n)

def parse_graph6(text):
    """
    Parse a single graph6 line into a :py:class:`Graph`.

    :param str text: The line, optionally prefixed by ``>>graph6<<`` and
        followed by a line break. Bytes are decoded as ASCII.
    :raises Graph6Error: if the line is malformed. The exception names the
        byte offset of the problem.
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    line = text.rstrip('\r\n')
    shift = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        shift = len(HEADER)
    try:
        n, start = _decode_order(line)
        pairs = n * (n - 1) // 2
        needed = (pairs + 5) // 6
        if len(line) - start != needed:
            offset = min(len(line), start + needed)
            raise Graph6Error('Expected %d edge bytes for n=%d, found %d' % (needed, n, len(line) - start), offset)
        adj = [0] * n
        bit = 0
        for offset in range(start, start + needed):
            group = _check_char(line, offset)
            for k in range(5, -1, -1):
                if group >> k & 1:
                    if bit >= pairs:
                        raise Graph6Error('Non-zero padding bits', offset)
                    # column-major upper triangle: bit index -> (i, j)
                    j = _column_of(bit)
                    i = bit - j * (j - 1) // 2
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
    except Graph6Error as e:
        e.offset += shift
        raise
    return Graph(n, adj)

def _column_of(bit):
    """ the column j with j(j-1)/2 <= bit < j(j+1)/2 """
    j = int(((8 * bit + 1) ** 0.5 + 1) / 2)
    while j * (j - 1) // 2 > bit:
        j -= 1
    while j * (j + 1) // 2 <= bit:
        j += 1
    return j

def write_graph6(g, header=False):
    """ byte exact graph6 encoding of `g`, without line break """
    bits = []
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            bits.append(column >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for pos in range(0, len(bits), 6):
        value = 0
        for b in bits[pos:pos + 6]:
            value = value << 1 | b
        body.append(chr(value + BIAS))
    return (HEADER if header else '') + _encode_order(g.n) + ''.join(body)

def iter_graph6(stream):
    """
    Yield the graphs of a graph6 line stream. Blank lines are skipped and
    parse errors are re-raised with the 1-based line number attached.
    """
    for number, line in enumerate(stream, start=1):
        if isinstance(line, bytes):
            line = line.decode('ascii', errors='replace')
        if not line.strip():
            continue
        try:
            yield parse_graph6(line.strip())
        except Graph6Error as e:
            e.line = number
            logger.debug('graph6 error on line %d: %s', number, e.problem)
            raise
