"""Bit-exact graph6 codec (short form, n <= 62).

The encoding packs the upper triangle of the adjacency matrix in column
order x(0,1), x(0,2), x(1,2), x(0,3), ... into big-endian 6-bit groups,
each printed as the byte value + 63.  Long-form length prefixes are
rejected rather than silently misread.
"""

from __future__ import annotations

from .errors import FormatError, InputError
from .graphs import Graph

_MAX_SHORT_N = 62


def encode(g: Graph) -> str:
    if g.n > _MAX_SHORT_N:
        raise InputError(f"graph6 short form supports n <= {_MAX_SHORT_N}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    if not text:
        raise FormatError("empty graph6 string", offset=0)
    data = text.encode("ascii", errors="replace")
    first = data[0]
    if first == 126:
        raise FormatError("long-form length prefix is not supported", offset=0)
    if not (63 <= first <= 63 + _MAX_SHORT_N):
        raise FormatError(f"invalid size byte {chr(first)!r}", offset=0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) != 1 + nbytes:
        raise FormatError(
            f"expected {1 + nbytes} bytes for n={n}, got {len(data)}",
            offset=min(len(data), 1 + nbytes))
    rows = [0] * n
    bit_index = 0
    for k in range(nbytes):
        byte = data[1 + k]
        if not (63 <= byte <= 126):
            raise FormatError(f"byte {chr(byte)!r} outside graph6 range",
                              offset=1 + k)
        group = byte - 63
        for b in range(5, -1, -1):
            bit = (group >> b) & 1
            if bit_index < nbits:
                i, j = _bit_position(bit_index)
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise FormatError("nonzero padding bit", offset=1 + k)
            bit_index += 1
    return Graph(n, tuple(rows))


def _bit_position(index: int) -> tuple[int, int]:
    # index counts through columns j = 1, 2, ... with j entries ... j-1 rows.
    j = 1
    while index >= j:
        index -= j
        j += 1
    return index, j
