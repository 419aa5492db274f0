"""GF(2) cut-rank over packed adjacency rows, with subset tables.

cut_rank(G, S) is the rank of the S x (V \\ S) adjacency submatrix over
the binary field.  Solvers hammer this in their inner loops, so ranks are
computed on int bitsets and memoized per subset mask.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InputError, ResourceLimitError
from .graphs import Graph, bits, mask_of

_UNION_ENUM_LIMIT = 22  # 2^22 unions per width evaluation before bailing


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of bitset rows over GF(2) via elimination on leading bits."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            top = cur.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = cur
                rank += 1
                break
            cur ^= piv
    return rank


def cut_rank(g: Graph, side: Iterable[int]) -> int:
    """Cut-rank of a vertex set, given as an iterable of vertices."""
    return cut_rank_mask(g, mask_of(g.n, side))


def cut_rank_mask(g: Graph, mask: int) -> int:
    comp = g.full_mask & ~mask
    return gf2_rank(g.rows[v] & comp for v in bits(mask))


class CutRankTable:
    """Memoized cut-rank over subset bitmasks of one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._memo: dict[int, int] = {0: 0, g.full_mask: 0}

    def __call__(self, mask: int) -> int:
        r = self._memo.get(mask)
        if r is None:
            r = cut_rank_mask(self.g, mask)
            self._memo[mask] = r
        return r

    def all_ranks(self) -> list[int]:
        """Dense table over all 2^n masks (intended for small n)."""
        g = self.g
        full = g.full_mask
        rows = g.rows
        out = [0] * (1 << g.n)
        for mask in range(1, full):
            comp = full & ~mask
            out[mask] = gf2_rank(rows[v] & comp for v in bits(mask))
        return out


def subset_max_table(values: Sequence[int], n: int) -> list[int]:
    """m[mask] = max of values over all submasks of mask (SOS maximum)."""
    m = list(values)
    for v in range(n):
        bit = 1 << v
        for mask in range(1 << n):
            if mask & bit:
                other = m[mask ^ bit]
                if other > m[mask]:
                    m[mask] = other
    return m


def validate_partition(n: int, parts: Sequence[Iterable[int]]) -> list[int]:
    """Check disjointness, coverage, nonemptiness; return part masks."""
    masks = []
    seen = 0
    for part in parts:
        m = mask_of(n, part)
        if m == 0:
            raise InputError("partition contains an empty part")
        if m & seen:
            raise InputError("partition parts are not disjoint")
        seen |= m
        masks.append(m)
    if seen != (1 << n) - 1:
        raise InputError("partition does not cover all vertices")
    return masks


def union_max_rank(table: CutRankTable, masks: Sequence[int],
                   stop_at: int | None = None) -> int:
    """Max cut-rank over all unions of the given parts.

    Early-exits as soon as the running max reaches ``stop_at``; the return
    value is then only guaranteed to be >= stop_at.
    """
    m = len(masks)
    if m > _UNION_ENUM_LIMIT:
        raise ResourceLimitError(
            f"refusing to enumerate 2^{m} part unions (limit 2^{_UNION_ENUM_LIMIT})")
    unions = [0] * (1 << m)
    best = 0
    for i in range(1, 1 << m):
        low = i & -i
        u = unions[i ^ low] | masks[low.bit_length() - 1]
        unions[i] = u
        r = table(u)
        if r > best:
            best = r
            if stop_at is not None and best >= stop_at:
                return best
    return best


def rho_width(g: Graph, parts: Sequence[Iterable[int]]) -> int:
    """Exact max cut-rank over all 2^m unions of partition parts."""
    masks = validate_partition(g.n, parts)
    return union_max_rank(CutRankTable(g), masks)
