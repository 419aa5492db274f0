"""Constructive combinatorial searches: sunflowers, monochromatic cliques,
bipartite pattern extraction, and path-or-high-degree witnesses.

Every return value is a checkable witness; the classical counting bounds
only promise when a witness must exist, never how it is found.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .caps import Caps, DEFAULT_CAPS
from .errors import InputError, ResourceLimitError
from .graphs import Graph, ProductKind, connected_components


@dataclass(frozen=True)
class Sunflower:
    """Family members whose pairwise intersections all equal the core."""

    members: tuple[tuple[int, ...], ...]
    core: tuple[int, ...]

    def petal_count(self) -> int:
        return len(self.members)


def is_sunflower(members: Sequence[Iterable[int]], core: Iterable[int]) -> bool:
    sets = [frozenset(m) for m in members]
    c = frozenset(core)
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j] != c:
                return False
    return all(c <= s for s in sets)


def sunflower_threshold(k: int, p: int) -> int:
    """Families of k-sets larger than this always contain a p-sunflower."""
    import math
    return math.factorial(k) * (p - 1) ** k


def find_sunflower(family: Sequence[Iterable[int]], p: int) -> Sunflower | None:
    """Greedy core-growing search for a sunflower with >= p petals.

    Repeatedly: collect pairwise-disjoint members in input order; if fewer
    than p, recurse on the subfamily through the most frequent element
    (ties to the least element), growing the core.  Guaranteed to succeed
    when the (deduplicated) family exceeds k!(p-1)^k.
    """
    if p < 1:
        raise InputError("petal count must be at least 1")
    sets = []
    size = None
    for s in family:
        fs = frozenset(s)
        if size is None:
            size = len(fs)
            if size < 1:
                raise InputError("family sets must be nonempty")
        elif len(fs) != size:
            raise InputError("family sets must all have the same size")
        sets.append(fs)

    seen: set[frozenset] = set()
    items = []
    for fs in sets:
        if fs not in seen:
            seen.add(fs)
            items.append(fs)

    found = _sunflower_rec(items, p, frozenset())
    if found is None:
        return None
    members, core = found
    result = Sunflower(tuple(tuple(sorted(m)) for m in members),
                       tuple(sorted(core)))
    assert is_sunflower(result.members, result.core)
    return result


def _sunflower_rec(items: list[frozenset], p: int, core: frozenset):
    picked: list[frozenset] = []
    occupied: set = set()
    for s in items:
        if not (s & occupied):
            picked.append(s)
            occupied |= s
            if len(picked) == p:
                return [m | core for m in picked], core
    counts: Counter = Counter()
    for s in items:
        counts.update(s)
    if not counts:
        return None
    best = min(counts, key=lambda x: (-counts[x], x))
    deduped: list[frozenset] = []
    seen: set[frozenset] = set()
    for s in items:
        if best in s:
            rest = s - {best}
            if rest not in seen:
                seen.add(rest)
                deduped.append(rest)
    if not deduped or len(deduped[0]) == 0:
        # singleton remainders cannot supply p distinct petals
        return None
    return _sunflower_rec(deduped, p, core | {best})


def normalize_coloring(colors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Accept a full symmetric matrix or an upper-triangle row list."""
    m = len(colors)
    if m and all(len(row) == m for row in colors):
        for i in range(m):
            for j in range(i + 1, m):
                if colors[i][j] != colors[j][i]:
                    raise InputError(f"coloring not symmetric at ({i},{j})")
        return [list(row) for row in colors]
    # upper triangle: row i lists colors of (i, i+1..m)
    n = m + 1
    full = [[0] * n for _ in range(n)]
    for i, row in enumerate(colors):
        if len(row) != n - i - 1:
            raise InputError(f"upper-triangle row {i} has wrong length")
        for k, c in enumerate(row):
            j = i + 1 + k
            full[i][j] = full[j][i] = c
    return full


def monochromatic_subset(colors: Sequence[Sequence[int]], n: int
                         ) -> tuple[int, ...] | None:
    """n vertices of an edge-colored complete graph, all edges one color.

    Backtracking per color, colors and vertices ascending, so the returned
    subset is deterministic.
    """
    if n < 1:
        raise InputError("target size must be at least 1")
    matrix = normalize_coloring(colors)
    m = len(matrix)
    if n == 1:
        return (0,) if m >= 1 else None
    if n > m:
        return None
    palette = sorted({matrix[i][j] for i in range(m) for j in range(i + 1, m)})
    for color in palette:
        chosen: list[int] = []

        def extend(start: int) -> bool:
            if len(chosen) == n:
                return True
            for v in range(start, m):
                if all(matrix[u][v] == color for u in chosen):
                    chosen.append(v)
                    if extend(v + 1):
                        return True
                    chosen.pop()
            return False

        if extend(0):
            return tuple(chosen)
    return None


def _cross_ok(kind: ProductKind, i: int, j: int) -> bool:
    if kind is ProductKind.MATCH:
        return i == j
    if kind is ProductKind.ANTIMATCH:
        return i != j
    return i >= j


def bipartite_pattern(g: Graph, side_s: Iterable[int], side_t: Iterable[int],
                      n: int, caps: Caps = DEFAULT_CAPS
                      ) -> tuple[tuple[int, ...], tuple[int, ...], ProductKind] | None:
    """Ordered n-subsets of S and T whose cross edges form a matching,
    half graph, or anti-matching; None if no pattern of size n exists.

    The returned orderings are the witness: entry i of S' relates to entry
    j of T' exactly per the returned kind.
    """
    s_pool = sorted(set(side_s))
    t_pool = sorted(set(side_t))
    if set(s_pool) & set(t_pool):
        raise InputError("pattern sides must be disjoint")
    for v in s_pool + t_pool:
        g._check_vertex(v)
    if n < 1:
        raise InputError("pattern size must be at least 1")
    budget = [caps.pattern_nodes]

    for kind in (ProductKind.MATCH, ProductKind.HALF, ProductKind.ANTIMATCH):
        res = _pattern_search(g, s_pool, t_pool, n, kind, budget)
        if res is not None:
            return res[0], res[1], kind
    return None


def _pattern_search(g: Graph, s_pool: list[int], t_pool: list[int], n: int,
                    kind: ProductKind, budget: list[int]):
    chosen_s: list[int] = []
    chosen_t: list[int] = []

    def consistent(s_new: int, t_new: int) -> bool:
        i = len(chosen_s)
        if g.has_edge(s_new, t_new) != _cross_ok(kind, i, i):
            return False
        for j in range(i):
            if g.has_edge(s_new, chosen_t[j]) != _cross_ok(kind, i, j):
                return False
            if g.has_edge(chosen_s[j], t_new) != _cross_ok(kind, j, i):
                return False
        return True

    def extend() -> bool:
        if len(chosen_s) == n:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimitError("bipartite pattern search budget exhausted")
        for s in s_pool:
            if s in chosen_s:
                continue
            for t in t_pool:
                if t in chosen_t:
                    continue
                if consistent(s, t):
                    chosen_s.append(s)
                    chosen_t.append(t)
                    if extend():
                        return True
                    chosen_s.pop()
                    chosen_t.pop()
        return False

    if extend():
        return tuple(chosen_s), tuple(chosen_t)
    return None


def path_or_high_degree(g: Graph, k: int, l: int):
    """A vertex of degree >= k, or an induced path on l vertices.

    Returns ("degree", v) or ("path", vertices) or None; a witness is
    guaranteed whenever |V| >= (k-1)(k-2)^(l-2)/(k-3).
    """
    if k <= 3:
        raise InputError("degree target must exceed 3")
    if l < 1:
        raise InputError("path target must be positive")
    if g.n == 0 or len(connected_components(g)) != 1:
        raise InputError("graph must be connected and nonempty")

    for v in range(g.n):
        if g.degree(v) >= k:
            return ("degree", v)

    if l == 1:
        return ("path", (0,))

    path: list[int] = []
    path_mask = [0]

    def extend() -> bool:
        if len(path) == l:
            return True
        last = path[-1]
        for u in range(g.n):
            bit = 1 << u
            if path_mask[0] & bit:
                continue
            if not g.has_edge(last, u):
                continue
            if g.neighbors_mask(u) & path_mask[0] & ~(1 << last):
                continue
            path.append(u)
            path_mask[0] |= bit
            if extend():
                return True
            path.pop()
            path_mask[0] &= ~bit
        return False

    for start in range(g.n):
        path = [start]
        path_mask[0] = 1 << start
        if extend():
            return ("path", tuple(path))
    return None
