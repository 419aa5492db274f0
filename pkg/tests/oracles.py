"""Independent reference implementations used to check the package.

Everything here avoids the package's bitset kernels on purpose: dense
list-of-lists elimination, permutation search, and dict-of-sets graphs.
"""

from __future__ import annotations

import itertools

from rankbrittle.graphs import Graph


def dense_cut_rank(g: Graph, side: set[int]) -> int:
    """Textbook Gaussian elimination on the side x complement 0-1 matrix."""
    rows_idx = sorted(side)
    cols_idx = [v for v in range(g.n) if v not in side]
    matrix = [[1 if g.has_edge(r, c) else 0 for c in cols_idx]
              for r in rows_idx]
    rank = 0
    col = 0
    nrows = len(matrix)
    ncols = len(cols_idx)
    while rank < nrows and col < ncols:
        pivot = None
        for r in range(rank, nrows):
            if matrix[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for r in range(nrows):
            if r != rank and matrix[r][col]:
                matrix[r] = [(a + b) % 2
                             for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        col += 1
    return rank


def perm_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive permutation search."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    ge = {frozenset(e) for e in g.edges()}
    he = {frozenset(e) for e in h.edges()}
    for p in itertools.permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in he for u, v in ge):
            return True
    return False


def perm_lrw(g: Graph) -> int:
    """Minimum layout width over all vertex orderings, dense ranks."""
    if g.n <= 1:
        return 0
    best = None
    for order in itertools.permutations(range(g.n)):
        width = 0
        prefix: set[int] = set()
        for v in order[:-1]:
            prefix.add(v)
            width = max(width, dense_cut_rank(g, prefix))
            if best is not None and width >= best:
                break
        if best is None or width < best:
            best = width
    return best


def literal_decomposition_width(g: Graph, dec) -> int:
    """Width per the component-partition reading: each internal node's
    partition includes the outside part, and all unions count."""
    from rankbrittle.decomposition import leaf_mask

    def masks_to_sets(masks):
        return [{v for v in range(g.n) if (m >> v) & 1} for m in masks]

    widest = 0
    for node in dec.internal_nodes():
        parts = [leaf_mask(c) for c in node]
        outside = ((1 << g.n) - 1) & ~sum(parts)
        if outside:
            parts.append(outside)
        sets = masks_to_sets(parts)
        for pick in range(1, 1 << len(sets)):
            union: set[int] = set()
            for i, s in enumerate(sets):
                if (pick >> i) & 1:
                    union |= s
            if len(union) == g.n:
                continue
            widest = max(widest, dense_cut_rank(g, union))
    return widest


def longest_induced_path_length(g: Graph) -> int:
    """Exhaustive DFS for the longest induced path."""
    best = 0

    def extend(path_mask: int, last: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for u in range(g.n):
            if (path_mask >> u) & 1:
                continue
            if not g.has_edge(last, u):
                continue
            if g.neighbors_mask(u) & path_mask & ~(1 << last):
                continue
            extend(path_mask | (1 << u), u, length + 1)

    for start in range(g.n):
        extend(1 << start, start, 1)
    return best


def _oracle_lc(adj: dict[int, set[int]], v: int) -> dict[int, set[int]]:
    nb = sorted(adj[v])
    out = {u: set(s) for u, s in adj.items()}
    for i in range(len(nb)):
        for j in range(i + 1, len(nb)):
            x, y = nb[i], nb[j]
            if y in out[x]:
                out[x].discard(y)
                out[y].discard(x)
            else:
                out[x].add(y)
                out[y].add(x)
    return out


def _adj_key(adj: dict[int, set[int]], n: int):
    return tuple(tuple(sorted(adj[v])) for v in range(n))


def orbit_adjacencies(g: Graph) -> list[dict[int, set[int]]]:
    """Full closure under local complementation, dict-of-sets walk."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    seen = {_adj_key(adj, g.n)}
    frontier = [adj]
    out = [adj]
    while frontier:
        nxt = []
        for a in frontier:
            for v in range(g.n):
                b = _oracle_lc(a, v)
                k = _adj_key(b, g.n)
                if k not in seen:
                    seen.add(k)
                    nxt.append(b)
                    out.append(b)
        frontier = nxt
    return out


def oracle_has_vertex_minor(g: Graph, h: Graph) -> bool:
    """Full orbit, then every induced subgraph, then permutation matching."""
    he = {frozenset(e) for e in h.edges()}
    for adj in orbit_adjacencies(g):
        for sub in itertools.combinations(range(g.n), h.n):
            relab = {v: i for i, v in enumerate(sub)}
            edges = {frozenset((relab[u], relab[v]))
                     for u in sub for v in adj[u] & set(sub) if u < v}
            if len(edges) != len(he):
                continue
            for p in itertools.permutations(range(h.n)):
                if all(frozenset((p[u], p[v])) in he for u, v in edges):
                    break
            else:
                continue
            return True
    return False


def oracle_locally_equivalent(g: Graph, h: Graph) -> bool:
    return oracle_has_vertex_minor(g, h) if g.n == h.n else False


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def _subtree_options(verts: tuple[int, ...], depth: int):
    """All internal-node shapes over verts within the depth budget.

    Single-child chains are omitted: they only add width terms and waste
    depth, so the minimum over this space equals the full minimum.
    """
    if depth >= 1:
        yield tuple(verts)
    if depth >= 2 and len(verts) >= 2:
        for parts in _set_partitions(list(verts)):
            if len(parts) < 2:
                continue
            options_per_part = []
            for part in parts:
                if len(part) == 1:
                    options_per_part.append([part[0]])
                else:
                    options_per_part.append(
                        list(_subtree_options(tuple(sorted(part)), depth - 1)))
            for combo in itertools.product(*options_per_part):
                yield tuple(combo)


def oracle_min_width_at_radius(g: Graph, d: int) -> int:
    """Brute-force minimum decomposition width at radius <= d, evaluating
    every node with the literal component-partition rule."""
    from rankbrittle.decomposition import Decomposition

    assert g.n >= 2
    best = None
    for root in _subtree_options(tuple(range(g.n)), d):
        dec = Decomposition(g.n, root)
        width = literal_decomposition_width(g, dec)
        if best is None or width < best:
            best = width
    return best
