"""Backtracking graph isomorphism with refinement pruning (desk scale).

Not a canonical-labeling tool: the search is exact for small graphs and
reports a resource error instead of a wrong answer when the node budget
runs out.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graphs import Graph

DEFAULT_NODE_LIMIT = 1_000_000


def are_isomorphic(g: Graph, h: Graph, *,
                   node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    return find_isomorphism(g, h, node_limit=node_limit) is not None


def find_isomorphism(g: Graph, h: Graph, *,
                     node_limit: int = DEFAULT_NODE_LIMIT
                     ) -> tuple[int, ...] | None:
    """Edge-preserving bijection g -> h as a tuple, or None.

    Deterministic: candidates are tried in ascending vertex order, so the
    returned bijection is the first in lexicographic order visited by the
    pruned search.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    if g.n == 0:
        return ()

    gcol, hcol = _joint_refine(g, h)
    if gcol is None:
        return None

    # Small color classes first; ties by vertex index for determinism.
    class_size = {}
    for c in gcol:
        class_size[c] = class_size.get(c, 0) + 1
    order = sorted(range(g.n), key=lambda v: (class_size[gcol[v]], v))

    h_by_color: dict[int, list[int]] = {}
    for w in range(h.n):
        h_by_color.setdefault(hcol[w], []).append(w)

    mapping = [-1] * g.n
    used = [False] * h.n
    nodes = [0]

    def backtrack(idx: int) -> bool:
        if idx == g.n:
            return True
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise ResourceLimitError("isomorphism search node limit exceeded")
        v = order[idx]
        vrow = g.rows[v]
        for w in h_by_color.get(gcol[v], ()):
            if used[w]:
                continue
            ok = True
            for prev in order[:idx]:
                if ((vrow >> prev) & 1) != ((h.rows[w] >> mapping[prev]) & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if backtrack(idx + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if backtrack(0):
        return tuple(mapping)
    return None


def _joint_refine(g: Graph, h: Graph):
    """Iterated degree refinement over both graphs with shared color ids.

    Returns (g_colors, h_colors) or (None, None) when the color histograms
    split the graphs apart.
    """
    gcol = list(g.degrees())
    hcol = list(h.degrees())
    ncolors = len(set(gcol) | set(hcol))
    for _ in range(g.n + 1):
        sigs_g = [(gcol[v], tuple(sorted(gcol[u] for u in g.neighbors(v))))
                  for v in range(g.n)]
        sigs_h = [(hcol[v], tuple(sorted(hcol[u] for u in h.neighbors(v))))
                  for v in range(h.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs_g) | set(sigs_h)))}
        gcol = [palette[s] for s in sigs_g]
        hcol = [palette[s] for s in sigs_h]
        if sorted(gcol) != sorted(hcol):
            return None, None
        if len(palette) == ncolors:
            break
        ncolors = len(palette)
    return gcol, hcol
