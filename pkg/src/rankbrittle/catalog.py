"""Desk-scale graph catalogs: exhaustive enumeration up to isomorphism
(by canonical augmentation) and seeded random graphs.

Canonical keys minimize the packed upper triangle over all vertex
permutations, vectorized with numpy; intended for n <= 8.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import InputError
from .graphs import Graph, graph_from_edges

_MAX_ENUM_N = 8


@lru_cache(maxsize=None)
def _perm_index_arrays(n: int):
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    iu = np.triu_indices(n, k=1)
    weights = (1 << np.arange(iu[0].size, dtype=np.int64))
    return perms, iu, weights


def canonical_key(g: Graph) -> int:
    """Min over all permutations of the packed upper-triangle integer."""
    n = g.n
    if n > _MAX_ENUM_N:
        raise InputError(f"canonical keys supported for n <= {_MAX_ENUM_N}")
    if n <= 1:
        return 0
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        row = g.rows[i]
        for j in range(n):
            adj[i, j] = (row >> j) & 1
    perms, iu, weights = _perm_index_arrays(n)
    permuted = adj[perms[:, :, None], perms[:, None, :]]
    bits = permuted[:, iu[0], iu[1]]
    return int((bits * weights).sum(axis=1).min())


def _graph_from_key(n: int, key: int) -> Graph:
    # key packs entries in np.triu_indices order: (0,1),(0,2),...,(0,n-1),(1,2),...
    edges = []
    iu_r, iu_c = np.triu_indices(n, k=1)
    for pos in range(iu_r.size):
        if (key >> pos) & 1:
            edges.append((int(iu_r[pos]), int(iu_c[pos])))
    return graph_from_edges(n, edges)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, by augmentation."""
    if n < 0 or n > _MAX_ENUM_N:
        raise InputError(f"enumeration supported for 0 <= n <= {_MAX_ENUM_N}")
    if n == 0:
        return (graph_from_edges(0, []),)
    if n == 1:
        return (graph_from_edges(1, []),)
    smaller = nonisomorphic_graphs(n - 1)
    keys: dict[int, None] = {}
    for g in smaller:
        base_edges = g.edges()
        for nbhd in range(1 << (n - 1)):
            edges = list(base_edges)
            for v in range(n - 1):
                if (nbhd >> v) & 1:
                    edges.append((v, n - 1))
            cand = graph_from_edges(n, edges)
            keys.setdefault(canonical_key(cand), None)
    return tuple(_graph_from_key(n, key) for key in sorted(keys))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Edge-independent random graph from a caller-owned RNG."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return graph_from_edges(n, edges)


def random_graph_uniform(n: int, rng: random.Random) -> Graph:
    return random_graph(n, 0.5, rng)
