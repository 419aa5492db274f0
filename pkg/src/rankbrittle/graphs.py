"""Immutable bit-packed graphs, standard families, and pairing products.

Adjacency rows are Python ints used as bitsets, so every set operation and
the GF(2) elimination downstream is word-parallel.  Vertices are always
0..n-1; ``labels`` optionally tags vertices with their identity in some
parent graph and never affects adjacency semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import InputError


class ProductKind(Enum):
    """Cross-edge rule of a two-sided product: v_i ~ w_j iff ..."""

    MATCH = "match"          # i == j
    ANTIMATCH = "antimatch"  # i != j
    HALF = "half"            # i >= j


@dataclass(frozen=True)
class LinkMatrix:
    """2x2 0-1 matrix controlling inter-copy edges of a blown product.

    Read from the lower-index copy to the higher-index copy:
    a = top->top, b = top->bottom, c = bottom->top, d = bottom->bottom.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            if getattr(self, name) not in (0, 1):
                raise InputError(f"link matrix entry {name} must be 0 or 1")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


LINK_ZERO = LinkMatrix(0, 0, 0, 0)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset rows."""

    n: int
    rows: tuple[int, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise InputError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise InputError(f"row {i} has bits outside 0..n-1")
            if (r >> i) & 1:
                raise InputError(f"self-loop at vertex {i}")
        for i in range(self.n):
            ri = self.rows[i]
            for j in range(i + 1, self.n):
                if ((ri >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise InputError(f"adjacency not symmetric at ({i},{j})")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("label count does not match vertex count")

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.neighbors_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def label_of(self, v: int):
        self._check_vertex(v)
        return v if self.labels is None else self.labels[v]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not (0 <= v < self.n):
            raise InputError(f"vertex {v!r} out of range 0..{self.n - 1}")

    # -- derived graphs ------------------------------------------------

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on ``keep`` (order preserved, no duplicates)."""
        keep = list(keep)
        if len(set(keep)) != len(keep):
            raise InputError("induced subgraph vertices must be distinct")
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v, i in pos.items():
            r = self.rows[v]
            acc = 0
            for w, j in pos.items():
                if (r >> w) & 1:
                    acc |= 1 << j
            rows[i] = acc
        labels = tuple(self.label_of(v) for v in keep)
        return Graph(len(keep), tuple(rows), labels)


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(n: int, vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection, validating the 0..n-1 range."""
    m = 0
    for v in vertices:
        if not isinstance(v, int) or not (0 <= v < n):
            raise InputError(f"vertex {v!r} out of range 0..{n - 1}")
        m |= 1 << v
    return m


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]],
                     labels: Sequence | None = None) -> Graph:
    """Build a graph from an explicit edge collection."""
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n) or not (0 <= v < n):
            raise InputError(f"edge {e} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def complement(g: Graph) -> Graph:
    """Invert the edge set off the diagonal; labels are preserved."""
    full = g.full_mask
    rows = tuple((~r & full & ~(1 << i)) for i, r in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; block i keeps its internal vertex order."""
    n = sum(g.n for g in graphs)
    rows = []
    shift = 0
    for g in graphs:
        rows.extend(r << shift for r in g.rows)
        shift += g.n
    return Graph(n, tuple(rows))


FAMILY_NAMES = ("path", "complete", "edgeless", "star", "subdivided_star",
                "copies")


def make_family(name: str, *params) -> Graph:
    """Construct a named family with its canonical labeling.

    path(n): 0-1-...-(n-1).  complete(n), edgeless(n).  star(k): center 0,
    k leaves.  subdivided_star(n): center 0, middles 1..n, leaves n+1..2n
    with middle i matched to leaf n+i.  copies(t, H): t blocks of H in order.
    """
    if name == "copies":
        if len(params) != 2 or not isinstance(params[1], Graph):
            raise InputError("copies expects (count, Graph)")
        t, h = params
        _check_positive(t, "copy count")
        return disjoint_union([h] * t)

    if len(params) != 1:
        raise InputError(f"family {name!r} expects one integer parameter")
    k = params[0]
    _check_positive(k, "family parameter")

    if name == "path":
        return graph_from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if name == "complete":
        return graph_from_edges(k, [(i, j) for i in range(k)
                                    for j in range(i + 1, k)])
    if name == "edgeless":
        return graph_from_edges(k, [])
    if name == "star":
        return graph_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "subdivided_star":
        edges = [(0, i) for i in range(1, k + 1)]
        edges += [(i, k + i) for i in range(1, k + 1)]
        return graph_from_edges(2 * k + 1, edges)
    raise InputError(f"unknown family {name!r}")


def _check_positive(k, what: str) -> None:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"{what} must be a positive integer, got {k!r}")


def _cross_edge(kind: ProductKind, i: int, j: int) -> bool:
    if kind is ProductKind.MATCH:
        return i == j
    if kind is ProductKind.ANTIMATCH:
        return i != j
    return i >= j


def product(g: Graph, h: Graph, kind: ProductKind) -> Graph:
    """Two-sided product on V(g) + V(h) with cross edges per ``kind``.

    g occupies 0..n-1, h occupies n..2n-1, both in canonical order.
    """
    if g.n != h.n:
        raise InputError("product sides must have equal vertex counts")
    n = g.n
    edges = g.edges()
    edges += [(n + u, n + v) for u, v in h.edges()]
    for i in range(n):
        for j in range(n):
            if _cross_edge(kind, i, j):
                edges.append((i, n + j))
    return graph_from_edges(2 * n, edges)


def blown_product(g: Graph, h: Graph, kind: ProductKind, t: int,
                  link: LinkMatrix | tuple[int, int, int, int]) -> Graph:
    """t copies of product(g, h, kind) linked per the 2x2 matrix.

    Copy k occupies the contiguous block [2nk, 2n(k+1)): g-part first.
    For copies i < j the four matrix entries decide completeness between
    (g_i,g_j), (g_i,h_j), (h_i,g_j), (h_i,h_j).
    """
    if not isinstance(link, LinkMatrix):
        link = LinkMatrix(*link)
    if g.n != h.n:
        raise InputError("blown product sides must have equal vertex counts")
    _check_positive(t, "copy count")
    n = g.n
    base = product(g, h, kind)
    edges = []
    for k in range(t):
        off = 2 * n * k
        edges += [(off + u, off + v) for u, v in base.edges()]
    for i in range(t):
        for j in range(i + 1, t):
            oi, oj = 2 * n * i, 2 * n * j
            for u in range(n):
                for v in range(n):
                    if link.a:
                        edges.append((oi + u, oj + v))
                    if link.b:
                        edges.append((oi + u, oj + n + v))
                    if link.c:
                        edges.append((oi + n + u, oj + v))
                    if link.d:
                        edges.append((oi + n + u, oj + n + v))
    return graph_from_edges(2 * n * t, edges)


def are_twins(g: Graph, v: int, w: int) -> bool:
    """True iff v and w have equal neighborhoods outside the pair."""
    g._check_vertex(v)
    g._check_vertex(w)
    out = ~((1 << v) | (1 << w))
    return (g.rows[v] & out) == (g.rows[w] & out)


def twin_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition of V into maximal twin classes, sorted by least element.

    Each class is verified to induce a clique or an independent set.
    """
    assigned = [False] * g.n
    classes = []
    for v in range(g.n):
        if assigned[v]:
            continue
        cls = [v]
        assigned[v] = True
        for w in range(v + 1, g.n):
            if not assigned[w] and are_twins(g, v, w):
                cls.append(w)
                assigned[w] = True
        classes.append(tuple(cls))
    for cls in classes:
        flags = {g.has_edge(u, w) for i, u in enumerate(cls)
                 for w in cls[i + 1:]}
        if len(flags) > 1:
            raise InputError("twin class is neither clique nor independent")
    return tuple(classes)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(tuple(bits(comp)))
    return comps


def to_edgelist_text(g: Graph) -> str:
    """Serialize as the plain text format: n, then one 'u v' per line."""
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str) -> Graph:
    """Parse the edge-list text format."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty edge-list text")
    try:
        n = int(lines[0])
    except ValueError:
        raise InputError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"non-integer endpoint in {ln!r}")
    return graph_from_edges(n, edges)
