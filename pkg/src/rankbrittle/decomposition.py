"""Rooted radius-bounded decompositions of a vertex set.

A decomposition is a rooted hierarchy: a leaf is a vertex index, an
internal node is a tuple of children.  Leaves biject with V(G), the root
has at least two children, and every other internal node has at least one
(single-child chains are legal input, the solvers just never produce
them).  Rooting at a tree center makes depth the radius bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cutrank import CutRankTable, union_max_rank
from .errors import InputError
from .graphs import Graph

Node = int | tuple  # leaf = vertex index, internal = tuple of children


@dataclass(frozen=True)
class Decomposition:
    n: int
    root: tuple

    def __post_init__(self):
        if not isinstance(self.root, tuple):
            raise InputError("decomposition root must be an internal node")
        if len(self.root) < 2:
            raise InputError("decomposition root needs at least two children")
        seen: set[int] = set()
        stack: list[Node] = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, tuple):
                if len(node) == 0:
                    raise InputError("internal node with no children")
                stack.extend(node)
            elif isinstance(node, int):
                if not (0 <= node < self.n):
                    raise InputError(f"leaf {node} out of range 0..{self.n - 1}")
                if node in seen:
                    raise InputError(f"leaf {node} appears twice")
                seen.add(node)
            else:
                raise InputError(f"bad decomposition node {node!r}")
        if len(seen) != self.n:
            raise InputError("leaves do not cover all vertices")

    def depth(self) -> int:
        def d(node: Node) -> int:
            if isinstance(node, int):
                return 0
            return 1 + max(d(c) for c in node)
        return d(self.root)

    def internal_nodes(self) -> Iterator[tuple]:
        stack: list[Node] = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, tuple):
                yield node
                stack.extend(node)

    def leaves_in_dfs_order(self) -> tuple[int, ...]:
        out: list[int] = []

        def walk(node: Node) -> None:
            if isinstance(node, int):
                out.append(node)
            else:
                for child in node:
                    walk(child)

        walk(self.root)
        return tuple(out)

    def to_json(self) -> str:
        def conv(node: Node):
            return node if isinstance(node, int) else [conv(c) for c in node]
        return json.dumps(conv(self.root))

    @staticmethod
    def from_json(text: str, n: int) -> "Decomposition":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad decomposition JSON: {exc}")
        return Decomposition(n, _from_obj(data))

    @staticmethod
    def from_parts(n: int, parts: Sequence[Sequence[int]]) -> "Decomposition":
        """Radius-2 decomposition: one child per part, singletons as leaves.

        With a single part this degenerates to the radius-1 star.
        """
        norm = [tuple(sorted(p)) for p in parts]
        norm.sort(key=lambda p: p[0])
        if len(norm) == 1:
            return Decomposition(n, norm[0])
        children: list[Node] = []
        for p in norm:
            children.append(p[0] if len(p) == 1 else p)
        return Decomposition(n, tuple(children))

    @staticmethod
    def star(n: int) -> "Decomposition":
        return Decomposition(n, tuple(range(n)))


def _from_obj(obj) -> Node:
    if isinstance(obj, int):
        return obj
    if isinstance(obj, list):
        return tuple(_from_obj(c) for c in obj)
    raise InputError(f"bad decomposition JSON node {obj!r}")


def leaf_mask(node: Node) -> int:
    if isinstance(node, int):
        return 1 << node
    m = 0
    for child in node:
        m |= leaf_mask(child)
    return m


def node_width(g: Graph, node: tuple, table: CutRankTable | None = None,
               stop_at: int | None = None) -> int:
    """Width of one internal node.

    Evaluated as the max cut-rank over unions of child leaf sets only;
    unions involving the outside part have the same rank as their
    complement inside this node, so nothing is lost.
    """
    if table is None:
        table = CutRankTable(g)
    masks = [leaf_mask(c) for c in node]
    return union_max_rank(table, masks, stop_at=stop_at)


def decomposition_width(g: Graph, dec: Decomposition,
                        table: CutRankTable | None = None) -> int:
    """Maximum width over the internal nodes of the decomposition."""
    if dec.n != g.n:
        raise InputError("decomposition size does not match graph")
    if table is None:
        table = CutRankTable(g)
    return max(node_width(g, node, table) for node in dec.internal_nodes())
