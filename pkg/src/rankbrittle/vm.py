"""Local complementation, orbit enumeration, and vertex-minor search.

Witness steps always reference vertices by their position in the graph
the witness is applied to; deletions never renumber mid-replay.  The
result of a replay is compacted, with ``labels`` recording the surviving
original identities.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .errors import InputError, ResourceLimitError, WitnessError
from .graphs import Graph, bits, twin_classes
from .isomorphism import find_isomorphism

LC = "lc"
DEL = "del"


@dataclass(frozen=True)
class VMWitness:
    """Replayable sequence of local complementations and deletions."""

    steps: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for step in self.steps:
            if len(step) != 2 or step[0] not in (LC, DEL):
                raise InputError(f"bad witness step {step!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def is_pure_lc(self) -> bool:
        return all(op == LC for op, _ in self.steps)

    def to_json(self) -> str:
        return json.dumps([{"op": op, "v": v} for op, v in self.steps])

    @staticmethod
    def from_json(text: str) -> "VMWitness":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad witness JSON: {exc}")
        if not isinstance(data, list):
            raise InputError("witness JSON must be a list of steps")
        steps = []
        for item in data:
            if not isinstance(item, dict) or set(item) != {"op", "v"}:
                raise InputError(f"bad witness step {item!r}")
            steps.append((item["op"], item["v"]))
        return VMWitness(tuple(steps))


def _lc_rows(rows: list[int], v: int, alive: int) -> None:
    """Complement the subgraph induced on the live neighbors of v."""
    nbrs = rows[v] & alive
    for x in bits(nbrs):
        rows[x] ^= nbrs & ~(1 << x)


def local_complement(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    rows = list(g.rows)
    _lc_rows(rows, v, g.full_mask)
    return Graph(g.n, tuple(rows), g.labels)


def pivot(g: Graph, u: int, v: int) -> Graph:
    """The composite G*u*v*u along an edge uv."""
    if not g.has_edge(u, v):
        raise InputError(f"pivot requires an edge, {u}-{v} is not one")
    return local_complement(local_complement(local_complement(g, u), v), u)


def apply_witness(g: Graph, witness: VMWitness) -> Graph:
    """Replay steps in order; the compacted result keeps original labels."""
    rows = list(g.rows)
    alive = g.full_mask
    for op, v in witness.steps:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise WitnessError(f"step references vertex {v!r} outside 0..{g.n - 1}")
        if not (alive >> v) & 1:
            raise WitnessError(f"step references deleted vertex {v}")
        if op == LC:
            _lc_rows(rows, v, alive)
        else:
            alive &= ~(1 << v)
    kept = list(bits(alive))
    pos = {v: i for i, v in enumerate(kept)}
    new_rows = [0] * len(kept)
    for v, i in pos.items():
        r = rows[v] & alive
        acc = 0
        for w in bits(r):
            acc |= 1 << pos[w]
        new_rows[i] = acc
    labels = tuple(g.label_of(v) for v in kept)
    return Graph(len(kept), tuple(new_rows), labels)


@dataclass
class OrbitResult:
    """BFS closure of a graph under single local complementations."""

    graphs: list[Graph]                 # discovery order; graphs[0] is the start
    steps: list[tuple[int, ...]]        # LC vertex sequence per graph
    complete: bool

    def witness_for(self, index: int) -> VMWitness:
        return VMWitness(tuple((LC, v) for v in self.steps[index]))


def local_orbit(g: Graph, cap: int = DEFAULT_CAPS.orbit) -> OrbitResult:
    """Closure of g under local complementation, deduplicated by labeled rows.

    Truncation at ``cap`` graphs is flagged, not an error.
    """
    if cap < 1:
        raise InputError("orbit cap must be at least 1")
    start = g.rows
    seen = {start: ()}
    order = [start]
    queue = deque([start])
    complete = True
    while queue:
        rows = queue.popleft()
        base_steps = seen[rows]
        work = list(rows)
        for v in range(g.n):
            _lc_rows(work, v, g.full_mask)
            cand = tuple(work)
            _lc_rows(work, v, g.full_mask)  # undo (involution)
            if cand not in seen:
                if len(order) >= cap:
                    complete = False
                    queue.clear()
                    break
                seen[cand] = base_steps + (v,)
                order.append(cand)
                queue.append(cand)
    graphs = [Graph(g.n, rows, g.labels) for rows in order]
    return OrbitResult(graphs, [seen[r] for r in order], complete)


@dataclass(frozen=True)
class LocalEquivalence:
    """Pure-LC witness plus the isomorphism onto the target."""

    witness: VMWitness
    isomorphism: tuple[int, ...]


def locally_equivalent(g: Graph, h: Graph,
                       caps: Caps = DEFAULT_CAPS) -> LocalEquivalence | None:
    """Search g's orbit for a graph isomorphic to h.

    Returns the witness found at minimal BFS depth (ties by ascending LC
    vertex), or None when the complete orbit misses h.  Raises a resource
    error if the orbit cap is hit first: the answer is then unknown.
    """
    if g.n != h.n:
        raise InputError("local equivalence requires equal vertex counts")
    target_deg = h.degree_sequence()
    target_edges = h.edge_count()

    start = g.rows
    seen = {start: ()}
    queue = deque([start])
    full = g.full_mask

    def matches(rows: tuple[int, ...]) -> tuple[int, ...] | None:
        if sum(r.bit_count() for r in rows) // 2 != target_edges:
            return None
        cand = Graph(g.n, rows)
        if cand.degree_sequence() != target_deg:
            return None
        return find_isomorphism(cand, h, node_limit=caps.iso_nodes)

    iso = matches(start)
    if iso is not None:
        return LocalEquivalence(VMWitness(()), iso)
    while queue:
        rows = queue.popleft()
        base_steps = seen[rows]
        work = list(rows)
        for v in range(g.n):
            _lc_rows(work, v, full)
            cand = tuple(work)
            _lc_rows(work, v, full)
            if cand in seen:
                continue
            if len(seen) >= caps.orbit:
                raise ResourceLimitError(
                    "orbit cap hit before local equivalence was resolved")
            seen[cand] = base_steps + (v,)
            iso = matches(cand)
            if iso is not None:
                steps = tuple((LC, u) for u in seen[cand])
                return LocalEquivalence(VMWitness(steps), iso)
            queue.append(cand)
    return None


def has_vertex_minor_isomorphic(g: Graph, h: Graph,
                                caps: Caps = DEFAULT_CAPS) -> VMWitness | None:
    """Witness turning g into a graph isomorphic to h, or None.

    Deletion order: candidate vertices by descending live degree with
    least-index ties; per candidate the three reductions delete-v,
    complement-then-delete, and pivot-on-least-neighbor-then-delete.
    """
    if h.n > g.n:
        raise InputError("target has more vertices than the host")
    budget = [caps.vm_nodes]
    seen: set[tuple] = set()
    indeterminate = [False]

    def compact(rows: tuple[int, ...], alive: int) -> tuple[Graph, list[int]]:
        kept = list(bits(alive))
        pos = {v: i for i, v in enumerate(kept)}
        out = []
        for v in kept:
            acc = 0
            for w in bits(rows[v] & alive):
                acc |= 1 << pos[w]
            out.append(acc)
        return Graph(len(kept), tuple(out)), kept

    def rec(rows: tuple[int, ...], alive: int):
        if alive.bit_count() == h.n:
            sub, kept = compact(rows, alive)
            try:
                eq = locally_equivalent(sub, h, caps)
            except ResourceLimitError:
                indeterminate[0] = True
                return None
            if eq is None:
                return None
            return [(LC, kept[v]) for _, v in eq.witness.steps]

        key = (tuple(r & alive if (alive >> i) & 1 else 0
                     for i, r in enumerate(rows)), alive)
        if key in seen:
            return None
        seen.add(key)
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimitError("vertex-minor search state budget exhausted")

        live = list(bits(alive))
        live.sort(key=lambda v: (-(rows[v] & alive).bit_count(), v))
        for v in live:
            bit = 1 << v
            # branch 1: delete v outright
            res = rec(rows, alive & ~bit)
            if res is not None:
                return [(DEL, v)] + res
            # branch 2: complement at v, then delete
            work = list(rows)
            _lc_rows(work, v, alive)
            res = rec(tuple(work), alive & ~bit)
            if res is not None:
                return [(LC, v), (DEL, v)] + res
            # branch 3: pivot on the least live neighbor, then delete
            nbrs = rows[v] & alive
            if nbrs:
                w = (nbrs & -nbrs).bit_length() - 1
                work = list(rows)
                _lc_rows(work, v, alive)
                _lc_rows(work, w, alive)
                _lc_rows(work, v, alive)
                res = rec(tuple(work), alive & ~bit)
                if res is not None:
                    return [(LC, v), (LC, w), (LC, v), (DEL, v)] + res
        return None

    steps = rec(g.rows, g.full_mask)
    if steps is not None:
        return VMWitness(tuple(steps))
    if indeterminate[0]:
        raise ResourceLimitError(
            "vertex-minor search hit an orbit cap; result indeterminate")
    return None


def reduce_triple_twin(g: Graph) -> Graph:
    """Delete members of twin classes of size >= 3 until none remain.

    Each round removes the least vertex of the class with the least
    minimum; labels track survivors.
    """
    current = g if g.labels is not None else Graph(g.n, g.rows, tuple(range(g.n)))
    while True:
        big = [cls for cls in twin_classes(current) if len(cls) >= 3]
        if not big:
            break
        victim = big[0][0]
        keep = [v for v in range(current.n) if v != victim]
        current = current.induced(keep)
    if g.labels is None and current.n == g.n:
        return g
    return current
