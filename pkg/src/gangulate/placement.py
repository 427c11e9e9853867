"""Placing abstract graphs on convex positions so the complement is g-angulable.

A placement maps every abstract vertex to a position 0..n-1 of the convex
n-gon; the placed edges become the forbidden set of an Instance and the
placement is only returned together with a validated witness.
"""

from __future__ import annotations

import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .convex import Edge, GAngulation, Instance, admissible_params, edge
from .errors import (
    InadmissibleParams,
    NotPotentiallyAngulable,
    ParseError,
    PlacementValidationError,
    PreconditionError,
    SizeCapExceeded,
)
from .oracle import exists_gangulation, find_gangulation, validate_gangulation


@dataclass(frozen=True)
class AbstractGraph:
    """Loopless multigraph on vertices 0..n-1; edges kept as a sorted multiset."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {(u, v)} out of range for {self.n} vertices")
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            norm.append(edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def neighbours(self, v: int) -> list[int]:
        """Neighbours with multiplicity, ascending."""
        return sorted([b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v])

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicity().values())

    def two_cycles(self) -> list[Edge]:
        return sorted(e for e, c in self.multiplicity().items() if c >= 2)

    def is_regular(self, r: int) -> bool:
        return all(d == r for d in self.degrees())

    def components(self) -> list[list[int]]:
        seen, comps = set(), []
        adj = {v: set(self.neighbours(v)) for v in range(self.n)}
        for s in range(self.n):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def relabeled(self, mapping: dict) -> "AbstractGraph":
        return AbstractGraph(self.n, tuple(edge(mapping[a], mapping[b]) for a, b in self.edges))

    def to_networkx(self):
        import networkx as nx

        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G


def cycle_graph(n: int) -> AbstractGraph:
    return AbstractGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def disjoint_cycles(lengths: Iterable[int]) -> AbstractGraph:
    edges, base = [], 0
    for p in lengths:
        if p < 3:
            raise PreconditionError(f"cycle length {p} < 3")
        edges += [(base + i, base + (i + 1) % p) for i in range(p)]
        base += p
    return AbstractGraph(base, tuple(edges))


def generalized_petersen(n: int, k: int) -> AbstractGraph:
    """P(n, k): a_i = i, b_i = n + i."""
    if n < 3 or not 1 <= k < n:
        raise PreconditionError(f"bad P({n},{k})")
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    edges = set(edge(*e) for e in outer + inner + spokes)
    return AbstractGraph(2 * n, tuple(sorted(edges)))


def parse_graph(text) -> AbstractGraph:
    """``n m`` header followed by m lines ``i j``; '#' starts a comment line."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"not an integer pair: {line!r}", lineno) from None
    if not rows:
        raise ParseError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 1 or m < 0:
        raise ParseError(f"bad header n={n} m={m}", rows[0][0])
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.append((u, v))
    return AbstractGraph(n, tuple(edges))


def format_graph(G: AbstractGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{a} {b}" for a, b in G.edges)
    return "\n".join(lines) + "\n"


def load_graph(path) -> AbstractGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


@dataclass(frozen=True)
class Placement:
    target: Instance
    map: tuple  # (abstract vertex, position) pairs, sorted by vertex
    witness: GAngulation
    source: str = "construction"
    notes: tuple = field(default=(), compare=False)

    def position(self, v: int) -> int:
        return dict(self.map)[v]

    def to_dict(self) -> dict:
        return {
            "n": self.target.n,
            "g": self.target.g,
            "map": {str(v): p for v, p in self.map},
            "placed_edges": [list(e) for e in self.target.sorted_edges()],
            "witness": self.witness.to_dict(),
            "source": self.source,
            "notes": list(self.notes),
        }


def _finish(G: AbstractGraph, g: int, pos: dict, diagonals, notes=()) -> Placement:
    """Validate the proof's witness; fall back to the oracle only with a note."""
    n = G.n
    if sorted(pos) != list(range(n)) or sorted(pos.values()) != list(range(n)):
        raise PlacementValidationError("placement map is not a bijection")
    placed = [edge(pos[a], pos[b]) for a, b in G.edges]
    if len(set(placed)) != len(placed):
        raise PlacementValidationError("parallel edges would collapse onto one chord")
    target = Instance(n, g, frozenset(placed))
    witness = GAngulation.from_diagonals(n, g, diagonals)
    check = validate_gangulation(target, witness)
    mapping = tuple(sorted(pos.items()))
    if check:
        return Placement(target, mapping, witness, "construction", tuple(notes))
    fallback = find_gangulation(target) if not target.boundary_edges() else None
    if fallback is None:
        raise PlacementValidationError("constructed witness is invalid", check.reasons)
    note = "constructed witness failed validation (" + "; ".join(check.reasons) + "); oracle witness used"
    return Placement(target, mapping, fallback, "oracle", tuple(notes) + (note,))


def _require_g(n: int, g: int) -> int:
    if g < 4:
        raise PreconditionError("g = 3 placements are not supported")
    t = admissible_params(n, g)
    if t is None:
        raise InadmissibleParams(f"n={n} is not g + t(g-2) for g={g}")
    return t


def cycle_order(n: int) -> list[int]:
    """Positions visited by the n-cycle: every cyclic neighbour pair becomes a chord."""
    if n == 6:
        return [0, 2, 4, 1, 5, 3]
    evens = list(range(0, n, 2))
    if n % 2:
        return evens + list(range(1, n - 1, 2))
    return evens + list(range(1, n - 4, 2)) + [n - 1, n - 3]


def place_cycle(n: int, g: int) -> Placement:
    """Place C_n so that K_n - C_n is g-angulable (n >= 5, g >= 4).

    Witness diagonals v_2 v_{3+i(g-2)}, i = 1..t.
    """
    t = _require_g(n, g)
    if n <= 4:
        raise NotPotentiallyAngulable(f"C_{n} is never potentially {g}-angulable in K_{n}")
    order = cycle_order(n)
    pos = {k: order[k] for k in range(n)}
    diags = [edge(2, 3 + i * (g - 2)) for i in range(1, t + 1)]
    return _finish(cycle_graph(n), g, pos, diags)


def _cycles_of(G: AbstractGraph) -> list[list[int]]:
    out = []
    for comp in G.components():
        start = comp[0]
        cyc, prev, cur = [start], None, start
        while True:
            nxt = [w for w in G.neighbours(cur) if w != prev]
            step = min(nxt) if prev is None else nxt[0]
            if step == start:
                break
            cyc.append(step)
            prev, cur = cur, step
        out.append(cyc)
    return out


def _arrange(cycles: list[list[int]]) -> tuple[list[int], Optional[int]]:
    """Cyclic vertex order for a union of cycles, plus the fan apex v_y.

    For a single cycle of length >= 5 ``cycle_order`` is used.  A
    lone triangle or 4-cycle comes back in natural order; the caller's
    insertions separate its edges.
    """
    if len(cycles) == 1:
        c = cycles[0]
        if len(c) < 5:
            return list(c), None
        order = cycle_order(len(c))
        slots = [None] * len(c)
        for k, v in enumerate(c):
            slots[order[k]] = v
        return slots, None
    # smallest cycle first, ties by input order
    ci = min(range(len(cycles)), key=lambda i: len(cycles[i]))
    C = cycles[ci]
    rest = cycles[:ci] + cycles[ci + 1 :]
    x, y, z, extra = C[0], C[1], C[2], C[3:]
    if len(rest) == 1 and len(rest[0]) == 4:
        r = rest[0]
        # the 4-cycle sits as v1 v3 v2 v4 on four consecutive positions
        return [r[0], y, r[2], z, r[1]] + list(extra) + [r[3], x], y
    L, _ = _arrange(rest)
    out = [L[0], x, L[1], y, L[2], z]
    for k, v in enumerate(L[3:]):
        out.append(v)
        if k < len(extra):
            out.append(extra[k])
    return out, y


def place_two_regular(G: AbstractGraph, g: int) -> Placement:
    """Place a union of cycles (each of length >= 3).

    Connected inputs go through ``place_cycle``; otherwise the smallest
    cycle is threaded through the placement of the others and the witness is
    the fan from its middle vertex v_y.
    """
    if not G.is_regular(2) or not G.is_simple():
        raise PreconditionError("graph is not a simple 2-regular graph")
    n = G.n
    t = _require_g(n, g)
    if n <= 4:
        raise NotPotentiallyAngulable(f"no 2-regular graph on {n} vertices is potentially g-angulable")
    cycles = _cycles_of(G)
    if len(cycles) == 1:
        base = place_cycle(n, g)
        c = cycles[0]
        pos = {c[k]: base.position(k) for k in range(n)}
        return _finish(G, g, pos, base.witness.diagonals)
    order, y = _arrange(cycles)
    shift = order.index(y)
    order = order[shift:] + order[:shift]
    pos = {v: i for i, v in enumerate(order)}
    diags = [edge(0, 1 + i * (g - 2)) for i in range(1, t + 1)]
    return _finish(G, g, pos, diags)


def place_petersen(n: int, k: int, g: int) -> Placement:
    """Place P(n, k) on K_2n: a_j at 2j+2, b_j at 2j+5 (mod 2n).

    Spokes become v_i v_{i+3} for even i.  For t = 1 the witness is the
    diagonal v_1 v_g; for t >= 2 the two ears v_1..v_g and v_{2n-g+1}..v_0
    are cut off and the rest is fanned from v_0, which has no placed
    neighbour there.
    """
    if n < 5 or not 1 <= k < n / 2:
        raise PreconditionError(f"need n >= 5 and 1 <= k < n/2, got n={n} k={k}")
    N = 2 * n
    t = _require_g(N, g)
    G = generalized_petersen(n, k)
    pos = {j: (2 * j + 2) % N for j in range(n)}
    pos.update({n + j: (2 * j + 5) % N for j in range(n)})
    if t == 0:
        diags = []
    elif t == 1:
        diags = [edge(1, g)]
    else:
        hull = [0, 1] + list(range(g, N - g + 2))
        diags = [edge(1, g), edge(N - g + 1, 0)]
        diags += [edge(0, hull[1 + i * (g - 2)]) for i in range(1, t - 1)]
    return _finish(G, g, pos, diags)


MAX_SEARCH_N = 9


def search_placement(G: AbstractGraph, g: int, cap: int = MAX_SEARCH_N) -> Optional[Placement]:
    """Try every cyclic placement (up to symmetry) through the oracle.

    Returns the first placement whose complement is g-angulable, or None,
    which certifies that ``G`` is not potentially g-angulable.
    """
    n = G.n
    if admissible_params(n, g) is None:
        raise InadmissibleParams(f"n={n} is not g + t(g-2) for g={g}")
    if n > cap:
        raise SizeCapExceeded(f"exhaustive placement search is capped at n <= {cap}")
    if not G.is_simple():
        return None
    for rest in itertools.permutations(range(1, n)):
        if n > 2 and rest[0] > rest[-1]:
            continue  # reflection of an order already tried
        order = (0,) + rest
        pos = {v: i for i, v in enumerate(order)}
        placed = frozenset(edge(pos[a], pos[b]) for a, b in G.edges)
        inst = Instance(n, g, placed)
        if inst.boundary_edges():
            continue
        if exists_gangulation(inst):
            w = find_gangulation(inst)
            return Placement(inst, tuple(sorted(pos.items())), w, "search")
    return None
