"""Cubic graphs: labelings that make them potentially 4-angulable.

A labeling v_1..v_n works when v_1's neighbours carry distinct odd labels and
no edge joins cyclically consecutive labels.  Placing v_i at position i-1 then
leaves the fan v_1 v_4, v_1 v_6, ..., v_1 v_{n-2} free.  The cube Q_3 has no
such labeling and gets its own.

``label_cubic`` reduces along an edge (G -> G_e, two vertices fewer), labels
the smaller graph and lifts the labeling with the relabeling rules of the
inductive argument.  Every lifted labeling is checked; when a rule is not
stated for a configuration or its output fails the check, a backtracking
search supplies the labeling and the result records that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterator, Optional

from .convex import edge
from .errors import PreconditionError
from .placement import AbstractGraph, Placement, _finish, parse_graph

STANDARD = "Standard"
Q3_SPECIAL = "Q3Special"


@dataclass(frozen=True)
class CubicLabeling:
    """``labels[v]`` is the label (1..n) of vertex v."""

    labels: tuple
    kind: str = STANDARD
    source: str = field(default="", compare=False)

    def vertex_of(self, label: int) -> int:
        return self.labels.index(label)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "kind": self.kind, "source": self.source}


def _fixture_graph(name: str) -> AbstractGraph:
    text = resources.files("gangulate.fixtures").joinpath(name).read_text()
    return parse_graph(text)


@lru_cache(maxsize=None)
def q3_labeled() -> AbstractGraph:
    """Q_3 with vertex i carrying its special label i+1."""
    return _fixture_graph("q3.txt")


@lru_cache(maxsize=None)
def base_table() -> tuple:
    """The nine labeled 8-vertex base graphs (vertex i has label i+1)."""
    return tuple(_fixture_graph(f"cubic8_{k}.txt") for k in range(1, 10))


@lru_cache(maxsize=None)
def q3_extensions() -> tuple:
    """Labeled 10-vertex graphs whose reduction is Q_3, for both cases."""
    names = [f"cubic10_q3ext_{k}.txt" for k in "abcd"] + ["cubic10_twocycle.txt"]
    return tuple(_fixture_graph(n) for n in names)


def _require_cubic(G: AbstractGraph) -> int:
    if not G.is_regular(3):
        raise PreconditionError("graph is not 3-regular")
    if G.n % 2 or G.n < 8:
        raise PreconditionError(f"need n = 4 + 2t with t >= 2, got n={G.n}")
    return (G.n - 4) // 2


def _gap_ok(n: int, a: int, b: int) -> bool:
    return abs(a - b) not in (1, n - 1)


def check_labeling_4(G: AbstractGraph, lab: CubicLabeling) -> bool:
    """Do the labels meet the odd-neighbour and no-consecutive-label rules?

    For a graph with a 2-cycle uvu the rule reads: u = v_1, v = v_a and the
    third neighbour v_b of v_1, with a != b both odd.
    """
    _require_cubic(G)
    n = G.n
    labels = tuple(lab.labels)
    if sorted(labels) != list(range(1, n + 1)):
        return False
    if lab.kind == Q3_SPECIAL:
        placed = sorted(edge(labels[a] - 1, labels[b] - 1) for a, b in G.edges)
        return placed == list(q3_labeled().edges)
    if lab.kind != STANDARD:
        return False
    if any(not _gap_ok(n, labels[a], labels[b]) for a, b in G.edges):
        return False
    one = labels.index(1)
    near = sorted(labels[w] for w in G.neighbours(one))
    if any(x % 2 == 0 for x in near):
        return False
    cycles = G.two_cycles()
    if not cycles:
        return len(set(near)) == 3
    if len(cycles) != 1 or one not in cycles[0]:
        return False
    return len(set(near)) == 2


# --- reduction ------------------------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """G_e together with the names the lifting rules refer to.

    Vertices of ``reduced`` are numbered 0..n-3; ``keep[i]`` is the vertex
    of G it stands for.
    """

    reduced: AbstractGraph
    keep: tuple
    x: int
    y: int
    x_nbrs: tuple  # (x1, x2), or (x1,) when xy is a 2-cycle
    y_nbrs: tuple


def _reduce(G: AbstractGraph, x: int, y: int) -> Reduction:
    mult = G.multiplicity().get(edge(x, y), 0)
    if mult == 0:
        raise PreconditionError(f"({x}, {y}) is not an edge")
    if mult > 2:
        raise PreconditionError("triple edge")
    nx_ = list(G.neighbours(x))
    ny_ = list(G.neighbours(y))
    nx_.remove(y)
    ny_.remove(x)
    if mult == 2:
        nx_.remove(y)
        ny_.remove(x)
        added = [(nx_[0], ny_[0])]
    else:
        added = [tuple(nx_), tuple(ny_)]
    for a, b in added:
        if a == b:
            raise PreconditionError("reduction would create a loop")
    kept = [e for e in G.edges if x not in e and y not in e] + added
    keep = tuple(v for v in range(G.n) if v not in (x, y))
    index = {v: i for i, v in enumerate(keep)}
    reduced = AbstractGraph(G.n - 2, tuple((index[a], index[b]) for a, b in kept))
    return Reduction(reduced, keep, x, y, tuple(nx_), tuple(ny_))


def reduce_cubic(G: AbstractGraph, e) -> AbstractGraph:
    """Delete e = xy and smooth x and y; two vertices fewer, still cubic."""
    if not G.is_regular(3):
        raise PreconditionError("graph is not 3-regular")
    return _reduce(G, *e).reduced


# --- isomorphism helpers --------------------------------------------------


def _matcher(G: AbstractGraph, H: AbstractGraph):
    from networkx.algorithms.isomorphism import MultiGraphMatcher

    return MultiGraphMatcher(G.to_networkx(), H.to_networkx())


def isomorphism(G: AbstractGraph, H: AbstractGraph) -> Optional[dict]:
    """A vertex map G -> H, or None."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    gm = _matcher(G, H)
    if not gm.is_isomorphic():
        return None
    return dict(gm.mapping)


def is_q3(G: AbstractGraph) -> bool:
    return G.n == 8 and G.is_simple() and isomorphism(G, q3_labeled()) is not None


def _labels_via(G: AbstractGraph, H: AbstractGraph) -> Optional[tuple]:
    iso = isomorphism(G, H)
    if iso is None:
        return None
    return tuple(iso[v] + 1 for v in range(G.n))


# --- search ---------------------------------------------------------------


def search_labeling(G: AbstractGraph) -> Optional[CubicLabeling]:
    """Backtracking over labelings; least vertex for label 1 first."""
    _require_cubic(G)
    n = G.n
    cycles = G.two_cycles()
    starts = sorted(set(cycles[0])) if cycles else range(n)
    odd = list(range(3, n, 2))
    for one in starts:
        nbrs = G.neighbours(one)
        distinct = sorted(set(nbrs))
        for picks in itertools.permutations(odd, len(distinct)):
            lab = {one: 1}
            lab.update(zip(distinct, picks))
            if any(not _gap_ok(n, lab[a], lab[b]) for a, b in G.edges if a in lab and b in lab):
                continue
            done = _fill(G, lab)
            if done is not None:
                return CubicLabeling(tuple(done[v] for v in range(n)), STANDARD, "search")
    return None


def _fill(G: AbstractGraph, lab: dict) -> Optional[dict]:
    n = G.n
    free_v = [v for v in range(n) if v not in lab]
    used = set(lab.values())
    adj = {v: set(G.neighbours(v)) for v in range(n)}

    def go(k):
        if k == len(free_v):
            return dict(lab)
        v = free_v[k]
        for c in range(2, n + 1):
            if c in used:
                continue
            if all(w not in lab or _gap_ok(n, c, lab[w]) for w in adj[v]):
                lab[v] = c
                used.add(c)
                out = go(k + 1)
                if out is not None:
                    return out
                del lab[v]
                used.discard(c)
        return None

    return go(0)


# --- lifting rules --------------------------------------------------------


class _Lift:
    """Mutable labeling of G built from a labeling of G_e."""

    def __init__(self, G: AbstractGraph, red: Reduction, sub: CubicLabeling):
        self.G = G
        self.n = G.n
        self.red = red
        self.sub_adj = {red.keep[i]: {red.keep[j] for j in red.reduced.neighbours(i)} for i in range(red.reduced.n)}
        self.lab = {red.keep[i]: sub.labels[i] for i in range(red.reduced.n)}

    def at(self, label: int) -> Optional[int]:
        for v, c in self.lab.items():
            if c == label:
                return v
        return None

    def result(self, x_label: int, y_label: int, x: int, y: int) -> CubicLabeling:
        full = dict(self.lab)
        full[x] = x_label
        full[y] = y_label
        return CubicLabeling(tuple(full.get(v, 0) for v in range(self.n)))


def _rules_case1_simple(G, red, sub) -> Iterator[tuple[str, CubicLabeling]]:
    """G and G_e without 2-cycles; G_e labeled with odd neighbours of v_1."""
    n = G.n
    for x, y, (x1, x2), (y1, y2) in _orientations(red):
        L = _Lift(G, red, sub)
        v1 = L.at(1)
        if v1 in (x1, x2, y1, y2):
            continue  # this configuration is not covered by the stated rules
        top = L.at(n - 2)
        if not {x1, x2} & {y1, y2}:
            for v, owner, other in ((x1, x, y), (x2, x, y), (y1, y, x), (y2, y, x)):
                if top in L.sub_adj[v]:
                    continue
                L = _Lift(G, red, sub)
                i = L.lab[v]
                L.lab[v] = n - 1
                yield "(1.1)(b1)", L.result(i, n, owner, other)
            continue
        if x2 != y2 or x1 == y1:
            continue
        if top in (x1, x2, y1):
            if top == x2:
                i = L.lab[x1]
                L.lab[x1] = n - 1
                yield "(1.1)(b2)", L.result(i, n, x, y)
            elif top == x1:
                i, j = L.lab[y1], L.lab[x2]
                L.lab[y1] = n
                L.lab[x2] = n - 1
                yield "(1.1)(b2)", L.result(j, i, x, y)
            continue
        if L.lab[x2] == n - 3:
            if L.lab[y1] == 3:
                continue
            w = L.at(2)
            L.lab[w] = n
            yield "(1.1)(b2)", L.result(n - 1, 2, x, y)
        else:
            if L.lab[y1] == n - 3:
                continue
            w = L.at(n - 2)
            L.lab[w] = n - 1
            yield "(1.1)(b2)", L.result(n, n - 2, x, y)


def _orientations(red: Reduction):
    """Every naming of (x, y, x1, x2, y1, y2) the symmetric arguments allow."""
    seen = set()
    for (x, xs), (y, ys) in ((( red.x, red.x_nbrs), (red.y, red.y_nbrs)), ((red.y, red.y_nbrs), (red.x, red.x_nbrs))):
        for a in itertools.permutations(xs):
            for b in itertools.permutations(ys):
                key = (x, a, y, b)
                if key not in seen:
                    seen.add(key)
                    yield x, y, a, b


def _odd_spares(n: int, avoid) -> list[int]:
    return [c for c in range(3, n - 1, 2) if c not in avoid]


def _rules_case1_twocycle(G, red, sub) -> Iterator[tuple[str, CubicLabeling]]:
    """G simple, G_e has the 2-cycle x1 x2 x1 (or y1 y2 y1)."""
    n = G.n
    cyc = red.reduced.two_cycles()[0]
    pair = {red.keep[cyc[0]], red.keep[cyc[1]]}
    for x, y, (x1, x2), (y1, y2) in _orientations(red):
        if {x1, x2} != pair:
            continue
        L = _Lift(G, red, sub)
        a = L.lab[x2] if L.lab[x1] == 1 else L.lab[x1]
        third = [w for w in L.sub_adj[L.at(1)] if w not in pair]
        b = L.lab[third[0]] if third else None
        if not {x1, x2} & {y1, y2}:
            if L.lab[x1] != 1:
                continue
            for v in (y1, y2):
                L = _Lift(G, red, sub)
                if L.lab[v] == n - 2:
                    continue
                i = L.lab[v]
                L.lab[v] = n
                yield "(1.2)(a)", L.result(n - 1, i, x, y)
            continue
        if {x1, x2} == {y1, y2}:
            if L.lab[x1] != 1:
                continue
            for c in _odd_spares(n, {1, a, b}):
                L = _Lift(G, red, sub)
                L.lab[L.at(c)] = n
                yield "(1.2)(b1)", L.result(n - 1, c, x, y)
            continue
        if x2 != y2 or x1 == y1:
            continue
        if L.lab[x2] == 1:
            L.lab[y1] = n
            yield "(1.2)(b2.1)", L.result(n - 1, b, x, y)
        elif L.lab[x1] == 1:
            if L.lab[y1] != n - 2:
                for c in _odd_spares(n, {1, a, b}):
                    L = _Lift(G, red, sub)
                    L.lab[L.at(c)] = n
                    yield "(1.2)(b2.2)", L.result(n - 1, c, x, y)
            else:
                c = 6 if a == 3 else 2
                L.lab[L.at(c)] = n
                yield "(1.2)(b2.2)", L.result(n - 1, c, x, y)


def _rules_case2(G, red, sub) -> Iterator[tuple[str, CubicLabeling]]:
    """G has the 2-cycle x y x; x1, y1 are the other neighbours."""
    n = G.n
    base = ((red.x, red.x_nbrs[0], red.y, red.y_nbrs[0]), (red.y, red.y_nbrs[0], red.x, red.x_nbrs[0]))
    if red.reduced.two_cycles():
        for x, x1, y, y1 in base:
            L = _Lift(G, red, sub)
            if L.lab[x1] != 1:
                continue
            third = [w for w in L.sub_adj[x1] if w != y1]
            if len(third) != 1:
                continue
            v = third[0]
            b = L.lab[v]
            L.lab[v] = n
            L.lab[x1] = b
            yield "(2.2)", L.result(1, n - 1, x, y)
        return
    for x, x1, y, y1 in base:
        L = _Lift(G, red, sub)
        v1 = L.at(1)
        if v1 == x1:
            a = L.lab[y1]
            L.lab[x1] = n - 1
            L.lab[y1] = n
            yield "(2.1)(a)", L.result(1, a, x, y)
            continue
        if v1 == y1:
            continue
        top = L.at(n - 2)
        if top in (x1, y1):
            if top != x1:
                continue
            if L.at(n - 4) not in L.sub_adj[x1] - {y1}:
                L.lab[v1] = n
                p, q = L.at(n - 3), L.at(n - 2)
                L.lab[p], L.lab[q] = n - 2, n - 3
                yield "(2.1)(b1)", L.result(1, n - 1, x, y)
            else:
                w = L.at(n - 3)
                L.lab[x1] = n - 1
                L.lab[v1] = n
                L.lab[w] = n - 2
                yield "(2.1)(b1)", L.result(1, n - 3, x, y)
            continue
        i, j = L.lab[x1], L.lab[y1]
        if i % 2:
            L.lab[v1] = n
            yield "(2.1)(b2)", L.result(1, n - 1, x, y)
            continue
        if j % 2:
            continue
        if 2 in (i, j):
            if i != 2:
                continue
            if L.at(4) not in L.sub_adj[x1] - {y1}:
                w3 = L.at(3)
                L.lab[x1], L.lab[w3] = 3, 2
                L.lab[v1] = n
                yield "(2.1)(b2)", L.result(1, n - 1, x, y)
            else:
                w3 = L.at(3)
                L.lab[x1] = n - 1
                L.lab[v1] = n
                L.lab[w3] = 2
                yield "(2.1)(b2)", L.result(1, 3, x, y)
            continue
        if i > j:
            continue
        u = L.at(i + 1)
        prev = L.at(i - 1)
        L.lab[x1], L.lab[u] = i + 1, i
        if prev not in L.sub_adj[u]:
            L.lab[v1] = n
            yield "(2.1)(b2)", L.result(1, n - 1, x, y)
        else:
            L.lab[v1] = n - 1
            L.lab[prev] = n
            yield "(2.1)(b2)", L.result(1, i - 1, x, y)


# --- labeling driver ------------------------------------------------------


def _check_input(G: AbstractGraph) -> None:
    _require_cubic(G)
    if not G.is_connected():
        raise PreconditionError("graph is not connected")
    mult = G.multiplicity()
    if any(c > 2 for c in mult.values()):
        raise PreconditionError("triple edge")
    if len(G.two_cycles()) > 1:
        raise PreconditionError("more than one 2-cycle")


def _contraction_edge(G: AbstractGraph) -> Reduction:
    # first edge in input order whose reduction is connected with <= one 2-cycle
    for a, b in G.edges:
        try:
            red = _reduce(G, a, b)
        except PreconditionError:
            continue
        r = red.reduced
        if r.is_connected() and len(r.two_cycles()) <= 1 and all(c <= 2 for c in r.multiplicity().values()):
            return red
    raise PreconditionError("no edge with an admissible reduction")


def label_cubic(G: AbstractGraph) -> CubicLabeling:
    """Labeling of a connected cubic graph (n >= 8, at most one 2-cycle)."""
    _check_input(G)
    return _label(G)


def _label(G: AbstractGraph) -> CubicLabeling:
    n = G.n
    if n == 8:
        if is_q3(G):
            return CubicLabeling(_labels_via(G, q3_labeled()), Q3_SPECIAL, "special labeling of Q3")
        for k, H in enumerate(base_table(), start=1):
            labels = _labels_via(G, H)
            if labels is not None:
                return CubicLabeling(labels, STANDARD, f"base table {k}")
        return _fallback(G, "8-vertex graph missing from the base table")

    two = G.two_cycles()
    try:
        if two:
            red = _reduce(G, *two[0])
            rules, case = _rules_case2, "2"
        else:
            red = _contraction_edge(G)
            rules = _rules_case1_twocycle if red.reduced.two_cycles() else _rules_case1_simple
            case = "1"
    except PreconditionError as exc:
        # e.g. a 2-cycle whose two outer neighbours coincide
        return _fallback(G, f"no admissible reduction: {exc}")

    if is_q3(red.reduced):
        for H in q3_extensions():
            labels = _labels_via(G, H)
            if labels is not None:
                lab = CubicLabeling(labels, STANDARD, "extension of Q3")
                if check_labeling_4(G, lab):
                    return lab
        return _fallback(G, f"case {case}: reduction is Q3 but no listed extension matches")

    sub = _label(red.reduced)
    for name, cand in rules(G, red, sub):
        if check_labeling_4(G, cand):
            return CubicLabeling(cand.labels, STANDARD, f"rule {name}")
    return _fallback(G, f"case {case}: no stated rule applies")


def _fallback(G: AbstractGraph, why: str) -> CubicLabeling:
    lab = search_labeling(G)
    if lab is None:
        raise PreconditionError(f"no labeling exists ({why})")
    return CubicLabeling(lab.labels, STANDARD, f"search ({why})")


def place_cubic(G: AbstractGraph, lab: Optional[CubicLabeling] = None) -> Placement:
    """Place a simple connected cubic graph so K_n - G is 4-angulable.

    ``lab`` reuses a labeling already computed for G; it is re-checked.
    """
    if not G.is_simple():
        raise PreconditionError("placement needs a simple graph")
    t = _require_cubic(G)
    if lab is None:
        lab = label_cubic(G)
    elif not check_labeling_4(G, lab):
        raise PreconditionError("supplied labeling fails the labeling conditions")
    pos = {v: lab.labels[v] - 1 for v in range(G.n)}
    if lab.kind == Q3_SPECIAL:
        diags = [edge(0, 5), edge(1, 4)]
    else:
        diags = [edge(0, 3 + 2 * k) for k in range(t)]
    return _finish(G, 4, pos, diags, notes=(f"labeling: {lab.source}",))


# --- generation -----------------------------------------------------------


def _walk_invariant(adj) -> tuple:
    # closed walks of length 3..7 at each vertex, as a sorted profile;
    # regular graphs defeat colour refinement, walks separate them cheaply
    import numpy as np

    n = len(adj)
    A = np.zeros((n, n), dtype=np.int64)
    for v, ws in enumerate(adj):
        for w in ws:
            A[v, w] = 1
    P, rows = A.copy(), []
    for _ in range(2, 8):
        P = P @ A
        rows.append(np.diag(P))
    return tuple(sorted(zip(*(r.tolist() for r in rows))))


def cubic_graphs(n: int) -> list[AbstractGraph]:
    """All connected simple cubic graphs on n vertices, one per class."""
    import networkx as nx

    if n % 2 or n < 4:
        return []
    found: dict = {}
    adj = [set() for _ in range(n)]

    def fresh(v):
        return not adj[v]

    def grow():
        u = next((v for v in range(n) if len(adj[v]) < 3), None)
        if u is None:
            G = AbstractGraph(n, tuple(edge(a, b) for a in range(n) for b in adj[a] if a < b))
            if not G.is_connected():
                return
            H = G.to_networkx()
            bucket = found.setdefault(_walk_invariant(adj), [])
            if not any(nx.is_isomorphic(H, K.to_networkx()) for K in bucket):
                bucket.append(G)
            return
        seen_fresh = False
        for w in range(u + 1, n):
            if len(adj[w]) >= 3 or w in adj[u]:
                continue
            if fresh(w):
                if seen_fresh:
                    continue  # untouched vertices are interchangeable
                seen_fresh = True
            adj[u].add(w)
            adj[w].add(u)
            grow()
            adj[u].discard(w)
            adj[w].discard(u)

    grow()
    graphs = [G for bucket in found.values() for G in bucket]
    return sorted(graphs, key=lambda G: G.edges)
