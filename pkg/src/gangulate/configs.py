"""Forbidding configurations: F*(n, g), J*(beta) and their building blocks.

All predicates here are invariant under rotation of the labels: every
condition is phrased with cyclic offsets.  Where a condition assumes a
favourable labeling, only the two orientations need to be tried.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .convex import (
    Instance,
    admissible_params,
    canonical_form,
    chords,
    cyclic_distance,
    edge,
    edges_cross,
    gap_is_one_mod,
    is_boundary_edge,
    relabel,
    remove_vertices,
    short_diagonal,
)
from .errors import InadmissibleParams, OutOfRange, PreconditionError


class AlphaPair(NamedTuple):
    r: int
    s: int


FSTAR = "FStar"
JSTAR = "JStar"
NOT_FORBIDDING = "NotForbidding"


@dataclass(frozen=True)
class ForbiddingClass:
    tag: str
    beta: Optional[int] = None
    evidence: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.tag not in (FSTAR, JSTAR, NOT_FORBIDDING):
            raise ValueError(f"unknown tag {self.tag!r}")
        if (self.tag == JSTAR) != (self.beta is not None):
            raise ValueError("beta is set exactly for JStar")

    @property
    def forbidding(self) -> bool:
        return self.tag != NOT_FORBIDDING

    def __str__(self):
        return f"JStar({self.beta})" if self.tag == JSTAR else self.tag


def _t_at_least(inst: Instance, lo: int) -> int:
    t = admissible_params(inst.n, inst.g)
    if t is None:
        raise InadmissibleParams(f"n={inst.n} is not g + t(g-2) for g={inst.g}")
    if t < lo:
        raise PreconditionError(f"needs t >= {lo}, got t={t}")
    return t


def _qualifies(n: int, g: int, e) -> bool:
    return gap_is_one_mod(n, g, e[0], e[1])


def is_g_angulable_vertex(inst: Instance, v: int) -> bool:
    """No forbidden edge at ``v`` has gap == 1 (mod g-2)."""
    if not 0 <= v < inst.n:
        raise OutOfRange(f"vertex {v} out of range for n={inst.n}")
    return not any(v in e and _qualifies(inst.n, inst.g, e) for e in inst.forbidden)


def g_angulable_vertices(inst: Instance) -> list[int]:
    hit = set()
    for e in inst.forbidden:
        if _qualifies(inst.n, inst.g, e):
            hit.update(e)
    return [v for v in range(inst.n) if v not in hit]


def detect_alpha_pairs(inst: Instance) -> list[AlphaPair]:
    """Vertex pairs whose qualifying forbidden edges always cross far apart.

    For {r, s}, every qualifying edge r-i and qualifying edge s-j must cross
    with cyclic |i - j| > g - 2.  The edge r-s itself, when present, is left
    out of the comparison (otherwise no adjacent pair could ever qualify).
    Pairs with nothing to compare are not reported.
    """
    n, g = inst.n, inst.g
    q = {v: [] for v in range(n)}
    for a, b in inst.forbidden:
        if _qualifies(n, g, (a, b)):
            q[a].append(b)
            q[b].append(a)
    pairs = []
    for r, s in itertools.combinations(range(n), 2):
        ends = [(i, j) for i in q[r] if i != s for j in q[s] if j != r]
        if ends and all(
            edges_cross(n, edge(r, i), edge(s, j)) and cyclic_distance(n, i, j) > g - 2 for i, j in ends
        ):
            pairs.append(AlphaPair(r, s))
    return pairs


# --- F*(n, g) -------------------------------------------------------------


def _closure_holds(inst: Instance, i: int) -> bool:
    # v_j v_{j-g+1} is forbidden for j = i+1 .. i+g-2
    n, g = inst.n, inst.g
    return all(edge(j % n, (j - g + 1) % n) in inst.forbidden for j in range(i + 1, i + g - 1))


def fstar_violation(inst: Instance) -> Optional[str]:
    """First failed F* condition under the current labeling, else None."""
    n, g = inst.n, inst.g
    if inst.size != n - g + 1:
        return f"size {inst.size} != n-g+1 = {n - g + 1}"
    adj = inst.adjacency()
    isolated = [v for v in range(n) if not adj[v]]
    if isolated:
        return f"isolated vertices {isolated}"
    for e in inst.sorted_edges():
        if is_boundary_edge(n, e):
            return f"boundary edge {tuple(e)}"
        if not _qualifies(n, g, e):
            return f"(i) gap of {tuple(e)} not 1 mod {g - 2}"
    for v in range(n):
        if len(adj[v]) >= 2 and not _closure_holds(inst, v):
            return f"(ii) closure fails at vertex {v}"
    pendants = [v for v in range(n) if len(adj[v]) == 1]
    for p in pendants:
        (i,) = adj[p]
        if not _closure_holds(inst, i):
            return f"(iii) closure fails at {i}, neighbour of pendant {p}"
    for r, s in itertools.combinations(pendants, 2):
        (i,) = adj[r]
        (j,) = adj[s]
        if edges_cross(n, edge(r, i), edge(s, j)) and cyclic_distance(n, i, j) > g - 2:
            return f"(iv) pendant edges {r}-{i} and {s}-{j} cross too far apart"
    return None


def _orientations(inst: Instance):
    # all conditions are rotation invariant, so identity + one reflection
    # cover the dihedral group
    yield inst
    yield relabel(inst, 0, reflect=True)


def is_f_star(inst: Instance) -> bool:
    _t_at_least(inst, 1)
    return _is_f_star(inst)


def _is_f_star(inst: Instance) -> bool:
    if inst.size != inst.n - inst.g + 1:
        return False
    return any(fstar_violation(x) is None for x in _orientations(inst))


def _fstar_candidates(n: int, g: int, k: int):
    """Edge sets whose pendant vertices are exactly k..n-1."""
    size = n - g + 1
    ok_chords = [c for c in chords(n) if _qualifies(n, g, c)]
    allowed = {v: sorted({c[0] if c[1] == v else c[1] for c in ok_chords if v in c}) for v in range(n)}
    pend = list(range(k, n))
    inner_pairs = [c for c in ok_chords if c[0] < k and c[1] < k]

    def assign(idx, edges, deg):
        if idx == len(pend):
            yield from fill(edges, deg)
            return
        p = pend[idx]
        if deg[p] == 1:
            yield from assign(idx + 1, edges, deg)
            return
        for q in allowed[p]:
            if q >= k and (deg[q] >= 1 or q < p):
                continue
            e = edge(p, q)
            deg[p] += 1
            deg[q] += 1
            yield from assign(idx + 1, edges + [e], deg)
            deg[p] -= 1
            deg[q] -= 1

    def fill(edges, deg):
        need = size - len(edges)
        if need < 0:
            return
        for extra in itertools.combinations(inner_pairs, need):
            d = list(deg)
            for a, b in extra:
                d[a] += 1
                d[b] += 1
            if all(d[v] >= 2 for v in range(k)):
                yield frozenset(edges) | frozenset(extra)

    yield from assign(0, [], [0] * n)


def generate_f_stars(n: int, g: int) -> list[Instance]:
    """All F*(n, g) up to dihedral symmetry, as sorted canonical forms.

    Candidates put the pendant vertices on a consecutive block k..n-1 with
    g-2 <= k <= n-2(g-1) (k = 0 when t = 1) and are then filtered through
    the recognizer.
    """
    t = _t_at_least(Instance(n, g), 1)
    ks = [0] if t == 1 else range(g - 2, n - 2 * (g - 1) + 1)
    found = set()
    for k in ks:
        for edges in _fstar_candidates(n, g, k):
            inst = Instance(n, g, edges)
            if fstar_violation(inst) is None:
                found.add(tuple(canonical_form(inst).sorted_edges()))
    return [Instance(n, g, frozenset(es)) for es in sorted(found)]


# --- J*(beta) -------------------------------------------------------------


def _mu(inst: Instance) -> int:
    return inst.size - (inst.n - inst.g + 1)


def _check_jstar_pre(inst: Instance, beta: int) -> None:
    _t_at_least(inst, 1)
    if not 1 <= beta <= 2 * inst.g - 3:
        raise PreconditionError(f"beta must be in 1..{2 * inst.g - 3}, got {beta}")
    mu = _mu(inst)
    if not 1 <= mu <= inst.g - 2:
        raise PreconditionError(f"mu = |E| - (n-g+1) = {mu} outside 1..{inst.g - 2}")


def is_j_star(inst: Instance, beta: int) -> bool:
    _check_jstar_pre(inst, beta)
    return _Recognizer().is_j_star(inst, beta)


class _Recognizer:
    """Memoized recognizers; one per top-level call."""

    def __init__(self):
        self.memo: dict = {}
        self.trace: list = []

    def _key(self, inst, tag):
        return (tag, inst.n, inst.g, tuple(canonical_form(inst).sorted_edges()))

    def fstar(self, inst: Instance) -> bool:
        t = admissible_params(inst.n, inst.g)
        if t is None or t < 1:
            return False
        return _is_f_star(inst)

    def is_j_star(self, inst: Instance, beta: int) -> bool:
        t = admissible_params(inst.n, inst.g)
        mu = _mu(inst)
        if t is None or t < 1 or not 1 <= mu <= inst.g - 2:
            return False
        if not 1 <= beta <= 2 * inst.g - 3:
            return False
        if beta == 1:
            if sum(1 for e in inst.forbidden if not _qualifies(inst.n, inst.g, e)) > mu:
                return False
        elif g_angulable_vertices(inst):
            return False
        key = self._key(inst, beta)
        if key not in self.memo:
            self.memo[key] = None  # recursion guard
            if beta == 1:
                res = self._j1(inst)
            else:
                res = self._jgamma(inst, beta, t)
            self.memo[key] = res
        return bool(self.memo[key])

    def blocked_class(self, inst: Instance, max_beta: int) -> bool:
        """F* or J*(beta') for some beta' <= max_beta."""
        if self.fstar(inst):
            return True
        return any(self.is_j_star(inst, b) for b in range(1, max_beta + 1))

    def _j1(self, inst: Instance):
        n, g = inst.n, inst.g
        mu = _mu(inst)
        edges = inst.sorted_edges()
        bad = [e for e in edges if not _qualifies(n, g, e)]
        if len(bad) > mu:
            return None
        good = [e for e in edges if _qualifies(n, g, e)]
        for extra in itertools.combinations(good, mu - len(bad)):
            removed = set(bad) | set(extra)
            rest = inst.with_edges(e for e in edges if e not in removed)
            if _is_f_star(rest):
                return {"removed": sorted(removed)}
        return None

    def _jgamma(self, inst: Instance, gamma: int, t: int):
        n, g = inst.n, inst.g
        if gamma == 2 and t < 2:
            return None
        if gamma >= 3 and t < 3:
            return None
        if g_angulable_vertices(inst):
            return None
        pairs = detect_alpha_pairs(inst)
        if gamma == 2 and len(pairs) > 1:
            return None
        if gamma >= 3 and len(pairs) != gamma - 1:
            return None
        for r, s in pairs:
            if edge(r, s) not in inst.forbidden or not _qualifies(n, g, (r, s)):
                return None
        adj = inst.adjacency()
        marked = set()
        for r, s in pairs:
            marked |= {r, s} | adj[r] | adj[s]
        lower = 1 if gamma == 2 else gamma - 1
        strips = []
        for i in range(n):
            if short_diagonal(n, g, i) in inst.forbidden:
                continue
            strip = [(i + k) % n for k in range(1, g - 1)]
            if pairs:
                trigger = any(v in marked and len(adj[v]) >= 2 for v in strip) if gamma == 2 else any(
                    v in marked for v in strip
                )
            else:
                trigger = any(len(adj[v]) >= 2 for v in strip)
            if not trigger:
                continue
            reduced = remove_vertices(inst, strip)
            if not self.blocked_class(reduced, lower):
                return None
            strips.append(i)
        return {"alpha_pairs": [tuple(p) for p in pairs], "checked_strips": strips}

    def evidence(self, inst: Instance, beta: int) -> dict:
        return self.memo.get(self._key(inst, beta)) or {}


def classify_forbidding(inst: Instance) -> ForbiddingClass:
    """FStar, the least JStar(beta), or NotForbidding."""
    _t_at_least(inst, 1)
    if inst.boundary_edges():
        raise PreconditionError("forbidden set contains boundary edges")
    if inst.size > inst.n - 1:
        raise PreconditionError(f"|E(F)| = {inst.size} exceeds n-1 = {inst.n - 1}")
    if _is_f_star(inst):
        return ForbiddingClass(FSTAR, evidence={"orientation": _fstar_orientation(inst)})
    mu = _mu(inst)
    if 1 <= mu <= inst.g - 2:
        rec = _Recognizer()
        for beta in range(1, 2 * inst.g - 2):
            if rec.is_j_star(inst, beta):
                ev = dict(rec.evidence(inst, beta))
                ev["mu"] = mu
                return ForbiddingClass(JSTAR, beta, ev)
    return ForbiddingClass(NOT_FORBIDDING)


def _fstar_orientation(inst: Instance) -> str:
    return "identity" if fstar_violation(inst) is None else "reflected"
