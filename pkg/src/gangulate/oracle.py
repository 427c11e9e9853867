"""Exact g-angulation oracle for convex polygons with forbidden chords.

Interval dynamic programming: for an arc ``i..j`` closed by the edge ``(i, j)``
the face containing that edge is ``i = c0 < c1 < ... < c(g-1) = j``; every
g-angulation of the arc is counted once by its face on ``(i, j)``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .convex import (
    Edge,
    GAngulation,
    Instance,
    admissible_params,
    chords,
    edge,
    edges_cross,
    is_boundary_edge,
    polygon_faces,
)
from .errors import InadmissibleParams

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def require_admissible(n: int, g: int) -> int:
    t = admissible_params(n, g)
    if t is None:
        raise InadmissibleParams(f"n={n} is not g + t(g-2) for g={g}")
    return t


class _Table:
    """Memoized counts for one instance; not shared between calls."""

    def __init__(self, inst: Instance):
        self.n = inst.n
        self.g = inst.g
        self.m = inst.g - 2
        self.forbidden = inst.forbidden
        self.count = lru_cache(maxsize=None)(self._count)
        self.chain = lru_cache(maxsize=None)(self._chain)

    def usable(self, a: int, c: int) -> bool:
        return Edge(a, c) not in self.forbidden

    def fits(self, a: int, c: int) -> bool:
        # an arc a..c can be g-angulated only if it has g + s(g-2) vertices
        return (c - a) % self.m == 1 % self.m

    def _count(self, i: int, j: int) -> int:
        if j - i == 1:
            return 1
        if not self.fits(i, j):
            return 0
        return self.chain(i, j, self.g - 1)

    def _chain(self, a: int, j: int, steps: int) -> int:
        # ways to walk a -> j in exactly `steps` usable face edges
        if steps == 1:
            return self.count(a, j) if self.usable(a, j) else 0
        total = 0
        for c in range(a + 1, j - steps + 2):
            if not self.fits(a, c) or not self.usable(a, c):
                continue
            sub = self.count(a, c)
            if sub:
                rest = self.chain(c, j, steps - 1)
                if rest:
                    total += sub * rest
        return total

    def face_choices(self, i: int, j: int) -> Iterator[tuple[int, ...]]:
        """Viable faces on edge (i, j), lexicographic in (c1, ..., c(g-2))."""

        def walk(a, steps):
            if steps == 1:
                if self.usable(a, j) and self.count(a, j):
                    yield (j,)
                return
            for c in range(a + 1, j - steps + 2):
                if self.fits(a, c) and self.usable(a, c) and self.count(a, c) and self.chain(c, j, steps - 1):
                    for rest in walk(c, steps - 1):
                        yield (c,) + rest

        if j - i == 1:
            return
        for tail in walk(i, self.g - 1):
            yield (i,) + tail

    def total(self) -> int:
        if Edge(0, self.n - 1) in self.forbidden:
            return 0
        return self.count(0, self.n - 1)


def _boundary_forbidden(inst: Instance) -> bool:
    return any(is_boundary_edge(inst.n, e) for e in inst.forbidden)


def count_gangulations(inst: Instance) -> int:
    """Exact number of g-angulations avoiding every forbidden edge."""
    require_admissible(inst.n, inst.g)
    if _boundary_forbidden(inst):
        return 0
    return _Table(inst).total()


def exists_gangulation(inst: Instance) -> bool:
    return count_gangulations(inst) > 0


def find_gangulation(inst: Instance) -> Optional[GAngulation]:
    """Deterministic witness: lexicographically least face at every split."""
    require_admissible(inst.n, inst.g)
    if _boundary_forbidden(inst):
        return None
    table = _Table(inst)
    if not table.total():
        return None
    diagonals: set[Edge] = set()
    stack = [(0, inst.n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i == 1:
            continue
        face = next(table.face_choices(i, j))
        for a, b in zip(face, face[1:]):
            if b - a > 1:
                diagonals.add(Edge(a, b))
                stack.append((a, b))
    return GAngulation.from_diagonals(inst.n, inst.g, diagonals)


def enumerate_gangulations(inst: Instance) -> Iterator[GAngulation]:
    """Every g-angulation avoiding the forbidden set, in DP order."""
    require_admissible(inst.n, inst.g)
    if _boundary_forbidden(inst):
        return
    table = _Table(inst)

    def arcs(i, j):
        if j - i == 1:
            yield frozenset()
            return
        for face in table.face_choices(i, j):
            own = frozenset(Edge(a, b) for a, b in zip(face, face[1:]) if b - a > 1)
            parts = [(a, b) for a, b in zip(face, face[1:]) if b - a > 1]
            yield from _combine(own, parts)

    def _combine(acc, parts):
        if not parts:
            yield acc
            return
        (a, b), rest = parts[0], parts[1:]
        for sub in arcs(a, b):
            yield from _combine(acc | sub, rest)

    if table.total():
        for diags in arcs(0, inst.n - 1):
            yield GAngulation.from_diagonals(inst.n, inst.g, diags)


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    count: int
    witness: Optional[GAngulation] = None


def solve(inst: Instance, witness: bool = True) -> OracleResult:
    c = count_gangulations(inst)
    w = find_gangulation(inst) if (witness and c) else None
    return OracleResult(c > 0, c, w)


class BlockingOracle:
    """Precomputed g-angulations of K_n as chord bitmasks.

    For bulk questions of the form "does F meet every g-angulation?" at one
    (n, g).  Built from the unrestricted enumeration, so it is an independent
    route from the per-instance DP.
    """

    def __init__(self, n: int, g: int):
        require_admissible(n, g)
        self.n, self.g = n, g
        self.chords = chords(n)
        self.index = {c: k for k, c in enumerate(self.chords)}
        self.masks = [self.mask(a.diagonals) for a in enumerate_gangulations(Instance(n, g))]

    def mask(self, edges: Iterable) -> int:
        m = 0
        for e in edges:
            k = self.index.get(edge(*e))
            if k is not None:
                m |= 1 << k
        return m

    def count_mask(self, fmask: int) -> int:
        return sum(1 for a in self.masks if not a & fmask)

    def blocked_mask(self, fmask: int) -> bool:
        return all(a & fmask for a in self.masks)

    def blocked(self, edges: Iterable) -> bool:
        return self.blocked_mask(self.mask(edges))


@dataclass
class Validation:
    ok: bool
    reasons: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_gangulation(inst: Instance, cand: GAngulation) -> Validation:
    """Check a candidate against every g-angulation invariant and ``inst``."""
    reasons = []
    n, g = inst.n, inst.g
    if (cand.n, cand.g) != (n, g):
        reasons.append(f"shape mismatch: candidate ({cand.n},{cand.g}) vs instance ({n},{g})")
        return Validation(False, reasons)
    t = admissible_params(n, g)
    if t is None:
        return Validation(False, [f"inadmissible parameters n={n} g={g}"])
    diags = sorted(cand.diagonals)
    for d in diags:
        a, b = d
        if not (0 <= a < b < n):
            reasons.append(f"diagonal {tuple(d)} out of range")
        elif is_boundary_edge(n, d):
            reasons.append(f"diagonal {tuple(d)} is a boundary edge")
    if reasons:
        return Validation(False, reasons)
    if len(diags) != t:
        reasons.append(f"expected {t} diagonals, got {len(diags)}")
    for k, d1 in enumerate(diags):
        for d2 in diags[k + 1 :]:
            if edges_cross(n, d1, d2):
                reasons.append(f"diagonals {tuple(d1)} and {tuple(d2)} cross")
    for d in diags:
        if d in inst.forbidden:
            reasons.append(f"diagonal {tuple(d)} is forbidden")
    for e in inst.forbidden:
        if is_boundary_edge(n, e):
            reasons.append(f"boundary edge {tuple(e)} is forbidden")
    if any("cross" in r for r in reasons):
        return Validation(False, reasons)
    tiled = polygon_faces(n, diags)
    for f in tiled:
        if len(f) != g:
            reasons.append(f"face {f} has {len(f)} vertices, expected {g}")
    given = sorted(tuple(sorted(f)) for f in cand.faces)
    if given != tiled:
        reasons.append("faces do not match the tiling induced by the diagonals")
    allowed = set(diags)
    for f in cand.faces:
        if len(set(f)) != len(f):
            reasons.append(f"face {tuple(f)} repeats a vertex")
            continue
        ring = sorted(f)
        for a, b in zip(ring, ring[1:] + ring[:1]):
            e = edge(a, b)
            if not (is_boundary_edge(n, e) or e in allowed):
                reasons.append(f"face {tuple(f)} uses non-edge {tuple(e)}")
    return Validation(not reasons, reasons)
