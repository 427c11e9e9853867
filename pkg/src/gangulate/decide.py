"""Decision pipeline: short diagonals, the small-F builder, and ``decide``.

``construct_small`` follows the inductive construction for forbidden sets of
at most n - g chords and never touches the oracle.  ``decide`` answers with
the recognizers up to n - 1 chords and with the oracle beyond that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .configs import ForbiddingClass, classify_forbidding
from .convex import Edge, GAngulation, Instance, edge, short_diagonal
from .errors import BoundaryEdgeError, NoneFound, PreconditionError, SizeCapExceeded
from .oracle import count_gangulations, find_gangulation, require_admissible

ANGULABLE = "Angulable"
BLOCKED = "Blocked"

CHARACTERIZATION = "Characterization"
CONSTRUCTION = "Construction"
ORACLE_FALLBACK = "OracleFallback"

DEFAULT_MAX_N = 64


def _reject_boundary(inst: Instance) -> None:
    bad = inst.boundary_edges()
    if bad:
        raise BoundaryEdgeError(f"forbidden set contains boundary edges {[tuple(e) for e in bad]}")


def find_short_diagonal(inst: Instance) -> Edge:
    """Least j such that v_j v_{j+g-1} is not forbidden.

    Needs t >= 2: at t = 1 every short diagonal can be forbidden at once.
    """
    t = require_admissible(inst.n, inst.g)
    if t < 2:
        raise PreconditionError(f"needs t >= 2, got t={t}")
    if inst.size > inst.n - 1:
        raise PreconditionError(f"|E(F)| = {inst.size} exceeds n-1 = {inst.n - 1}")
    _reject_boundary(inst)
    for j in range(inst.n):
        d = short_diagonal(inst.n, inst.g, j)
        if d not in inst.forbidden:
            return d
    raise NoneFound("every short diagonal is forbidden")


def _build(poly: list[int], g: int, forbidden: frozenset) -> Optional[set[Edge]]:
    # poly lists original labels in cyclic order; returns diagonals or None
    m = len(poly)
    if m == g:
        return set()
    t = (m - g) // (g - 2)
    local = {e for e in forbidden if e[0] in poly and e[1] in poly}
    touched = {v for e in local for v in e}
    for i in range(m):
        a, b = poly[i], poly[(i + g - 1) % m]
        if edge(a, b) in local:
            continue
        strip = [(i + k) % m for k in range(1, g - 1)]
        for j in strip:
            if poly[j] not in touched:
                return {edge(poly[j], poly[(j + 1 + k * (g - 2)) % m]) for k in range(1, t + 1)}
        gone = {poly[k] for k in strip}
        rest = [v for v in poly if v not in gone]
        sub = frozenset(e for e in local if e[0] not in gone and e[1] not in gone)
        if len(sub) > len(rest) - g:
            # the counting step needs every strip vertex to carry its own edge
            continue
        inner = _build(rest, g, sub)
        if inner is not None:
            return inner | {edge(a, b)}
    return None


def construct_small(inst: Instance) -> GAngulation:
    """A g-angulation avoiding F when |E(F)| <= n - g."""
    require_admissible(inst.n, inst.g)
    _reject_boundary(inst)
    if inst.size > inst.n - inst.g:
        raise PreconditionError(f"|E(F)| = {inst.size} exceeds n-g = {inst.n - inst.g}")
    diags = _build(list(range(inst.n)), inst.g, inst.forbidden)
    if diags is None:
        raise NoneFound(f"construction failed for {inst}")
    return GAngulation.from_diagonals(inst.n, inst.g, diags)


@dataclass(frozen=True)
class Decision:
    verdict: str
    method: str
    witness: Optional[GAngulation] = None
    fclass: Optional[ForbiddingClass] = None
    trace: dict = field(default_factory=dict, compare=False, hash=False)
    disagreement: Optional[str] = None

    @property
    def angulable(self) -> bool:
        return self.verdict == ANGULABLE

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "method": self.method}
        if self.fclass is not None:
            out["class"] = str(self.fclass)
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.disagreement:
            out["disagreement"] = self.disagreement
        return out


def _long_diagonals_blocked(inst: Instance) -> bool:
    # t = 1: the only g-angulations are the g-1 single long diagonals
    return all(short_diagonal(inst.n, inst.g, j) in inst.forbidden for j in range(inst.g - 1))


def decide(
    inst: Instance,
    max_n: int = DEFAULT_MAX_N,
    verify: bool = True,
    prefer_construction: bool = False,
) -> Decision:
    """Angulable with a witness, or Blocked with the recognized class.

    With ``verify`` the characterization verdict is checked against the oracle
    count; on disagreement the oracle wins and the report says so.
    """
    t = require_admissible(inst.n, inst.g)
    _reject_boundary(inst)
    if inst.n > max_n:
        raise SizeCapExceeded(f"n={inst.n} exceeds the cap {max_n}")
    n, g = inst.n, inst.g

    if inst.size >= n:
        w = find_gangulation(inst)
        if w is None:
            return Decision(BLOCKED, ORACLE_FALLBACK, trace={"size": inst.size})
        return Decision(ANGULABLE, ORACLE_FALLBACK, w, trace={"size": inst.size})

    if prefer_construction and inst.size <= n - g:
        return Decision(ANGULABLE, CONSTRUCTION, construct_small(inst), trace={"size": inst.size})

    trace: dict = {"size": inst.size, "t": t}
    fclass = None
    if t == 0:
        blocked = False
    else:
        fclass = classify_forbidding(inst)
        blocked = fclass.forbidding
        trace.update(fclass.evidence)
        if t == 1:
            direct = _long_diagonals_blocked(inst)
            trace["long_diagonals_blocked"] = direct
            if direct != blocked:
                trace["recognizer_vs_direct"] = f"recognizer {fclass}, direct check {direct}"
                blocked = direct

    if blocked:
        if verify and count_gangulations(inst):
            w = find_gangulation(inst)
            msg = f"recognizer reports {fclass} but the oracle finds a g-angulation"
            return Decision(ANGULABLE, ORACLE_FALLBACK, w, fclass, trace, msg)
        return Decision(BLOCKED, CHARACTERIZATION, None, fclass, trace)

    w = find_gangulation(inst)
    if w is None:
        msg = f"recognizer reports {fclass or 'no class'} but the oracle finds no g-angulation"
        return Decision(BLOCKED, ORACLE_FALLBACK, None, fclass, trace, msg)
    return Decision(ANGULABLE, CHARACTERIZATION, w, fclass, trace)
