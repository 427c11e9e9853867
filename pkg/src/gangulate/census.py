"""Exhaustive or sampled classification tables at one (n, g).

Every chord-only forbidden set in the requested size range is classified by
the recognizers and checked against the bitmask oracle; rows record how many
sets were blocked, how the recognizers labelled them, and any disagreement.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .configs import classify_forbidding
from .convex import Instance, chords
from .errors import OutOfRange, SizeCapExceeded
from .oracle import BlockingOracle, require_admissible

MAX_EXHAUSTIVE = 5_000_000
MAX_REPORTED_MISMATCHES = 20


@dataclass
class CensusRow:
    size: int
    total: int = 0
    blocked: int = 0
    classes: Counter = field(default_factory=Counter)
    mismatches: int = 0

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "total": str(self.total),
            "blocked": str(self.blocked),
            "classes": {k: str(v) for k, v in sorted(self.classes.items())},
            "mismatches": str(self.mismatches),
        }


@dataclass
class Census:
    n: int
    g: int
    mode: str
    rows: list
    examples: list  # (size, edges, oracle_blocked, class) for mismatches

    @property
    def mismatches(self) -> int:
        return sum(r.mismatches for r in self.rows)

    @property
    def total(self) -> int:
        return sum(r.total for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "mode": self.mode,
            "total": str(self.total),
            "mismatches": str(self.mismatches),
            "rows": [r.to_dict() for r in self.rows],
            "mismatch_examples": [
                {"edges": [list(e) for e in edges], "oracle_blocked": ob, "class": cls}
                for _, edges, ob, cls in self.examples
            ],
        }


def default_sizes(n: int, g: int) -> range:
    return range(0, n)


def exhaustive_total(n: int, sizes: Iterable[int]) -> int:
    c = len(chords(n))
    return sum(math.comb(c, k) for k in sizes)


def _exhaustive(n: int, sizes) -> Iterator[tuple]:
    cs = chords(n)
    for k in sizes:
        yield from itertools.combinations(cs, k)


def _sampled(n: int, sizes, count: int, seed: int) -> Iterator[tuple]:
    rng = random.Random(seed)
    cs = chords(n)
    sizes = list(sizes)
    for _ in range(count):
        k = rng.choice(sizes)
        yield tuple(sorted(rng.sample(cs, k)))


def census(
    n: int,
    g: int,
    sizes: Optional[Iterable[int]] = None,
    sample: Optional[int] = None,
    seed: int = 0,
    cap: int = MAX_EXHAUSTIVE,
) -> Census:
    """Classify every (or ``sample`` random) chord-only F with |F| in ``sizes``."""
    require_admissible(n, g)
    sizes = sorted(set(default_sizes(n, g) if sizes is None else sizes))
    nchords = len(chords(n))
    for k in sizes:
        if not 0 <= k <= min(n - 1, nchords):
            raise OutOfRange(f"size {k} outside 0..{min(n - 1, nchords)}")
    if sample is None:
        total = exhaustive_total(n, sizes)
        if total > cap:
            raise SizeCapExceeded(f"{total} forbidden sets exceed the exhaustive cap {cap}; sample instead")
        source, mode = _exhaustive(n, sizes), "exhaustive"
    else:
        source, mode = _sampled(n, sizes, sample, seed), f"random({sample}, seed={seed})"

    oracle = BlockingOracle(n, g)
    rows = {k: CensusRow(k) for k in sizes}
    examples = []
    for edges in source:
        inst = Instance(n, g, frozenset(edges))
        blocked = oracle.blocked(edges)
        cls = classify_forbidding(inst)
        row = rows[len(edges)]
        row.total += 1
        row.blocked += blocked
        row.classes[str(cls)] += 1
        if cls.forbidding != blocked:
            row.mismatches += 1
            if len(examples) < MAX_REPORTED_MISMATCHES:
                examples.append((len(edges), sorted(edges), blocked, str(cls)))
    return Census(n, g, mode, [rows[k] for k in sizes], examples)
