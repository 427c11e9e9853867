"""Vertices in convex position: cyclic arithmetic, chords, crossings, instances.

Vertices are ``0 .. n-1`` in clockwise order.  Nothing here uses coordinates;
convex position is captured entirely by the cyclic order.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import OutOfRange, ParseError, VertexOutOfRange


class Edge(NamedTuple):
    a: int
    b: int


def edge(u: int, v: int) -> Edge:
    """Normalized edge with the smaller endpoint first."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return Edge(u, v) if u < v else Edge(v, u)


def _check(n: int, e: Edge) -> None:
    a, b = e
    if not (0 <= a < n and 0 <= b < n) or a == b:
        raise OutOfRange(f"edge {tuple(e)} invalid for n={n}")


def cyclic_gap(n: int, e: Edge) -> int:
    """Cyclic distance between the endpoints of ``e``."""
    _check(n, e)
    d = abs(e[1] - e[0])
    return min(d, n - d)


def cyclic_distance(n: int, i: int, j: int) -> int:
    d = (j - i) % n
    return min(d, n - d)


def is_boundary_edge(n: int, e: Edge) -> bool:
    return cyclic_gap(n, e) == 1


def edges_cross(n: int, e1: Edge, e2: Edge) -> bool:
    """True iff the chords interleave (no shared endpoint)."""
    _check(n, e1)
    _check(n, e2)
    a, b = sorted(e1)
    c, d = e2
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def gap_is_one_mod(n: int, g: int, u: int, v: int) -> bool:
    """|u - v| == 1 (mod g-2), tested on both arcs.

    Either arc qualifying is enough.  When n = g + t(g-2) the two arcs always
    agree, so the rule only matters for the reduced instances built during
    recursion, which are themselves admissible.
    """
    m = g - 2
    d = (v - u) % n
    return d % m == 1 % m or (n - d) % m == 1 % m


def admissible_params(n: int, g: int) -> Optional[int]:
    """Return t with n = g + t(g-2), or None."""
    if n < 3 or g < 3 or n < g:
        return None
    t, r = divmod(n - g, g - 2)
    return t if r == 0 else None


def chords(n: int) -> list[Edge]:
    """All non-boundary edges of the convex n-gon, lexicographic."""
    return [Edge(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]


def short_diagonal(n: int, g: int, j: int) -> Edge:
    """The chord v_j v_{j+g-1}."""
    return edge(j % n, (j + g - 1) % n)


@dataclass(frozen=True)
class Instance:
    """A convex K_n with face size g and a forbidden edge set.

    Boundary edges are allowed in ``forbidden`` at construction time; the
    operations that require chord-only sets check for themselves.
    """

    n: int
    g: int
    forbidden: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 3:
            raise OutOfRange(f"n must be >= 3, got {self.n}")
        if self.g < 3:
            raise OutOfRange(f"g must be >= 3, got {self.g}")
        norm = frozenset(edge(*e) for e in self.forbidden)
        for e in norm:
            _check(self.n, e)
        object.__setattr__(self, "forbidden", norm)

    @property
    def t(self) -> Optional[int]:
        return admissible_params(self.n, self.g)

    @property
    def size(self) -> int:
        return len(self.forbidden)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.forbidden)

    def boundary_edges(self) -> list[Edge]:
        return [e for e in self.sorted_edges() if is_boundary_edge(self.n, e)]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.forbidden if v in e)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(self.n)}
        for a, b in self.forbidden:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def with_edges(self, edges: Iterable) -> "Instance":
        return Instance(self.n, self.g, frozenset(edges))

    def __str__(self):
        return format_instance(self).strip().replace("\n", "; ")


def relabel(inst: Instance, shift: int = 0, reflect: bool = False) -> Instance:
    """Apply v -> (±v + shift) mod n to every forbidden edge."""
    n = inst.n

    def s(v):
        return ((-v if reflect else v) + shift) % n

    return inst.with_edges(edge(s(a), s(b)) for a, b in inst.forbidden)


def dihedral_images(inst: Instance) -> Iterator[Instance]:
    for reflect in (False, True):
        for shift in range(inst.n):
            yield relabel(inst, shift, reflect)


def canonical_form(inst: Instance) -> Instance:
    """Dihedral image with the lexicographically least sorted edge list."""
    best = min(dihedral_images(inst), key=lambda x: x.sorted_edges())
    return best


def remove_vertices(inst: Instance, drop: Iterable[int], g: Optional[int] = None) -> Instance:
    """Delete vertices and collapse labels, preserving cyclic order."""
    drop = set(drop)
    keep = [v for v in range(inst.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [edge(index[a], index[b]) for a, b in inst.forbidden if a in index and b in index]
    return Instance(len(keep), inst.g if g is None else g, frozenset(edges))


def parse_instance(text) -> Instance:
    """Parse the ``n g`` / ``i j`` line format (bytes or str)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"not an integer pair: {line!r}", lineno) from None
        if header is None:
            if x < 3 or y < 3:
                raise ParseError(f"need n >= 3 and g >= 3, got n={x} g={y}", lineno)
            header = (x, y)
            continue
        n = header[0]
        if not (0 <= x < n and 0 <= y < n):
            raise VertexOutOfRange(f"vertex out of range 0..{n - 1}: {line!r}", lineno)
        if x == y:
            raise ParseError(f"loop edge {line!r}", lineno)
        e = edge(x, y)
        if e in seen:
            raise ParseError(f"duplicate edge {tuple(e)}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError("missing 'n g' header", None)
    return Instance(header[0], header[1], frozenset(edges))


def format_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{inst.n} {inst.g}")
    lines.extend(f"{a} {b}" for a, b in inst.sorted_edges())
    return "\n".join(lines) + "\n"


def load_instance(path) -> Instance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


@dataclass(frozen=True)
class GAngulation:
    """Diagonals of a g-angulation plus its faces (each ascending)."""

    n: int
    g: int
    diagonals: frozenset
    faces: tuple

    @classmethod
    def from_diagonals(cls, n: int, g: int, diagonals: Iterable) -> "GAngulation":
        diags = frozenset(edge(*d) for d in diagonals)
        return cls(n, g, diags, tuple(polygon_faces(n, diags)))

    def sorted_diagonals(self) -> list[Edge]:
        return sorted(self.diagonals)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "diagonals": [list(d) for d in self.sorted_diagonals()],
            "faces": [list(f) for f in self.faces],
        }


def polygon_faces(n: int, diagonals: Iterable[Edge]) -> list[tuple[int, ...]]:
    """Split the n-gon along pairwise non-crossing diagonals.

    Faces come back as ascending vertex tuples, sorted.  Crossing diagonals
    are not detected here; callers validate first.
    """
    pending = [tuple(range(n))]
    faces = []
    diags = sorted(set(diagonals), key=lambda d: (d[1] - d[0], d))
    for a, b in reversed(diags):
        # longest first keeps each split inside a single current piece
        for k, poly in enumerate(pending):
            pos = {v: i for i, v in enumerate(poly)}
            if a in pos and b in pos and abs(pos[a] - pos[b]) not in (1, len(poly) - 1):
                i, j = sorted((pos[a], pos[b]))
                pending[k : k + 1] = [poly[i : j + 1], poly[j:] + poly[: i + 1]]
                break
    for poly in pending:
        faces.append(tuple(sorted(poly)))
    return sorted(faces)
