"""Place cycles, Petersen graphs and cubic graphs, and draw them.

Run:  python demos/placements.py [output-dir]
SVG files go to the output directory (default: ./placements-out).
"""

import sys
from pathlib import Path

from gangulate import (
    cubic_graphs,
    disjoint_cycles,
    label_cubic,
    place_cubic,
    place_cycle,
    place_petersen,
    place_two_regular,
    render_svg,
)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "placements-out")
out.mkdir(parents=True, exist_ok=True)


def show(name, p):
    print(f"{name}: positions {[pos for _, pos in p.map]}")
    print(f"    witness diagonals {[tuple(d) for d in p.witness.sorted_diagonals()]} ({p.source})")
    (out / f"{name}.svg").write_text(render_svg(p.target, p.witness, title=name))


show("cycle_8_g4", place_cycle(8, 4))
show("cycles_3_5_g4", place_two_regular(disjoint_cycles([3, 5]), 4))
show("petersen_7_3_g4", place_petersen(7, 3, 4))

# Every connected cubic graph on 8 vertices: a labeling, then a fan from label 1.
for i, G in enumerate(cubic_graphs(8), start=1):
    lab = label_cubic(G)
    print(f"cubic graph {i}: labels {lab.labels} [{lab.kind}, {lab.source}]")
    show(f"cubic8_{i}", place_cubic(G, lab))

print(f"drawings written to {out}/")
