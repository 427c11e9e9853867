"""Walk through forbidden sets on small polygons.

Run:  python demos/blocking_sets.py
"""

from gangulate import (
    Instance,
    classify_forbidding,
    construct_small,
    count_gangulations,
    decide,
    detect_alpha_pairs,
    generate_f_stars,
)
from gangulate.census import census

# Quadrangulations of the hexagon: three, one per long diagonal.
hexagon = Instance(6, 4)
print("quadrangulations of K_6:", count_gangulations(hexagon))

# Forbidding the three long diagonals leaves none.  Three chords is n - g + 1,
# the smallest size that can block.
fstar = hexagon.with_edges([(0, 3), (1, 4), (2, 5)])
d = decide(fstar)
print("F = {03, 14, 25}:", d.verdict, "as", d.fclass)

# With only n - g chords forbidden the inductive construction always succeeds.
two = hexagon.with_edges([(0, 3), (1, 4)])
print("F = {03, 14}: construction uses", [tuple(d) for d in construct_small(two).sorted_diagonals()])

# Every minimal blocking set at (8, 4), up to rotation and reflection.
for inst in generate_f_stars(8, 4):
    print("  minimal blocker on K_8:", [tuple(e) for e in inst.sorted_edges()])

# A larger example on 14 vertices with pentagon faces; its blocking structure
# hinges on the pair {v6, v10}.
j2 = Instance(
    14,
    5,
    frozenset(
        [(0, 4), (0, 7), (1, 5), (1, 8), (1, 11), (2, 9), (2, 12), (3, 7), (3, 10), (3, 13), (5, 9), (6, 10), (6, 13)]
    ),
)
print("14-gon example:", classify_forbidding(j2), "alpha pairs", [tuple(p) for p in detect_alpha_pairs(j2)])

# Exhaustive table: recognizers against the oracle for every F of 6 or 7 chords.
table = census(8, 4, sizes=[6, 7])
for row in table.rows:
    print(f"  |F|={row.size}: {row.total} sets, {row.blocked} blocked, classes {dict(row.classes)}")
print("disagreements:", table.mismatches)
