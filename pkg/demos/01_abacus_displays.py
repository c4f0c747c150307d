"""Abacus displays: beads, windows, duality, and the one-runner collapse.

A pair (multipartition, multicharge) is drawn on r runners, one per
component, with beads at the beta-numbers part_j - j + charge.  Run:

    python demos/01_abacus_displays.py
"""

from akblocks import AbacusPair, dual, is_complete, render, uglov

pair = AbacusPair(((2, 1), (3, 2), (4, 3, 1)), (0, 2, 1), 3)
print(f"multipartition {pair.mp} with multicharge {pair.charge} at e = {pair.e}")
print(f"rank r = {pair.r}, size n = {pair.n}")
print()

lo, hi = pair.bounds()
print(f"interesting columns live in [{lo}, {hi}); the display (top row last printed first):")
print(render(pair, (lo - 1, hi)))
print()

print("bead queries on row 3:", [c for c in range(-3, 6) if pair.has_bead(3, c)])
print("row 3 floor (everything below is beaded):", pair.row_floor(3))
print("complete (nested rows)?", is_complete(pair))
print()

d = dual(pair)
print("dual pair:", d.mp, "with multicharge", d.charge)
print(render(d, (-6, 4)))
print()

img = uglov(pair)
print("one-runner collapse: partition", img.partition, "with charge", img.charge)
print("(the charge is always the sum of the multicharge:", sum(pair.charge), ")")
