"""Straight-line Brauer trees: projectives, cell chains, and the poset.

Finite-type blocks are Morita equivalent to algebras of this shape, so
these chains are the combinatorial cross-check for finite verdicts.
Run:

    python demos/04_brauer_lines.py
"""

from akblocks import BrauerLine, cell_chains, multiplication_poset
from akblocks.brauer import projective_structure


def show_cell(c):
    return f"L{c.top}" if c.simple else f"(L{c.top}/L{c.bottom})"


line = BrauerLine(edges=4, vertex=3, multiplicity=3)
print(f"a line with {line.edges} edges, exceptional vertex {line.vertex} of multiplicity {line.multiplicity}")
print()

for edge in (1, 2, 3):
    p = projective_structure(line, edge)
    print(f"projective at edge {edge}: top L{p['top']}, arms {p['left_arm']} and {p['right_arm']}, socle L{p['socle']}")
print()

t1, t2 = cell_chains(line)
print("ascending cell chain: ", " < ".join(show_cell(c) for c in t1))
print("descending cell chain:", " < ".join(show_cell(c) for c in t2))
print()

poset = multiplication_poset(line)


def label(p):
    sup = f"^{p.copy}" if p.copy else ""
    star = "*" if p.in_lambda0 else ""
    return f"a{p.edge}{sup}{star}"


print("multiplication poset (simple-indexing labels starred):")
print("  " + " < ".join(label(p) for p in poset))
print()

print("degenerate single-edge line, multiplicity 4:")
t1, _ = cell_chains(BrauerLine(1, 1, 4))
print("  " + " < ".join(show_cell(c) for c in t1))
