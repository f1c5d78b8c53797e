"""Tour of the finite-field layer and the N x N phase-space geometry.

Run with:  python demos/01_field_and_phase_space.py
"""

import numpy as np

from dwfnet import GF2m, PhaseSpace

# --- GF(4) arithmetic --------------------------------------------------
fld = GF2m(2)
names = {0: "0", 1: "1", 2: "w", 3: "w^2"}
print("GF(4) multiplication table (w = primitive root of x^2 + x + 1):")
for a in fld.elements():
    row = [names[fld.mul(a, b)] for b in fld.elements()]
    print(f"  {names[a]:>3} | " + " ".join(f"{x:>3}" for x in row))

print("\ntrace values:", {names[a]: fld.trace(a) for a in fld.elements()})
print("polynomial basis:", [names[e] for e in fld.basis])
print("trace-dual basis:", [names[e] for e in fld.dual_basis])

# --- the 4 x 4 phase space ---------------------------------------------
ps = PhaseSpace(fld)
print(f"\n{ps.order} x {ps.order} phase space: {len(ps.striations)} striations")
for st in ps.striations:
    print(f"  striation {st.striation_id}: ray direction ({names[st.a]}, {names[st.b]})")

# every striation partitions the grid into parallel lines
st = ps.striations[2]
print(f"\nlines of striation {st.striation_id} as offset grids (value = line index):")
grid = np.zeros((4, 4), dtype=int)
for c, line in enumerate(st.lines):
    for pt in line.points:
        grid[pt.q, pt.p] = c
print(grid)

# any two lines from different striations intersect in exactly one point
counts = set()
for sa in ps.striations:
    for sb in ps.striations:
        if sa.striation_id >= sb.striation_id:
            continue
        for la in sa.lines:
            for lb in sb.lines:
                counts.add(len(set(la.points) & set(lb.points)))
print("\npairwise intersection sizes across striations:", counts)
