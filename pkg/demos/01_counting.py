"""Counting integral ribbon graphs.

N_{g,n}(p_1..p_n) is the weighted number of connected ribbon graphs of
genus g whose n labeled boundary faces have the prescribed integer
perimeters, each graph counted with weight 1/|Aut|.  The counts are
rational, vanish whenever the total perimeter is odd, and are symmetric
in the perimeters.
"""

from ribbonvol import census, count
from ribbonvol.lattice import oracle_n11

print("Small sphere counts (g=0, n=3): the count is 1 for every even total")
for p in [(2, 3, 5), (1, 1, 2), (4, 4, 4), (1, 2, 4)]:
    print(f"  N(0,3){p} = {count(0, 3, p)}")

print()
print("One-boundary torus (g=1, n=1) against the independent one-vertex")
print("enumeration (two graph shapes, automorphism orders 6 and 4):")
for p in range(2, 14, 2):
    print(f"  N(1,1)({p:2d}) = {count(1, 1, (p,))!s:>8}   oracle: {oracle_n11(p)}")

print()
print("A census table collects every vector up to a perimeter bound:")
table = census(0, 4, 8)
for p, value in table.rows():
    if value:
        print(f"  N(0,4){p} = {value}")

print()
print("Genus two needs room to breathe -- the first nonzero count:")
for p in range(2, 11, 2):
    print(f"  N(2,1)({p}) = {count(2, 1, (p,))}")
