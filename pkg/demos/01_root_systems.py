"""Tour of the exact root-system layer.

Builds a few systems, shows pairings and length classes, then the two
distinguished constructions: the length-exchanging duality for multiply
laced types and the long-root D4 sitting inside F4.
"""

from parabolics import (
    find_incidence_root,
    long_root_subsystem,
    root_system,
    very_special_dual,
)

print("== B2 ==")
b2 = root_system("B2")
for g in b2.positive_roots:
    print(f"  {str(g):8s} coeffs {list(g.coeffs)}  {b2.length_class(g)}")

print("\n== G2 pairing table on the simple roots ==")
g2 = root_system("G2")
a1, a2 = g2.simple_roots
for x, y in [(a1, a1), (a1, a2), (a2, a2)]:
    print(f"  ({x}, {y}) = {g2.pairing(x, y)}")

print("\n== duality B2 <-> C2 ==")
dual, bij = very_special_dual(b2)
print(f"  dual type: {dual.rtype}")
for g in b2.positive_roots:
    print(f"  {str(g):8s} ({b2.length_class(g):5s}) -> "
          f"{str(bij.forward(g)):8s} ({dual.length_class(bij.forward(g))})")

print("\n== the 24 long roots of F4 form a D4 ==")
f4 = root_system("F4")
sub = long_root_subsystem(f4)
print(f"  count: {len(sub.roots)}, type: {sub.subsystem_type}")
for b in sub.basis:
    eps = tuple(str(x) for x in f4.epsilon(b))
    print(f"  basis {str(b):12s} epsilon {eps}")

print("\n== incidence roots for split node sets ==")
for label, levi, left in [("A3", {2}, {1}), ("B3", set(), {3}), ("F4", set(), {1})]:
    rs = root_system(label)
    l, delta = find_incidence_root(rs, levi, left)
    print(f"  {label}, levi {sorted(levi)}, left {sorted(left)}: "
          f"l = {l}, delta = {delta}, (delta, a{l}) = "
          f"{rs.pairing(delta, rs.simple_roots[l - 1])}")
