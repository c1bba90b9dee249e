"""The rank-one block catalog and blockwise reconstruction.

A scheme is stored as its height function; intersecting blocks is a
pointwise minimum, and reconstruction finds the smallest catalog block over
each node containing the scheme.  A height function is a genuine scheme
exactly when reconstruction returns it unchanged.
"""

from parabolics import (
    ParabolicScheme,
    Root,
    block_phi,
    exotic_h_block,
    generated_block,
    intersect,
    is_valid,
    rank_one_catalog,
    reconstruct,
    root_system,
    standard_block,
)

g2 = root_system("G2")

print("== catalog at the short node of G2, characteristic 2, heights <= 1 ==")
for b in rank_one_catalog(g2, 2, 1, 1):
    P = block_phi(g2, 2, b)
    print(f"  {str(b):16s} {{{', '.join(f'{g}:{v}' for g, v in P.phi_items())}}}")

print("\n== intersect two blocks and read the heights ==")
P = intersect(block_phi(g2, 2, exotic_h_block(0)),
              block_phi(g2, 2, standard_block(2, 3)))
for g, v in P.phi_items():
    print(f"  phi({g}) = {v}")

print("\n== generated blocks recover the factors ==")
for a in (1, 2):
    print(f"  node a{a}: {generated_block(P, a)}")
print(f"  reconstruction fixpoint: {reconstruct(P) == P}")

print("\n== a height function that fails validity ==")
a2 = root_system("A2")
bad = ParabolicScheme(a2, 2, frozenset(),
                      {Root.of(1, 0): 1, Root.of(0, 1): 1, Root.of(1, 1): 2})
rec = reconstruct(bad)
print(f"  input  {[v for _, v in bad.phi_items()]}")
print(f"  output {[v for _, v in rec.phi_items()]}")
print(f"  is_valid: {is_valid(bad)}")

print("\n== the thickened node can generate a non-flat block ==")
b2 = root_system("B2")
Q = intersect(block_phi(b2, 2, standard_block(1, 0)),
              block_phi(b2, 2, standard_block(2, 3)))
print(f"  B2 heights {[v for _, v in Q.phi_items()]}")
print(f"  generated block at a2: {generated_block(Q, 2)}")
