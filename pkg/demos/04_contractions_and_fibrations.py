"""Smooth contractions, normalization, and fibration towers.

Nodes whose generated block is reduced give locally trivial contractions
with smooth total space; iterating them writes the space as a tower over
Picard-rank-one bases.  The two exotic families in G2 obstruct every such
contraction.
"""

from parabolics import (
    CensusQuery,
    RootSystemType,
    block_phi,
    exotic_l_block,
    fibration_sequence,
    hasse_diagram,
    hasse_to_dot,
    intersect,
    normalize,
    p_sm,
    root_system,
    smooth_contraction_roots,
    standard_block,
    very_special_block,
)
from parabolics.errors import NoSmoothContraction

g2 = root_system("G2")
b3 = root_system("B3")

print("== normalization strips contained kernels ==")
P = intersect(block_phi(b3, 2, standard_block(1, 2)),
              intersect(block_phi(b3, 2, standard_block(2, 3)),
                        block_phi(b3, 2, standard_block(3, 2))))
res = normalize(P)
print(f"  input heights  {[v for _, v in P.phi_items()]}")
print(f"  output heights {[v for _, v in res.scheme.phi_items()]} "
      f"on {res.scheme.rs.rtype}")
print(f"  stripped: {[str(k) for k in res.stripped]}")

print("\n== smooth contraction nodes and the minimal reduced overgroup ==")
Q = intersect(block_phi(g2, 2, standard_block(1, 0)),
              block_phi(g2, 2, standard_block(2, 2)))
print(f"  heights {[v for _, v in Q.phi_items()]}")
print(f"  smooth nodes: {sorted(smooth_contraction_roots(Q))}")
sm = p_sm(Q)
print(f"  reduced overgroup levi: {sorted(sm.reduced.levi)}, "
      f"complement kernels: {[str(k) for k in sm.complement_kernels]}")

print("\n== fibration tower for the same scheme ==")
for s in fibration_sequence(Q):
    fiber = ", ".join(
        f"{f.scheme.rs.rtype} at nodes {list(f.labels)}" for f in s.fiber
    ) or "point"
    print(f"  base ({s.target_type}, node {s.target_alpha}) "
          f"dim {s.base_dimension}; fiber {fiber}; "
          f"stripped {[str(k) for k in s.stripped]}")

print("\n== a very special kernel can appear inside the tower ==")
R = intersect(block_phi(b3, 2, standard_block(1, 0)),
              intersect(block_phi(b3, 2, very_special_block(2, 0)),
                        block_phi(b3, 2, standard_block(3, 1))))
for s in fibration_sequence(R):
    print(f"  base ({s.target_type}, node {s.target_alpha}); "
          f"stripped {[str(k) for k in s.stripped]}")

print("\n== the exotic obstruction ==")
E = intersect(block_phi(g2, 2, exotic_l_block(0)),
              block_phi(g2, 2, standard_block(2, 1)))
try:
    fibration_sequence(E)
except NoSmoothContraction as exc:
    print(f"  NoSmoothContraction: {exc}")

print("\n== the block catalog as a containment diagram (DOT) ==")
q = CensusQuery(RootSystemType.parse("G2"), 2, frozenset({2}), 2)
print(hasse_to_dot(hasse_diagram(q)))
