"""Anticanonical characters and exhaustive Fano censuses.

The anticanonical character weighs each positive root off the Levi by
p^height; the space is Fano when it pairs strictly positively with the
non-Levi simple roots.  Past a threshold computable from the root system,
a kernel gap certifies failure.
"""

from parabolics import (
    CensusQuery,
    RootSystemType,
    anticanonical_character,
    block_phi,
    character_pairing,
    exotic_h_block,
    fano_census,
    fano_summary,
    incidence_threshold,
    intersect,
    not_fano_certificate,
    root_system,
    standard_block,
)

g2 = root_system("G2")
a1, a2 = g2.simple_roots

print("== the G2 characteristic-2 families and their pairings ==")
print("   m | flat a1   | flat a2   | exotic")
for m in range(1, 6):
    b = intersect(block_phi(g2, 2, standard_block(1, m)),
                  block_phi(g2, 2, standard_block(2, 0)))
    c = intersect(block_phi(g2, 2, standard_block(1, 0)),
                  block_phi(g2, 2, standard_block(2, m)))
    d = intersect(block_phi(g2, 2, exotic_h_block(0)),
                  block_phi(g2, 2, standard_block(2, m)))
    vals = (
        character_pairing(g2, anticanonical_character(b), a2),
        character_pairing(g2, anticanonical_character(c), a1),
        character_pairing(g2, anticanonical_character(d), a1),
    )
    print(f"  {m:2d} | {vals[0]:9d} | {vals[1]:9d} | {vals[2]:6d}")
print("  (9 - 3*2^m, 5 - 3*2^m, 6 - 3*2^m: only the first family at m = 1 stays positive)")

print("\n== thresholds ==")
for label in ("A2", "B2", "B3", "F4", "G2"):
    print(f"  H({label}) = {incidence_threshold(root_system(label))}")

print("\n== a certificate for the incidence family ==")
a2sys = root_system("A2")
P = intersect(block_phi(a2sys, 2, standard_block(1, 0)),
              block_phi(a2sys, 2, standard_block(2, 4)))
cert = not_fano_certificate(P)
print(f"  heights {[v for _, v in P.phi_items()]}")
print(f"  beta_l = a{cert.beta_l}, delta = {cert.delta}, "
      f"(chi, beta_l) = {cert.pairing_value}")

print("\n== normalized census of G2 at characteristic 2 ==")
q = CensusQuery(RootSystemType.parse("G2"), 2, frozenset(), 5, normalized_only=True)
rows = fano_census(q)
for r in rows:
    heights = [v for _, v in r.scheme.phi_items()]
    print(f"  {heights}  {'fano' if r.fano else 'not fano'}")
print(f"  summary: {fano_summary(rows)}")
