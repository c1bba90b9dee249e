"""The parabolic-scheme calculus.

A parabolic subgroup scheme containing the fixed Borel is encoded by its Levi
subset I and the height function phi on the positive roots off the Levi;
heights on Levi roots are an implicit infinity.  Containment of schemes is
pointwise comparison of heights, intersection is pointwise minimum.

Every scheme is an intersection of rank-one blocks, one anchored at each
simple root off the Levi.  The block catalog at a simple root alpha:

* Standard(m): height m on every alpha-supported root (Frobenius-fattened
  maximal reduced parabolic);
* VerySpecial(m): m+1 on short, m on long alpha-supported roots; exists only
  when the diagram has an edge of multiplicity p;
* ExoticH(m), ExoticL(m): the two G2, p=2 families at the short simple root,

      ExoticH(m): 2a1+a2 -> m+1, other a1-supported roots -> m
      ExoticL(m): a1, a1+a2 -> m+1, 2a1+a2, 3a1+a2, 3a1+2a2 -> m

Reconstruction recovers the minimal anchored block at each node and
re-intersects; a height function is valid exactly when this is the identity.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from .chevalley import vanishes_mod_p
from .errors import (
    EdgeHypothesisNotSatisfied,
    InvalidScheme,
    KernelNotContained,
    MismatchedSchemes,
)
from .rootsys import (
    LONG,
    SHORT,
    Root,
    RootSystem,
    RootSystemType,
    build_root_system,
    check_levi,
    levi_positive_roots,
    very_special_dual,
)


class _InfiniteHeight:
    """Sentinel for the height on Levi roots; absorbing for min."""

    _instance: Optional["_InfiniteHeight"] = None

    def __new__(cls) -> "_InfiniteHeight":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _InfiniteHeight()

Height = Union[int, _InfiniteHeight]


def height_min(a: Height, b: Height) -> Height:
    if a is INFINITE:
        return b
    if b is INFINITE:
        return a
    return a if a <= b else b


def height_ge(a: Height, b: Height) -> bool:
    if a is INFINITE:
        return True
    if b is INFINITE:
        return False
    return a >= b


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def _off_levi(rs: RootSystem, levi: FrozenSet[int]) -> Tuple[Root, ...]:
    inside = levi_positive_roots(rs, levi)
    return tuple(g for g in rs.positive_roots if g not in inside)


def edge_hypothesis(rs: RootSystem, p: int) -> bool:
    """The Dynkin diagram has an edge of multiplicity p (B/C/F4 at p=2,
    G2 at p=3)."""
    return not rs.is_simply_laced and rs.max_edge_multiplicity == p


class ParabolicScheme:
    """(root system, prime, Levi subset, heights off the Levi)."""

    __slots__ = ("rs", "p", "levi", "_phi", "_key")

    def __init__(
        self,
        rs: RootSystem,
        p: int,
        levi: Iterable[int],
        phi: Mapping[Root, int],
    ):
        if not _is_prime(p):
            raise InvalidScheme(f"characteristic {p} is not prime")
        self.rs = rs
        self.p = p
        self.levi = check_levi(rs, levi)
        domain = _off_levi(rs, self.levi)
        values: Dict[Root, int] = {}
        for g in domain:
            if g not in phi:
                raise InvalidScheme(f"phi missing value at {g}")
            v = phi[g]
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidScheme(f"phi({g}) = {v!r} is not a non-negative integer")
            values[g] = v
        if len(phi) != len(domain):
            extra = set(phi) - set(domain)
            raise InvalidScheme(f"phi defined off its domain at {sorted(extra, key=str)}")
        self._phi = values
        self._key = (
            str(rs.rtype),
            p,
            tuple(sorted(self.levi)),
            tuple(values[g] for g in domain),
        )

    @property
    def domain(self) -> Tuple[Root, ...]:
        return _off_levi(self.rs, self.levi)

    def height(self, gamma: Root) -> Height:
        """Height of the scheme on a positive root; INFINITE on Levi roots."""
        if gamma in self._phi:
            return self._phi[gamma]
        if not self.rs.is_positive_root(gamma):
            raise InvalidScheme(f"{gamma} is not a positive root of {self.rs.rtype}")
        return INFINITE

    def finite_height(self, gamma: Root) -> int:
        return self._phi[gamma]

    def phi_items(self) -> Tuple[Tuple[Root, int], ...]:
        return tuple((g, self._phi[g]) for g in self.domain)

    @property
    def max_height(self) -> int:
        return max(self._phi.values(), default=0)

    def key(self) -> Tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParabolicScheme) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        inner = ", ".join(f"{g}:{v}" for g, v in self.phi_items())
        return (
            f"ParabolicScheme({self.rs.rtype}, p={self.p}, "
            f"levi={sorted(self.levi)}, phi={{{inner}}})"
        )

    # -- serialisation -------------------------------------------------------

    def to_json_dict(self) -> Dict:
        return {
            "type": str(self.rs.rtype),
            "prime": self.p,
            "levi": sorted(self.levi),
            "phi": {
                json.dumps(list(g.coeffs), separators=(",", ":")): v
                for g, v in self.phi_items()
            },
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ParabolicScheme":
        try:
            rtype = RootSystemType.parse(data["type"])
            p = int(data["prime"])
            levi = [int(i) for i in data["levi"]]
            phi = {
                Root.from_coeffs(json.loads(k)): int(v)
                for k, v in data["phi"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidScheme(f"malformed scheme data: {exc}") from exc
        return cls(build_root_system(rtype), p, levi, phi)


def reduced_scheme(rs: RootSystem, p: int, levi: Iterable[int] = ()) -> ParabolicScheme:
    """The reduced parabolic P_I (phi identically zero off the Levi)."""
    I = check_levi(rs, levi)
    return ParabolicScheme(rs, p, I, {g: 0 for g in _off_levi(rs, I)})


def full_group_scheme(rs: RootSystem, p: int) -> ParabolicScheme:
    """The degenerate scheme P = G (Levi is everything, empty phi domain)."""
    return ParabolicScheme(rs, p, frozenset(range(1, rs.rank + 1)), {})


# ---------------------------------------------------------------------------
# Rank-one blocks


class BlockKind(enum.Enum):
    STANDARD = "standard"
    VERY_SPECIAL = "very_special"
    EXOTIC_H = "exotic_h"
    EXOTIC_L = "exotic_l"


@dataclass(frozen=True, order=True)
class RankOneBlock:
    """A catalog block anchored at a simple root."""

    alpha: int
    kind: BlockKind
    m: int

    def __str__(self) -> str:
        name = {
            BlockKind.STANDARD: "Standard",
            BlockKind.VERY_SPECIAL: "VerySpecial",
            BlockKind.EXOTIC_H: "ExoticH",
            BlockKind.EXOTIC_L: "ExoticL",
        }[self.kind]
        return f"{name}({self.m})@a{self.alpha}"


def standard_block(alpha: int, m: int) -> RankOneBlock:
    return RankOneBlock(alpha, BlockKind.STANDARD, m)


def very_special_block(alpha: int, m: int) -> RankOneBlock:
    return RankOneBlock(alpha, BlockKind.VERY_SPECIAL, m)


def exotic_h_block(m: int) -> RankOneBlock:
    return RankOneBlock(1, BlockKind.EXOTIC_H, m)


def exotic_l_block(m: int) -> RankOneBlock:
    return RankOneBlock(1, BlockKind.EXOTIC_L, m)


_G2 = RootSystemType.parse("G2")

# the five a1-supported positive roots of G2, by coefficient vector
_G2_A1 = Root.of(1, 0)
_G2_A1A2 = Root.of(1, 1)
_G2_2A1A2 = Root.of(2, 1)
_G2_3A1A2 = Root.of(3, 1)
_G2_3A12A2 = Root.of(3, 2)


def _check_block(rs: RootSystem, p: int, block: RankOneBlock) -> None:
    if not 1 <= block.alpha <= rs.rank:
        raise InvalidScheme(f"anchor a{block.alpha} outside 1..{rs.rank}")
    if block.m < 0:
        raise InvalidScheme(f"negative block height {block.m}")
    if block.kind is BlockKind.VERY_SPECIAL and not edge_hypothesis(rs, p):
        raise EdgeHypothesisNotSatisfied(
            f"VerySpecial block needs an edge of multiplicity {p} in {rs.rtype}"
        )
    if block.kind in (BlockKind.EXOTIC_H, BlockKind.EXOTIC_L):
        if rs.rtype != _G2 or p != 2 or block.alpha != 1:
            raise InvalidScheme(
                "exotic blocks exist only in G2, characteristic 2, at the short simple root"
            )


def block_phi(rs: RootSystem, p: int, block: RankOneBlock) -> ParabolicScheme:
    """Height function of one catalog block (Levi is everything but the anchor)."""
    _check_block(rs, p, block)
    levi = frozenset(range(1, rs.rank + 1)) - {block.alpha}
    m = block.m
    phi: Dict[Root, int] = {}
    for g in _off_levi(rs, levi):
        if block.kind is BlockKind.STANDARD:
            phi[g] = m
        elif block.kind is BlockKind.VERY_SPECIAL:
            phi[g] = m + 1 if rs.length_class(g) == SHORT else m
        elif block.kind is BlockKind.EXOTIC_H:
            phi[g] = m + 1 if g == _G2_2A1A2 else m
        else:
            phi[g] = m + 1 if g in (_G2_A1, _G2_A1A2) else m
    return ParabolicScheme(rs, p, levi, phi)


def block_anchor_height(rs: RootSystem, block: RankOneBlock) -> int:
    """Height of the block on its own anchor root."""
    alpha = rs.simple_roots[block.alpha - 1]
    if block.kind is BlockKind.STANDARD or block.kind is BlockKind.EXOTIC_H:
        return block.m
    if block.kind is BlockKind.VERY_SPECIAL:
        return block.m + 1 if rs.length_class(alpha) == SHORT else block.m
    return block.m + 1  # ExoticL: a1 is one of its height-(m+1) roots


# ---------------------------------------------------------------------------
# Lattice operations


def _check_compatible(P: ParabolicScheme, Q: ParabolicScheme) -> None:
    if P.rs != Q.rs or P.p != Q.p:
        raise MismatchedSchemes(
            f"({P.rs.rtype}, p={P.p}) vs ({Q.rs.rtype}, p={Q.p})"
        )


def intersect(P: ParabolicScheme, Q: ParabolicScheme) -> ParabolicScheme:
    """Pointwise minimum of heights; the scheme-theoretic intersection."""
    _check_compatible(P, Q)
    levi = P.levi & Q.levi
    phi: Dict[Root, int] = {}
    for g in _off_levi(P.rs, levi):
        v = height_min(P.height(g), Q.height(g))
        assert v is not INFINITE
        phi[g] = v
    return ParabolicScheme(P.rs, P.p, levi, phi)


def intersect_all(rs: RootSystem, p: int, schemes: Iterable[ParabolicScheme]) -> ParabolicScheme:
    out = full_group_scheme(rs, p)
    for s in schemes:
        out = intersect(out, s)
    return out


def contains(P: ParabolicScheme, Q: ParabolicScheme) -> bool:
    """Whether P contains Q: heights of P dominate pointwise (Levi roots at
    infinity)."""
    _check_compatible(P, Q)
    if not P.levi >= Q.levi:
        return False
    return all(height_ge(P.height(g), v) for g, v in Q.phi_items())


# ---------------------------------------------------------------------------
# Generated blocks and reconstruction


def anchored_candidates(
    rs: RootSystem, p: int, alpha: int, anchor: int
) -> List[RankOneBlock]:
    """Catalog blocks at alpha whose height on alpha equals `anchor`,
    in increasing containment order (they always form a chain)."""
    out: List[RankOneBlock] = []
    if rs.rtype == _G2 and p == 2 and alpha == 1:
        if anchor >= 1:
            out.append(exotic_l_block(anchor - 1))
        out.append(standard_block(alpha, anchor))
        out.append(exotic_h_block(anchor))
    elif edge_hypothesis(rs, p):
        if rs.simple_index_class(alpha) == SHORT:
            if anchor >= 1:
                out.append(very_special_block(alpha, anchor - 1))
            out.append(standard_block(alpha, anchor))
        else:
            out.append(standard_block(alpha, anchor))
            out.append(very_special_block(alpha, anchor))
    else:
        out.append(standard_block(alpha, anchor))
    return out


def generated_block(P: ParabolicScheme, alpha: int) -> RankOneBlock:
    """The block of the smallest subgroup containing P and the maximal reduced
    parabolic at alpha.

    The anchor height is pinned to phi(alpha); among blocks with that anchor
    (always a chain, so the minimum is unambiguous) the smallest one
    containing P is returned.  For an invalid height function no anchored
    block may contain P; the largest anchored candidate is then returned,
    and re-intersection will expose the mismatch.
    """
    if alpha in P.levi or not 1 <= alpha <= P.rs.rank:
        raise InvalidScheme(f"a{alpha} is not outside the Levi {sorted(P.levi)}")
    anchor = P.finite_height(P.rs.simple_roots[alpha - 1])
    cands = anchored_candidates(P.rs, P.p, alpha, anchor)
    for b in cands:
        if contains(block_phi(P.rs, P.p, b), P):
            return b
    return cands[-1]


def reconstruct(P: ParabolicScheme) -> ParabolicScheme:
    """Intersection of the generated blocks over the simple roots off the
    Levi; equals P exactly when P is a genuine parabolic scheme."""
    blocks = [
        block_phi(P.rs, P.p, generated_block(P, a))
        for a in sorted(set(range(1, P.rs.rank + 1)) - P.levi)
    ]
    if not blocks:
        return P
    return intersect_all(P.rs, P.p, blocks)


def is_valid(P: ParabolicScheme) -> bool:
    """Validity as the reconstruction fixpoint."""
    try:
        return reconstruct(P) == P
    except Exception:
        return False


# ---------------------------------------------------------------------------
# Commutator inequality check


def enne_check(P: ParabolicScheme) -> List[Tuple[Root, Root, Root]]:
    """Violations of phi(gamma+delta) >= min(phi(gamma), phi(delta)) over
    pairs of positive roots with gamma+delta a positive root, gamma-delta
    not a root, and structure constant nonzero mod p.

    Necessary for genuine schemes, strictly weaker than is_valid.  The
    condition is symmetric in the pair (the chain is empty both ways when
    gamma - delta is not a root), so each violating pair is reported once,
    components in lexicographic order.
    """
    rs = P.rs
    pos = rs.positive_roots
    bad: List[Tuple[Root, Root, Root]] = []
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            gamma, delta = pos[a], pos[b]
            total = gamma + delta
            if not rs.is_positive_root(total):
                continue
            if rs.is_root(gamma - delta):
                continue
            if vanishes_mod_p(rs, gamma, delta, P.p):
                continue
            lo = height_min(P.height(gamma), P.height(delta))
            if not height_ge(P.height(total), lo):
                bad.append((gamma, delta, total))
    bad.sort(key=lambda t: (t[0].coeffs, t[1].coeffs))
    return bad


# ---------------------------------------------------------------------------
# Isogeny transport


class KernelKind(enum.Enum):
    FROBENIUS = "frobenius"
    VERY_SPECIAL_KERNEL = "very_special_kernel"


@dataclass(frozen=True)
class KernelRecord:
    """A kernel stripped during normalisation: the m-th Frobenius kernel, or
    the kernel of (very special isogeny) composed with the m-th Frobenius."""

    kind: KernelKind
    m: int

    def __str__(self) -> str:
        if self.kind is KernelKind.FROBENIUS:
            return f"Frobenius({self.m})"
        return f"VerySpecialKernel({self.m})"


def frobenius_pullback(P: ParabolicScheme, m: int) -> ParabolicScheme:
    """Pull back along the m-th iterated Frobenius: add m to every height."""
    if m < 0:
        raise InvalidScheme("Frobenius pull-back needs m >= 0")
    return ParabolicScheme(
        P.rs, P.p, P.levi, {g: v + m for g, v in P.phi_items()}
    )


def _frobenius_quotient(P: ParabolicScheme, m: int) -> ParabolicScheme:
    return ParabolicScheme(
        P.rs, P.p, P.levi, {g: v - m for g, v in P.phi_items()}
    )


def _require_edge(P: ParabolicScheme) -> None:
    if not edge_hypothesis(P.rs, P.p):
        raise EdgeHypothesisNotSatisfied(
            f"{P.rs.rtype} has no edge of multiplicity {P.p}"
        )


def vsi_pullback(P: ParabolicScheme) -> ParabolicScheme:
    """Pull back along the very special isogeny (dual system -> this system).

    The result lives on the dual system; heights transport as
    psi(image of gamma) = phi(gamma) + 1 for gamma long, phi(gamma) for
    gamma short.
    """
    _require_edge(P)
    dual, bij = very_special_dual(P.rs)
    levi = frozenset(bij.simple_map[i - 1] for i in P.levi)
    phi: Dict[Root, int] = {}
    for g, v in P.phi_items():
        phi[bij.forward(g)] = v + 1 if P.rs.length_class(g) == LONG else v
    return ParabolicScheme(dual, P.p, levi, phi)


def vsi_pushforward(P: ParabolicScheme) -> ParabolicScheme:
    """Image along the very special isogeny; inverse of vsi_pullback.

    Defined only when the minimal noncentral height-one kernel is contained,
    i.e. every short root off the Levi has height >= 1.
    """
    _require_edge(P)
    for g, v in P.phi_items():
        if P.rs.length_class(g) == SHORT and v < 1:
            raise KernelNotContained(f"height 0 at short root {g}")
    dual, bij = very_special_dual(P.rs)
    levi = frozenset(bij.simple_map[i - 1] for i in P.levi)
    phi: Dict[Root, int] = {}
    for g, v in P.phi_items():
        phi[bij.forward(g)] = v - 1 if P.rs.length_class(g) == SHORT else v
    return ParabolicScheme(dual, P.p, levi, phi)


# ---------------------------------------------------------------------------
# Normalisation


@dataclass(frozen=True)
class NormalizationResult:
    scheme: ParabolicScheme
    stripped: Tuple[KernelRecord, ...]


def _largest_kernel(P: ParabolicScheme) -> Optional[KernelRecord]:
    values = [v for _, v in P.phi_items()]
    if not values:
        return None
    m = min(values)
    if edge_hypothesis(P.rs, P.p):
        shorts = [v for g, v in P.phi_items() if P.rs.length_class(g) == SHORT]
        if shorts and min(shorts) >= m + 1:
            return KernelRecord(KernelKind.VERY_SPECIAL_KERNEL, m)
    if m >= 1:
        return KernelRecord(KernelKind.FROBENIUS, m)
    return None


def is_normalized(P: ParabolicScheme) -> bool:
    """No isogeny kernel with no central factor is contained in P."""
    return _largest_kernel(P) is None


def normalize(P: ParabolicScheme) -> NormalizationResult:
    """Strip the largest contained kernel repeatedly.

    Stripping a Frobenius kernel subtracts its height; stripping a very
    special kernel additionally pushes forward to the dual system.  The
    records list the kernels in stripping order (largest first).
    """
    stripped: List[KernelRecord] = []
    cur = P
    while True:
        k = _largest_kernel(cur)
        if k is None:
            return NormalizationResult(cur, tuple(stripped))
        if k.kind is KernelKind.FROBENIUS:
            cur = _frobenius_quotient(cur, k.m)
        else:
            cur = vsi_pushforward(_frobenius_quotient(cur, k.m))
        stripped.append(k)
