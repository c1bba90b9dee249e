"""Geometric invariants of the homogeneous space attached to a scheme.

The anticanonical character is chi = sum of p^phi(gamma) * gamma over the
positive roots off the Levi; the space is Fano exactly when chi pairs
strictly positively with every simple root off the Levi.  Heights enter
through p^phi, so all character arithmetic uses exact (unbounded) integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import ExoticBlocksPresent, InvalidScheme, NoSmoothContraction
from .phi import (
    BlockKind,
    KernelKind,
    KernelRecord,
    ParabolicScheme,
    RankOneBlock,
    block_phi,
    generated_block,
    intersect_all,
    is_normalized,
    normalize,
    reduced_scheme,
)
from .rootsys import very_special_dual
from .rootsys import (
    Root,
    RootSystem,
    RootSystemType,
    find_incidence_root,
    levi_components,
)


@dataclass(frozen=True)
class Character:
    """Weight in the root lattice, exact integer coefficients over the
    simple roots."""

    coeffs: Tuple[int, ...]

    def __add__(self, other: "Character") -> "Character":
        return Character(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self) -> str:
        return str(Root(self.coeffs))


def character_pairing(rs: RootSystem, lam: Character, gamma: Root) -> int:
    P = rs.pairing_matrix
    return sum(
        ci * P[i][j] * dj
        for i, ci in enumerate(lam.coeffs) if ci
        for j, dj in enumerate(gamma.coeffs) if dj
    )


def dimension(P: ParabolicScheme) -> int:
    """Dimension of the homogeneous space: positive roots off the Levi."""
    return len(P.domain)


def picard_rank(P: ParabolicScheme) -> int:
    return P.rs.rank - len(P.levi)


def anticanonical_character(P: ParabolicScheme) -> Character:
    coeffs = [0] * P.rs.rank
    for g, v in P.phi_items():
        w = P.p ** v
        for i, c in enumerate(g.coeffs):
            coeffs[i] += w * c
    return Character(tuple(coeffs))


def is_ample(rs: RootSystem, levi: FrozenSet[int], lam: Character) -> bool:
    """Strict positivity of (lam, alpha) over the simple roots off the Levi."""
    return all(
        character_pairing(rs, lam, rs.simple_roots[a - 1]) > 0
        for a in range(1, rs.rank + 1)
        if a not in levi
    )


def is_fano(P: ParabolicScheme) -> bool:
    return is_ample(P.rs, P.levi, anticanonical_character(P))


# ---------------------------------------------------------------------------
# Smooth contractions


def smooth_contraction_roots(P: ParabolicScheme) -> FrozenSet[int]:
    """Simple roots whose generated block is the reduced Standard(0), i.e.
    whose contraction has smooth total space.  Meaningful on normalized
    schemes."""
    out = set()
    for a in range(1, P.rs.rank + 1):
        if a in P.levi:
            continue
        b = generated_block(P, a)
        if b.kind is BlockKind.STANDARD and b.m == 0:
            out.add(a)
    return frozenset(out)


def _generated_blocks(P: ParabolicScheme) -> Dict[int, RankOneBlock]:
    return {
        a: generated_block(P, a)
        for a in sorted(set(range(1, P.rs.rank + 1)) - P.levi)
    }


def _require_quasi_standard(blocks: Dict[int, RankOneBlock]) -> None:
    exotic = [b for b in blocks.values() if b.kind in (BlockKind.EXOTIC_H, BlockKind.EXOTIC_L)]
    if exotic:
        raise ExoticBlocksPresent(f"exotic generated blocks {[str(b) for b in exotic]}")


def _require_normalized(P: ParabolicScheme) -> None:
    if not is_normalized(P):
        raise InvalidScheme("operation requires a normalized scheme (no contained kernel)")


@dataclass(frozen=True)
class SmoothPart:
    """Minimal reduced parabolic containing P, with the complementary
    thickened part as decomposition witness."""

    reduced: ParabolicScheme
    complement: ParabolicScheme
    complement_kernels: Tuple[KernelRecord, ...]
    complement_normalized: ParabolicScheme


def p_sm(P: ParabolicScheme) -> SmoothPart:
    """Reduced scheme over the non-smooth Levi plus the decomposition witness.

    Requires a normalized quasi-standard scheme.  The witness satisfies
    P = reduced  intersect  complement, with the complement carrying every
    contained kernel of the non-smooth blocks.
    """
    _require_normalized(P)
    blocks = _generated_blocks(P)
    _require_quasi_standard(blocks)
    smooth = smooth_contraction_roots(P)
    rough = [a for a in blocks if a not in smooth]
    reduced_levi = frozenset(range(1, P.rs.rank + 1)) - smooth
    red = reduced_scheme(P.rs, P.p, reduced_levi)
    complement = intersect_all(
        P.rs, P.p, [block_phi(P.rs, P.p, blocks[a]) for a in rough]
    )
    norm = normalize(complement)
    return SmoothPart(
        reduced=red,
        complement=complement,
        complement_kernels=norm.stripped,
        complement_normalized=norm.scheme,
    )


# ---------------------------------------------------------------------------
# Fibration sequences


@dataclass(frozen=True)
class FiberFactor:
    """One irreducible factor of a fiber; labels trace each of its simple
    roots back to the node of the original diagram it came from."""

    scheme: ParabolicScheme
    labels: Tuple[int, ...]


@dataclass(frozen=True)
class FibrationStep:
    """One locally trivial contraction: base of Picard rank one, fiber
    product, kernels stripped while normalising the fiber."""

    target_type: RootSystemType
    target_alpha: int
    base_dimension: int
    fiber: Tuple[FiberFactor, ...]
    stripped: Tuple[KernelRecord, ...]


def _restrict_factors(
    P: ParabolicScheme, subset: FrozenSet[int], labels: Tuple[int, ...]
) -> List[FiberFactor]:
    """Restrict a scheme to the Levi sub-diagram on `subset`, one factor per
    connected component, dropping components entirely inside the Levi."""
    comps = levi_components(P.rs, subset)
    out: List[FiberFactor] = []
    for comp in comps:
        if set(comp.index_map) <= P.levi:
            continue
        sub = comp.system
        sub_levi = frozenset(
            k for k in range(1, sub.rank + 1) if comp.index_map[k - 1] in P.levi
        )
        phi: Dict[Root, int] = {}
        for g in sub.positive_roots:
            if g.support() <= sub_levi:
                continue
            phi[g] = P.finite_height(comp.embed(g, P.rs.rank))
        out.append(
            FiberFactor(
                ParabolicScheme(sub, P.p, sub_levi, phi),
                tuple(labels[i - 1] for i in comp.index_map),
            )
        )
    return out


def _relabel_after_dual(
    rs: RootSystem, labels: Tuple[int, ...], records: Tuple[KernelRecord, ...]
) -> Tuple[int, ...]:
    """Trace original labels through very-special strips (simple relabelling)."""
    for rec in records:
        if rec.kind is KernelKind.VERY_SPECIAL_KERNEL:
            dual, bij = very_special_dual(rs)
            new = [0] * len(labels)
            for i in range(1, len(labels) + 1):
                new[bij.simple_map[i - 1] - 1] = labels[i - 1]
            labels = tuple(new)
            rs = dual
    return labels


def _normalize_factor(factor: FiberFactor) -> Tuple[FiberFactor, Tuple[KernelRecord, ...]]:
    res = normalize(factor.scheme)
    labels = _relabel_after_dual(factor.scheme.rs, factor.labels, res.stripped)
    return FiberFactor(res.scheme, labels), res.stripped


def fibration_sequence(P: ParabolicScheme) -> List[FibrationStep]:
    """Decompose the space as iterated locally trivial fibrations over bases
    of Picard rank one.

    Runs for picard_rank rounds; each round contracts the smallest available
    smooth node, restricts to the complementary sub-diagram, and normalizes
    the fiber factors.  The input is normalized up front (the underlying
    variety is unchanged; recover those kernels with normalize directly).
    Raises NoSmoothContraction when every remaining factor has only
    non-reduced contractions (the exotic G2 families).
    """
    if picard_rank(P) < 1:
        raise InvalidScheme("fibration sequence needs Picard rank at least 1")
    state, _ = _normalize_factor(
        FiberFactor(P, tuple(range(1, P.rs.rank + 1)))
    )
    factors: List[FiberFactor] = [state]
    steps: List[FibrationStep] = []
    while factors:
        pick: Optional[Tuple[int, int, int]] = None  # (original label, factor idx, local node)
        for idx, f in enumerate(factors):
            for a in sorted(smooth_contraction_roots(f.scheme)):
                lab = f.labels[a - 1]
                if pick is None or lab < pick[0]:
                    pick = (lab, idx, a)
        if pick is None:
            raise NoSmoothContraction(
                "no reduced stabiliser among the remaining contractions"
            )
        lab, idx, a = pick
        chosen = factors.pop(idx)
        frs = chosen.scheme.rs
        base_dim = sum(1 for g in frs.positive_roots if a in g.support())
        subset = frozenset(range(1, frs.rank + 1)) - {a}
        new_raw = _restrict_factors(chosen.scheme, subset, chosen.labels)
        stripped: List[KernelRecord] = []
        for raw in new_raw:
            norm, recs = _normalize_factor(raw)
            stripped.extend(recs)
            if set(norm.scheme.levi) != set(range(1, norm.scheme.rs.rank + 1)):
                factors.append(norm)
        factors.sort(key=lambda f: min(f.labels))
        steps.append(
            FibrationStep(
                target_type=frs.rtype,
                target_alpha=lab,
                base_dimension=base_dim,
                fiber=tuple(factors),
                stripped=tuple(stripped),
            )
        )
    return steps


# ---------------------------------------------------------------------------
# Fano finiteness machinery


def incidence_threshold(rs: RootSystem) -> Fraction:
    """The exact rational threshold H gating the incidence certificate.

    Numerator: max over simple alpha of the sum of |(gamma, alpha)| over
    positive roots supported at alpha.  Denominator: min of |(gamma, alpha)|
    over positive gamma and simple alpha pairing strictly negatively.  In
    rank one no negative pair exists; the convention H = |Phi+| + 1 is
    returned, and the certificate machinery is gated separately to Picard
    rank at least two.
    """
    num = 0
    for a in range(1, rs.rank + 1):
        alpha = rs.simple_roots[a - 1]
        s = sum(
            abs(rs.pairing(g, alpha))
            for g in rs.positive_roots
            if a in g.support()
        )
        num = max(num, s)
    negs = [
        abs(rs.pairing(g, rs.simple_roots[a - 1]))
        for g in rs.positive_roots
        for a in range(1, rs.rank + 1)
        if rs.pairing(g, rs.simple_roots[a - 1]) < 0
    ]
    if not negs:
        return Fraction(len(rs.positive_roots) + 1)
    return Fraction(num, min(negs))


@dataclass(frozen=True)
class NotFanoCertificate:
    """Witness that the anticanonical character fails ampleness: a simple
    root beta_l on the lightly-thickened side and an incidence root delta
    avoiding that side with (delta, beta_l) < 0."""

    beta_l: int
    delta: Root
    threshold: Fraction
    pairing_value: int

    def __post_init__(self) -> None:
        if self.pairing_value >= 0:
            raise InvalidScheme("certificate pairing must be negative")


def _kernel_order_key(b: RankOneBlock) -> Tuple[int, int]:
    # chain 1 < N0 < G1 < N1 < G2 < ...: Standard(m) at 2m, VerySpecial(m) at 2m+1
    if b.kind is BlockKind.STANDARD:
        return (2 * b.m, b.alpha)
    return (2 * b.m + 1, b.alpha)


def _kernel_upper(b: RankOneBlock) -> int:
    """Least t with the block kernel inside the t-th Frobenius kernel."""
    return b.m if b.kind is BlockKind.STANDARD else b.m + 1


def _kernel_lower(b: RankOneBlock) -> int:
    """Greatest t with the t-th Frobenius kernel inside the block kernel."""
    return b.m


def not_fano_certificate(P: ParabolicScheme) -> Optional[NotFanoCertificate]:
    """Incidence certificate for a normalized quasi-standard scheme of Picard
    rank at least two; None when no kernel gap exceeds the threshold."""
    _require_normalized(P)
    if picard_rank(P) < 2:
        raise InvalidScheme("certificate machinery needs Picard rank >= 2")
    blocks = _generated_blocks(P)
    _require_quasi_standard(blocks)
    ordered = sorted(blocks.values(), key=_kernel_order_key)
    H = incidence_threshold(P.rs)
    chi = anticanonical_character(P)
    for i in range(1, len(ordered)):
        m0 = max(_kernel_upper(b) for b in ordered[:i])
        gap = min(_kernel_lower(b) for b in ordered[i:]) - m0
        if gap >= 1 and P.p ** gap > H:
            left = frozenset(b.alpha for b in ordered[:i])
            l, delta = find_incidence_root(P.rs, P.levi, left)
            value = character_pairing(P.rs, chi, P.rs.simple_roots[l - 1])
            return NotFanoCertificate(
                beta_l=l, delta=delta, threshold=H, pairing_value=value
            )
    return None
