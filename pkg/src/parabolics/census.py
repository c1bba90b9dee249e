"""Exhaustive desk-scale enumeration, oracles, and Fano censuses.

Enumeration walks every tuple of catalog blocks over the non-Levi nodes and
intersects; the brute-force oracle instead tries every height function up to
the bound and keeps the reconstruction fixpoints.  Where the guard admits,
the two must agree exactly.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import ExoticBlocksPresent, InvalidScheme, SearchSpaceTooLarge
from .geometry import NotFanoCertificate, is_fano, not_fano_certificate, picard_rank
from .phi import (
    ParabolicScheme,
    RankOneBlock,
    block_phi,
    contains,
    edge_hypothesis,
    exotic_h_block,
    exotic_l_block,
    full_group_scheme,
    is_normalized,
    is_valid,
    standard_block,
    very_special_block,
)
from .rootsys import RootSystem, RootSystemType, build_root_system, check_levi

BRUTE_FORCE_GUARD = 10 ** 8


@dataclass(frozen=True)
class CensusQuery:
    rtype: RootSystemType
    p: int
    levi: FrozenSet[int]
    max_height: int
    normalized_only: bool = False

    def __post_init__(self) -> None:
        if self.max_height < 0:
            raise InvalidScheme("max_height must be >= 0")

    @property
    def system(self) -> RootSystem:
        return build_root_system(self.rtype)


def rank_one_catalog(rs: RootSystem, p: int, alpha: int, max_height: int) -> List[RankOneBlock]:
    """All catalog blocks at alpha whose heights stay within the bound:
    Standard(0..M), VerySpecial(0..M-1) under the edge hypothesis, and the
    two exotic families ExoticH/ExoticL(0..M-1) for G2, p=2, at the short
    simple root."""
    check_levi(rs, [alpha])
    out: List[RankOneBlock] = [standard_block(alpha, m) for m in range(max_height + 1)]
    if edge_hypothesis(rs, p):
        out += [very_special_block(alpha, m) for m in range(max_height)]
    if rs.rtype == RootSystemType.parse("G2") and p == 2 and alpha == 1:
        out += [exotic_h_block(m) for m in range(max_height)]
        out += [exotic_l_block(m) for m in range(max_height)]
    return out


def _sort_key(P: ParabolicScheme) -> Tuple:
    return (tuple(sorted(P.levi)), tuple(v for _, v in P.phi_items()))


def enumerate_parabolics(q: CensusQuery) -> Tuple[ParabolicScheme, ...]:
    """All distinct intersections of catalog-block tuples over the non-Levi
    nodes, heights bounded by the query."""
    rs = q.system
    levi = check_levi(rs, q.levi)
    nodes = sorted(set(range(1, rs.rank + 1)) - levi)
    if not nodes:
        return (full_group_scheme(rs, q.p),)
    domain = [g for g in rs.positive_roots if not g.support() <= levi]
    # value vector of each block over the common domain; None off its support
    per_node: List[List[Tuple[Optional[int], ...]]] = []
    for a in nodes:
        vecs = []
        for b in rank_one_catalog(rs, q.p, a, q.max_height):
            B = block_phi(rs, q.p, b)
            vecs.append(tuple(
                B.finite_height(g) if a in g.support() else None for g in domain
            ))
        per_node.append(vecs)

    def meet(x: Optional[int], y: Optional[int]) -> Optional[int]:
        if x is None:
            return y
        if y is None:
            return x
        return x if x <= y else y

    found: Dict[Tuple[int, ...], None] = {}
    for combo in itertools.product(*per_node):
        cur = combo[0]
        for vec in combo[1:]:
            cur = tuple(meet(a, b) for a, b in zip(cur, vec))
        found.setdefault(cur, None)
    out: List[ParabolicScheme] = []
    for values in found:
        P = ParabolicScheme(rs, q.p, levi, dict(zip(domain, values)))
        if q.normalized_only and not is_normalized(P):
            continue
        out.append(P)
    return tuple(sorted(out, key=_sort_key))


def brute_force_enumerate(q: CensusQuery) -> Tuple[ParabolicScheme, ...]:
    """Independent oracle: every height function up to the bound that is a
    reconstruction fixpoint.  Refuses when the candidate count exceeds the
    guard."""
    rs = q.system
    levi = check_levi(rs, q.levi)
    if not set(range(1, rs.rank + 1)) - levi:
        return (full_group_scheme(rs, q.p),)
    domain = [g for g in rs.positive_roots
              if not g.support() <= levi]
    if (q.max_height + 2) ** len(domain) > BRUTE_FORCE_GUARD:
        raise SearchSpaceTooLarge(
            f"(M+2)^{len(domain)} exceeds {BRUTE_FORCE_GUARD} candidates"
        )
    out: List[ParabolicScheme] = []
    for values in itertools.product(range(q.max_height + 1), repeat=len(domain)):
        P = ParabolicScheme(rs, q.p, levi, dict(zip(domain, values)))
        if not is_valid(P):
            continue
        if q.normalized_only and not is_normalized(P):
            continue
        out.append(P)
    return tuple(sorted(out, key=_sort_key))


# ---------------------------------------------------------------------------
# Fano census


@dataclass(frozen=True)
class FanoRow:
    scheme: ParabolicScheme
    fano: bool
    certificate: Optional[NotFanoCertificate]


def fano_census(q: CensusQuery) -> Tuple[FanoRow, ...]:
    """Fano status for every enumerated scheme; the incidence certificate is
    attached where its machinery applies (normalized, quasi-standard, Picard
    rank at least two)."""
    rows: List[FanoRow] = []
    for P in enumerate_parabolics(q):
        cert: Optional[NotFanoCertificate] = None
        if picard_rank(P) >= 2 and is_normalized(P):
            try:
                cert = not_fano_certificate(P)
            except ExoticBlocksPresent:
                cert = None
        rows.append(FanoRow(P, is_fano(P), cert))
    return tuple(rows)


def fano_summary(rows: Sequence[FanoRow]) -> Dict[str, int]:
    """Counts plus the maximal height over the Fano subset."""
    fano = [r for r in rows if r.fano]
    return {
        "schemes": len(rows),
        "fano": len(fano),
        "max_fano_height": max((r.scheme.max_height for r in fano), default=0),
        "certificates": sum(1 for r in rows if r.certificate is not None),
    }


# ---------------------------------------------------------------------------
# Hasse diagram of the containment order


@dataclass(frozen=True)
class HasseDiagram:
    schemes: Tuple[ParabolicScheme, ...]
    edges: Tuple[Tuple[int, int], ...]  # (lower index, upper index), covering


def hasse_diagram(q: CensusQuery) -> HasseDiagram:
    schemes = enumerate_parabolics(q)
    n = len(schemes)
    less = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and contains(schemes[j], schemes[i]) and schemes[i] != schemes[j]:
                less[i][j] = True
    edges: List[Tuple[int, int]] = []
    for i in range(n):
        for j in range(n):
            if not less[i][j]:
                continue
            if any(less[i][k] and less[k][j] for k in range(n)):
                continue
            edges.append((i, j))
    return HasseDiagram(schemes, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# Writers (CSV / JSON-lines / DOT)


def phi_hash(P: ParabolicScheme) -> str:
    return hashlib.sha256(P.canonical_json().encode()).hexdigest()[:12]


def _phi_compact(P: ParabolicScheme) -> str:
    return ";".join(str(v) for _, v in P.phi_items())


def schemes_to_jsonl(schemes: Iterable[ParabolicScheme]) -> str:
    return "".join(P.canonical_json() + "\n" for P in schemes)


def schemes_to_csv(schemes: Iterable[ParabolicScheme]) -> str:
    lines = ["type,prime,levi,phi"]
    for P in schemes:
        levi = " ".join(str(i) for i in sorted(P.levi))
        lines.append(f"{P.rs.rtype},{P.p},{levi},{_phi_compact(P)}")
    return "\n".join(lines) + "\n"


def fano_to_csv(rows: Iterable[FanoRow]) -> str:
    lines = ["type,p,levi,phi-hash,fano,certificate-root,pairing-value"]
    for r in rows:
        P = r.scheme
        levi = " ".join(str(i) for i in sorted(P.levi))
        cert_root = str(r.certificate.beta_l) if r.certificate else ""
        cert_val = str(r.certificate.pairing_value) if r.certificate else ""
        lines.append(
            f"{P.rs.rtype},{P.p},{levi},{phi_hash(P)},"
            f"{str(r.fano).lower()},{cert_root},{cert_val}"
        )
    return "\n".join(lines) + "\n"


def hasse_to_dot(diagram: HasseDiagram) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, P in enumerate(diagram.schemes):
        lines.append(f'  n{i} [label="{_phi_compact(P)}"];')
    for lo, hi in diagram.edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
