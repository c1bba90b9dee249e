"""Exact root-system combinatorics for the irreducible types A through G.

Conventions used throughout the package:

* simple roots are numbered 1..n following the standard Bourbaki tables,
  and a root is stored as its integer coefficient vector over them;
* the symmetric pairing ( , ) is normalised so that short roots have
  squared length 2 (so squared lengths are 2, 4 and, in G2, 6);
* positive roots are generated by string closure from the simple roots,
  with the classical counts kept as hard cross-checks;
* all arithmetic is exact: integers for pairings, Fractions for the
  auxiliary epsilon realisation.  No floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import (
    EdgeHypothesisNotSatisfied,
    InvalidPartition,
    InvalidRootSystem,
    InvalidScheme,
    NotARoot,
    UnsupportedType,
)

SERIES = ("A", "B", "C", "D", "E", "F", "G")

#: classical positive-root counts, used as cross-checks after closure
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

SHORT = "short"
LONG = "long"


@dataclass(frozen=True)
class RootSystemType:
    """A series label and a rank, e.g. B3 or G2."""

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in SERIES:
            raise InvalidRootSystem(f"unknown series {self.series!r}")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 2,
            "C": self.rank >= 2,
            "D": self.rank >= 3,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.series]
        if not ok:
            raise InvalidRootSystem(f"rank {self.rank} invalid for series {self.series}")

    @classmethod
    def parse(cls, label: str) -> "RootSystemType":
        label = label.strip()
        if len(label) < 2 or not label[1:].isdigit():
            raise InvalidRootSystem(f"cannot parse type label {label!r}")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Root:
    """Integer coefficient vector over the simple roots."""

    coeffs: Tuple[int, ...]

    @classmethod
    def of(cls, *coeffs: int) -> "Root":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Root":
        return cls(tuple(int(c) for c in coeffs))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs) and any(c > 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c != 0)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            if c == 1:
                parts.append(f"a{i}")
            elif c == -1:
                parts.append(f"-a{i}")
            else:
                parts.append(f"{c}a{i}")
        return "+".join(parts).replace("+-", "-") if parts else "0"


def _simple_epsilon(rtype: RootSystemType) -> List[Tuple[Fraction, ...]]:
    """Bourbaki epsilon-coordinates of the simple roots."""
    n = rtype.rank
    s = rtype.series

    def vec(*pairs, dim: int) -> Tuple[Fraction, ...]:
        v = [Fraction(0)] * dim
        for i, c in pairs:
            v[i] += Fraction(c)
        return tuple(v)

    if s == "A":
        dim = n + 1
        return [vec((i, 1), (i + 1, -1), dim=dim) for i in range(n)]
    if s in ("B", "C", "D"):
        dim = n
        simples = [vec((i, 1), (i + 1, -1), dim=dim) for i in range(n - 1)]
        if s == "B":
            simples.append(vec((n - 1, 1), dim=dim))
        elif s == "C":
            simples.append(vec((n - 1, 2), dim=dim))
        else:
            simples.append(vec((n - 2, 1), (n - 1, 1), dim=dim))
        return simples
    if s == "E":
        dim = 8
        half = Fraction(1, 2)
        a1 = tuple([half, -half, -half, -half, -half, -half, -half, half])
        a2 = vec((0, 1), (1, 1), dim=dim)
        rest = [vec((i + 1, 1), (i, -1), dim=dim) for i in range(6)]
        return ([a1, a2] + rest)[:n]
    if s == "F":
        dim = 4
        half = Fraction(1, 2)
        return [
            vec((1, 1), (2, -1), dim=dim),
            vec((2, 1), (3, -1), dim=dim),
            vec((3, 1), dim=dim),
            (half, -half, -half, -half),
        ]
    # G2, in the standard 3-dimensional realisation
    dim = 3
    return [vec((0, 1), (1, -1), dim=dim), vec((0, -2), (1, 1), (2, 1), dim=dim)]


class RootSystem:
    """Immutable root-system data built once per type and shared."""

    def __init__(self, rtype: RootSystemType):
        self.rtype = rtype
        self.rank = rtype.rank
        eps = _simple_epsilon(rtype)
        self.epsilon_coords: Tuple[Tuple[Fraction, ...], ...] = tuple(tuple(v) for v in eps)

        gram = [[sum(a * b for a, b in zip(eps[i], eps[j])) for j in range(self.rank)]
                for i in range(self.rank)]
        scale = Fraction(2) / min(gram[i][i] for i in range(self.rank))
        pairing = [[gram[i][j] * scale for j in range(self.rank)] for i in range(self.rank)]
        for row in pairing:
            for v in row:
                if v.denominator != 1:
                    raise InvalidRootSystem(f"non-integral pairing for {rtype}")
        self.pairing_matrix: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(v) for v in row) for row in pairing
        )
        self._epsilon_scale = scale

        # Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> = 2(a_i,a_j)/(a_j,a_j)
        P = self.pairing_matrix
        self.cartan: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(2 * P[i][j] // P[j][j] for j in range(self.rank)) for i in range(self.rank)
        )

        self.simple_roots: Tuple[Root, ...] = tuple(
            Root(tuple(1 if j == i else 0 for j in range(self.rank))) for i in range(self.rank)
        )
        self.positive_roots: Tuple[Root, ...] = self._generate_positive()
        expected = _POSITIVE_COUNT[rtype.series](rtype.rank)
        if len(self.positive_roots) != expected:
            raise InvalidRootSystem(
                f"{rtype}: closure produced {len(self.positive_roots)} positive roots, "
                f"expected {expected}"
            )
        self.roots: Tuple[Root, ...] = self.positive_roots + tuple(
            -r for r in self.positive_roots
        )
        self._root_set = frozenset(self.roots)
        self._positive_set = frozenset(self.positive_roots)
        self._length = {r: self._squared_length(r) for r in self.roots}
        short_len = min(self._length[r] for r in self.positive_roots)
        long_len = max(self._length[r] for r in self.positive_roots)
        # simply laced systems report every root as long
        self._class = {
            r: (SHORT if (short_len < long_len and l == short_len) else LONG)
            for r, l in self._length.items()
        }
        self.is_simply_laced = short_len == long_len
        self.max_edge_multiplicity = long_len // 2 if not self.is_simply_laced else 1

    # -- construction helpers -------------------------------------------------

    def _generate_positive(self) -> Tuple[Root, ...]:
        found = set(self.simple_roots)
        level: List[Root] = list(self.simple_roots)
        while level:
            nxt: List[Root] = []
            for gamma in level:
                for i in range(self.rank):
                    alpha = self.simple_roots[i]
                    r = 0
                    down = gamma - alpha
                    while down in found:
                        r += 1
                        down = down - alpha
                    if r - self._cartan_pair_raw(gamma, i) > 0:
                        up = gamma + alpha
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            level = nxt
        return tuple(sorted(found, key=lambda g: (g.height, g.coeffs)))

    def _cartan_pair_raw(self, gamma: Root, i: int) -> int:
        return sum(c * self.cartan[j][i] for j, c in enumerate(gamma.coeffs))

    def _squared_length(self, gamma: Root) -> int:
        return self.pairing(gamma, gamma)

    # -- queries ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.rtype == other.rtype

    def __hash__(self) -> int:
        return hash(self.rtype)

    def __repr__(self) -> str:
        return f"RootSystem({self.rtype})"

    def is_root(self, gamma: Root) -> bool:
        return gamma in self._root_set

    def is_positive_root(self, gamma: Root) -> bool:
        return gamma in self._positive_set

    def check_root(self, gamma: Root) -> Root:
        if gamma not in self._root_set:
            raise NotARoot(f"{gamma} is not a root of {self.rtype}")
        return gamma

    def pairing(self, gamma: Root, delta: Root) -> int:
        """Symmetric bilinear form, (short, short) = 2."""
        P = self.pairing_matrix
        return sum(
            ci * P[i][j] * dj
            for i, ci in enumerate(gamma.coeffs) if ci
            for j, dj in enumerate(delta.coeffs) if dj
        )

    def cartan_pairing(self, gamma: Root, i: int) -> int:
        """<gamma, alpha_i^vee> for a 1-based simple index i."""
        return self._cartan_pair_raw(gamma, i - 1)

    def support(self, gamma: Root) -> FrozenSet[int]:
        self.check_root(gamma)
        return gamma.support()

    def length_class(self, gamma: Root) -> str:
        self.check_root(gamma)
        return self._class[gamma]

    def epsilon(self, gamma: Root) -> Tuple[Fraction, ...]:
        dim = len(self.epsilon_coords[0])
        out = [Fraction(0)] * dim
        for i, c in enumerate(gamma.coeffs):
            if c:
                for k in range(dim):
                    out[k] += c * self.epsilon_coords[i][k]
        return tuple(out)

    def simple_index_class(self, i: int) -> str:
        return self._class[self.simple_roots[i - 1]]

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        """Dynkin-diagram neighbours, 1-based."""
        return {
            i: frozenset(
                j for j in range(1, self.rank + 1)
                if j != i and self.cartan[i - 1][j - 1] != 0
            )
            for i in range(1, self.rank + 1)
        }


@lru_cache(maxsize=None)
def build_root_system(rtype: RootSystemType) -> RootSystem:
    return RootSystem(rtype)


def root_system(label: str) -> RootSystem:
    """Convenience: root_system("B2")."""
    return build_root_system(RootSystemType.parse(label))


# ---------------------------------------------------------------------------
# Levi subsets


def check_levi(rs: RootSystem, levi: Iterable[int]) -> FrozenSet[int]:
    I = frozenset(int(i) for i in levi)
    if not I <= set(range(1, rs.rank + 1)):
        raise InvalidScheme(f"Levi subset {sorted(I)} outside 1..{rs.rank}")
    return I


def levi_positive_roots(rs: RootSystem, levi: Iterable[int]) -> FrozenSet[Root]:
    """Positive roots supported inside the Levi subset."""
    I = check_levi(rs, levi)
    return frozenset(g for g in rs.positive_roots if g.support() <= I)


# ---------------------------------------------------------------------------
# Duality under the very special isogeny

_DUAL_SERIES = {"B": "C", "C": "B", "F": "F", "G": "G"}


def _dual_relabel(rtype: RootSystemType) -> Dict[int, int]:
    if rtype.series in ("B", "C"):
        return {i: i for i in range(1, rtype.rank + 1)}
    if rtype.series == "F":
        return {i: 5 - i for i in range(1, 5)}
    return {1: 2, 2: 1}  # G2


@dataclass(frozen=True)
class VerySpecialDuality:
    """Length-exchanging bijection between a system and its dual."""

    source: RootSystem
    target: RootSystem
    simple_map: Tuple[int, ...]  # simple_map[i-1] = image index of alpha_i
    _forward: Dict[Root, Root]
    _backward: Dict[Root, Root]

    def forward(self, gamma: Root) -> Root:
        try:
            return self._forward[gamma]
        except KeyError:
            raise NotARoot(f"{gamma} is not a root of {self.source.rtype}") from None

    def backward(self, gamma: Root) -> Root:
        try:
            return self._backward[gamma]
        except KeyError:
            raise NotARoot(f"{gamma} is not a root of {self.target.rtype}") from None

    def __call__(self, gamma: Root) -> Root:
        return self.forward(gamma)


@lru_cache(maxsize=None)
def very_special_dual(rs: RootSystem) -> Tuple[RootSystem, VerySpecialDuality]:
    """Dual system and root bijection exchanging long and short roots.

    The bijection sends gamma = sum c_i alpha_i to the dual root with
    coefficient c_i (alpha_i, alpha_i) / (gamma, gamma) at the relabelled
    simple index, which is the coroot map written over the dual basis.
    Requires a multiple edge (types B, C, F4, G2).
    """
    if rs.is_simply_laced:
        raise EdgeHypothesisNotSatisfied(f"{rs.rtype} has no multiple edge")
    dual_type = RootSystemType(_DUAL_SERIES[rs.rtype.series], rs.rank)
    dual = build_root_system(dual_type)
    sigma = _dual_relabel(rs.rtype)
    fwd: Dict[Root, Root] = {}
    for gamma in rs.roots:
        gg = rs.pairing(gamma, gamma)
        image = [0] * rs.rank
        for i, c in enumerate(gamma.coeffs, start=1):
            if c:
                num = c * rs.pairing_matrix[i - 1][i - 1]
                if num % gg:
                    raise InvalidRootSystem(f"duality broke integrality at {gamma}")
                image[sigma[i] - 1] = num // gg
        img = Root(tuple(image))
        if not dual.is_root(img):
            raise InvalidRootSystem(f"duality image {img} not a root of {dual_type}")
        if rs.length_class(gamma) == dual.length_class(img):
            raise InvalidRootSystem(f"duality failed to exchange lengths at {gamma}")
        fwd[gamma] = img
    bwd = {v: k for k, v in fwd.items()}
    return dual, VerySpecialDuality(rs, dual, tuple(sigma[i] for i in range(1, rs.rank + 1)), fwd, bwd)


# ---------------------------------------------------------------------------
# Long-root subsystem of F4

#: basis of the long-root D4 inside F4: e1-e2, e2-e3, e3-e4, e3+e4
_F4_LONG_BASIS = ((0, 1, 2, 2), (1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 2, 0))


@dataclass(frozen=True)
class LongRootSubsystem:
    roots: Tuple[Root, ...]
    basis: Tuple[Root, ...]
    subsystem_type: RootSystemType


def long_root_subsystem(rs: RootSystem) -> LongRootSubsystem:
    """The 24 long roots of F4 with their distinguished D4 basis."""
    if rs.rtype != RootSystemType("F", 4):
        raise UnsupportedType("long_root_subsystem is implemented for F4 only")
    longs = tuple(g for g in rs.roots if rs.length_class(g) == LONG)
    basis = tuple(Root(c) for c in _F4_LONG_BASIS)
    return LongRootSubsystem(
        roots=tuple(sorted(longs, key=lambda g: (g.height, g.coeffs))),
        basis=basis,
        subsystem_type=RootSystemType("D", 4),
    )


# ---------------------------------------------------------------------------
# Incidence root for the finiteness argument


def find_incidence_root(
    rs: RootSystem, levi: Iterable[int], left: Iterable[int]
) -> Tuple[int, Root]:
    """Pick l in `left` and a positive root delta with Supp(delta) disjoint
    from `left` and (delta, alpha_l) < 0.

    `left` must be a nonempty proper subset of the non-Levi simple roots; the
    returned delta is mu plus the interior of the shortest Dynkin segment
    joining the two sides, all interior nodes lying in the Levi.
    """
    I = check_levi(rs, levi)
    L = frozenset(int(i) for i in left)
    outside = frozenset(range(1, rs.rank + 1)) - I
    if not L or not L <= outside:
        raise InvalidPartition(f"left side {sorted(L)} must be nonempty inside Delta\\I")
    R = outside - L
    if not R:
        raise InvalidPartition("right side of the partition is empty")

    adj = rs.adjacency()

    def path(a: int, b: int) -> List[int]:
        prev = {a: 0}
        queue = [a]
        while queue:
            x = queue.pop(0)
            if x == b:
                break
            for y in sorted(adj[x]):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        seq = [b]
        while seq[-1] != a:
            seq.append(prev[seq[-1]])
        return seq[::-1]

    best: Optional[Tuple[int, int, int]] = None  # (distance, nu, mu)
    for nu in sorted(L):
        for mu in sorted(R):
            d = len(path(nu, mu)) - 1
            if best is None or (d, nu, mu) < best:
                best = (d, nu, mu)
    _, nu, mu = best
    interior = path(nu, mu)[1:-1]
    # interior nodes of a minimal segment are forced into the Levi
    assert all(k in I for k in interior)
    coeffs = [0] * rs.rank
    coeffs[mu - 1] = 1
    for k in interior:
        coeffs[k - 1] += 1
    delta = rs.check_root(Root(tuple(coeffs)))
    assert rs.pairing(delta, rs.simple_roots[nu - 1]) < 0
    return nu, delta


# ---------------------------------------------------------------------------
# Levi components (sub-diagram classification)


@dataclass(frozen=True)
class LeviComponent:
    """One connected component of a sub-diagram, identified as a standard type.

    ``index_map[k-1]`` is the ambient simple index realising the component's
    own simple root k (Bourbaki numbering of ``rtype``).
    """

    rtype: RootSystemType
    index_map: Tuple[int, ...]

    @property
    def system(self) -> RootSystem:
        return build_root_system(self.rtype)

    def embed(self, local: Root, ambient_rank: int) -> Root:
        coeffs = [0] * ambient_rank
        for k, c in enumerate(local.coeffs):
            coeffs[self.index_map[k] - 1] = c
        return Root(tuple(coeffs))


def _candidate_types(rank: int) -> List[RootSystemType]:
    out = [RootSystemType("A", rank)] if rank >= 1 else []
    if rank >= 2:
        out += [RootSystemType("B", rank), RootSystemType("C", rank)]
    if rank >= 3:
        out.append(RootSystemType("D", rank))
    if rank in (6, 7, 8):
        out.append(RootSystemType("E", rank))
    if rank == 4:
        out.append(RootSystemType("F", 4))
    if rank == 2:
        out.append(RootSystemType("G", 2))
    return out


def levi_components(rs: RootSystem, subset: Iterable[int]) -> Tuple[LeviComponent, ...]:
    """Split a set of simple indices into connected components and classify
    each induced sub-diagram as a standard irreducible type."""
    S = sorted(check_levi(rs, subset))
    if not S:
        return ()
    adj = rs.adjacency()
    remaining = set(S)
    comps: List[List[int]] = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        queue = [seed]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y in remaining and y not in comp:
                    comp.add(y)
                    queue.append(y)
        remaining -= comp
        comps.append(sorted(comp))

    out: List[LeviComponent] = []
    for nodes in comps:
        r = len(nodes)
        sub = [[rs.cartan[a - 1][b - 1] for b in nodes] for a in nodes]
        match: Optional[LeviComponent] = None
        for cand in _candidate_types(r):
            cs = build_root_system(cand)
            for perm in itertools.permutations(range(r)):
                # perm[k] = position in `nodes` realising candidate index k+1
                if all(
                    sub[perm[a]][perm[b]] == cs.cartan[a][b]
                    for a in range(r) for b in range(r)
                ):
                    match = LeviComponent(cand, tuple(nodes[perm[k]] for k in range(r)))
                    break
            if match:
                break
        if match is None:
            raise InvalidRootSystem(f"unclassifiable sub-diagram {nodes} of {rs.rtype}")
        out.append(match)
    return tuple(out)
