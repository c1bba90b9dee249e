"""Magnitudes of Chevalley structure constants from root strings.

For roots gamma != +/-delta with gamma+delta a root, the bracket of the basis
vectors is +/-(r+1) times the vector at gamma+delta, where r is the number of
steps the delta-string through gamma extends downwards.  Only the magnitude
r+1 and its vanishing modulo p are needed here; signs are never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateRootPair, NotARoot
from .rootsys import Root, RootSystem


@dataclass(frozen=True)
class ChainData:
    """Down-chain data for a composable pair: gamma - r*delta is a root,
    gamma - (r+1)*delta is not."""

    gamma: Root
    delta: Root
    r: int


def _check_pair(rs: RootSystem, gamma: Root, delta: Root) -> None:
    rs.check_root(gamma)
    rs.check_root(delta)
    if gamma == delta or gamma == -delta:
        raise DegenerateRootPair(f"gamma = +/-delta at {gamma}")


@lru_cache(maxsize=None)
def _down_steps(rs: RootSystem, gamma: Root, delta: Root) -> int:
    r = 0
    cur = gamma - delta
    while rs.is_root(cur):
        r += 1
        cur = cur - delta
    return r


def down_chain_length(rs: RootSystem, gamma: Root, delta: Root) -> int:
    """r such that gamma - r*delta, ..., gamma, gamma + delta are all roots."""
    _check_pair(rs, gamma, delta)
    if not rs.is_root(gamma + delta):
        raise NotARoot(f"{gamma} + {delta} is not a root")
    return _down_steps(rs, gamma, delta)


def chain_data(rs: RootSystem, gamma: Root, delta: Root) -> ChainData:
    return ChainData(gamma, delta, down_chain_length(rs, gamma, delta))


def structure_constant_magnitude(rs: RootSystem, gamma: Root, delta: Root) -> int:
    """|N'(gamma, delta)| = r + 1, or 0 when gamma + delta is not a root."""
    _check_pair(rs, gamma, delta)
    if not rs.is_root(gamma + delta):
        return 0
    return _down_steps(rs, gamma, delta) + 1


def vanishes_mod_p(rs: RootSystem, gamma: Root, delta: Root, p: int) -> bool:
    """Whether the structure constant is zero over a field of characteristic p."""
    return structure_constant_magnitude(rs, gamma, delta) % p == 0
