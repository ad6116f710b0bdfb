"""
Standard parahoric types: proper subsets S_P of the affine simple reflections
{s_0, ..., s_n}, and the finite groups W_P = <s_i : i in S_P> inside W~.

For SL(n) and Sp(2n)/SO(2n+1) a type is also labelled by the increasing
sequence of affine nodes *not* in S_P; the Iwahori is the full sequence and
G(O) is (0).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .extweyl import ExtendedAffineWeylGroup, ExtWeylElt
from .rootsys import RootDatum

__all__ = [
    "ParahoricType", "enumerate_standard", "to_classical_index", "from_classical_index",
    "levi_weyl_group",
]

_CLASSICAL = ("A", "B", "C")


@dataclass(frozen=True)
class ParahoricType:
    datum: RootDatum
    subset: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "subset", frozenset(self.subset))
        nodes = range(self.datum.rank + 1)
        if not self.subset <= set(nodes):
            raise ValueError(f"parahoric subset {sorted(self.subset)} not inside 0..{self.datum.rank}")
        if len(self.subset) == self.datum.rank + 1:
            raise ValueError("the full set of affine nodes does not give a finite W_P")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.subset))

    def __le__(self, other: "ParahoricType") -> bool:
        return self.datum == other.datum and self.subset <= other.subset


def enumerate_standard(d: RootDatum) -> list[ParahoricType]:
    """Every proper subset of {0..n}, by size then lexicographically."""
    nodes = range(d.rank + 1)
    return [ParahoricType(d, frozenset(c))
            for k in range(d.rank + 1) for c in combinations(nodes, k)]


def _check_classical(d: RootDatum):
    if d.cartan_type not in _CLASSICAL:
        raise ValueError(f"no classical indexing for type {d.cartan_type}")


def to_classical_index(P: ParahoricType) -> tuple[int, ...]:
    _check_classical(P.datum)
    return tuple(i for i in range(P.datum.rank + 1) if i not in P.subset)


def from_classical_index(d: RootDatum, seq: Sequence[int]) -> ParahoricType:
    _check_classical(d)
    seq = tuple(seq)
    # SL(n) (rank n-1): entries in [0, n); Sp(2n)/SO(2n+1) (rank n): entries in [0, n]
    top = d.rank + 1
    if not seq:
        raise ValueError("classical index must be non-empty")
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise ValueError("classical index must be strictly increasing")
    if seq[0] < 0 or seq[-1] >= top:
        raise ValueError(f"classical index entries must lie in [0, {top})")
    return ParahoricType(d, frozenset(range(d.rank + 1)) - set(seq))


def levi_weyl_group(P: ParahoricType | Iterable[int],
                    group: ExtendedAffineWeylGroup | None = None) -> list[ExtWeylElt]:
    """Explicit element list of W_P inside W~."""
    if isinstance(P, ParahoricType):
        group = group or ExtendedAffineWeylGroup(P.datum)
        subset = P.subset
    else:
        if group is None:
            raise ValueError("a group is required when P is given as an index set")
        subset = set(P)
    return group.parabolic_subgroup(subset)
