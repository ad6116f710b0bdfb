"""
Weights and coweights of the universal Cartan torus.

    X*(T~) = Z Lambda_can + X*(T) + Z delta
    X_*(T~) = Z K_can + X_*(T) + Z d

with <Lambda_can, K_can> = <delta, d> = 1 and all cross pairings between the
extra generators and the finite blocks equal to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootsys import FinCoweight, FinWeight, RootDatum

__all__ = [
    "AffWeight", "AffCoweight", "pair", "affine_simple_root", "affine_simple_coroot",
    "star", "Lambda_can", "delta", "K_can", "d_gen", "K", "Lambda_0",
    "affine_cartan_matrix", "weight_basis",
]


def _vec(v: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _check_len(a, b):
    if len(a) != len(b):
        raise ValueError("finite parts have different ranks (datum mismatch)")


@dataclass(frozen=True)
class AffWeight:
    """c_lambda * Lambda_can + fin + c_delta * delta, `fin` in simple-root coordinates."""

    c_lambda: Fraction
    fin: FinWeight
    c_delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c_lambda", Fraction(self.c_lambda))
        object.__setattr__(self, "fin", _vec(self.fin))
        object.__setattr__(self, "c_delta", Fraction(self.c_delta))

    @classmethod
    def finite(cls, fin: Sequence) -> "AffWeight":
        return cls(0, fin, 0)

    @classmethod
    def zero(cls, rank: int) -> "AffWeight":
        return cls(0, (0,) * rank, 0)

    def __add__(self, other: "AffWeight") -> "AffWeight":
        _check_len(self.fin, other.fin)
        return AffWeight(self.c_lambda + other.c_lambda,
                         tuple(a + b for a, b in zip(self.fin, other.fin)),
                         self.c_delta + other.c_delta)

    def __neg__(self) -> "AffWeight":
        return AffWeight(-self.c_lambda, tuple(-a for a in self.fin), -self.c_delta)

    def __sub__(self, other: "AffWeight") -> "AffWeight":
        return self + (-other)

    def __mul__(self, c) -> "AffWeight":
        c = Fraction(c)
        return AffWeight(c * self.c_lambda, tuple(c * a for a in self.fin), c * self.c_delta)

    __rmul__ = __mul__

    def coords(self) -> tuple[Fraction, ...]:
        """Coordinates in the basis (Lambda_can, alpha_1, ..., alpha_n, delta)."""
        return (self.c_lambda,) + self.fin + (self.c_delta,)


@dataclass(frozen=True)
class AffCoweight:
    """c_k * K_can + fin + c_d * d, `fin` in simple-coroot coordinates."""

    c_k: Fraction
    fin: FinCoweight
    c_d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c_k", Fraction(self.c_k))
        object.__setattr__(self, "fin", _vec(self.fin))
        object.__setattr__(self, "c_d", Fraction(self.c_d))

    @classmethod
    def finite(cls, fin: Sequence) -> "AffCoweight":
        return cls(0, fin, 0)

    @classmethod
    def zero(cls, rank: int) -> "AffCoweight":
        return cls(0, (0,) * rank, 0)

    def __add__(self, other: "AffCoweight") -> "AffCoweight":
        _check_len(self.fin, other.fin)
        return AffCoweight(self.c_k + other.c_k,
                           tuple(a + b for a, b in zip(self.fin, other.fin)),
                           self.c_d + other.c_d)

    def __neg__(self) -> "AffCoweight":
        return AffCoweight(-self.c_k, tuple(-a for a in self.fin), -self.c_d)

    def __sub__(self, other: "AffCoweight") -> "AffCoweight":
        return self + (-other)

    def __mul__(self, c) -> "AffCoweight":
        c = Fraction(c)
        return AffCoweight(c * self.c_k, tuple(c * a for a in self.fin), c * self.c_d)

    __rmul__ = __mul__


def pair(d: RootDatum, xi: AffWeight, eta: AffCoweight) -> Fraction:
    """The natural pairing X*(T~) x X_*(T~) -> Q."""
    if len(xi.fin) != d.rank or len(eta.fin) != d.rank:
        raise ValueError("weight/coweight does not belong to this datum")
    return xi.c_lambda * eta.c_k + d.pair(xi.fin, eta.fin) + xi.c_delta * eta.c_d


def Lambda_can(d: RootDatum) -> AffWeight:
    return AffWeight(1, (0,) * d.rank, 0)


def delta(d: RootDatum) -> AffWeight:
    return AffWeight(0, (0,) * d.rank, 1)


def K_can(d: RootDatum) -> AffCoweight:
    return AffCoweight(1, (0,) * d.rank, 0)


def d_gen(d: RootDatum) -> AffCoweight:
    return AffCoweight(0, (0,) * d.rank, 1)


def K(d: RootDatum) -> AffCoweight:
    """K = 2 h^vee K_can."""
    return AffCoweight(2 * d.h_dual, (0,) * d.rank, 0)


def Lambda_0(d: RootDatum) -> AffWeight:
    return AffWeight(Fraction(1, 2 * d.h_dual), (0,) * d.rank, 0)


def affine_simple_root(d: RootDatum, i: int) -> AffWeight:
    """alpha_0 = delta - theta; alpha_i (i >= 1) the finite simple root."""
    if not 0 <= i <= d.rank:
        raise IndexError(f"affine simple root index {i} out of range 0..{d.rank}")
    if i == 0:
        return AffWeight(0, tuple(-x for x in d.theta), 1)
    return AffWeight.finite(d.simple_roots[i - 1])


def affine_simple_coroot(d: RootDatum, i: int) -> AffCoweight:
    """alpha_0^vee = K - theta^vee = 2 h^vee K_can - theta^vee."""
    if not 0 <= i <= d.rank:
        raise IndexError(f"affine simple coroot index {i} out of range 0..{d.rank}")
    if i == 0:
        return AffCoweight(2 * d.h_dual, tuple(-x for x in d.theta_dual), 0)
    return AffCoweight.finite(d.simple_coroots[i - 1])


def affine_cartan_matrix(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Entries <alpha_i, alpha_j^vee> for i, j in 0..n."""
    n = d.rank
    return tuple(tuple(int(pair(d, affine_simple_root(d, i), affine_simple_coroot(d, j)))
                       for j in range(n + 1)) for i in range(n + 1))


def star(d: RootDatum, coweight: Sequence) -> FinWeight:
    """Killing-form isomorphism X_*(T)_Q -> X*(T)_Q."""
    return d.star(coweight)


def weight_basis(d: RootDatum) -> list[AffWeight]:
    """Lambda_can, alpha_1, ..., alpha_n, delta: the polynomial generators used by `daha`."""
    return ([Lambda_can(d)] + [AffWeight.finite(a) for a in d.simple_roots] + [delta(d)])
