"""
Double-coset convolution algebras Q[P\\W~/Q].

A function is stored by its values on minimal-length double-coset
representatives. The product is

    (f1 *_Q f2)(w) = sum_{v in W~/W_Q} f1(v) f2(v^{-1} w),

evaluated only over the finitely many cosets v W_Q inside supp(f1).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .extweyl import ExtendedAffineWeylGroup, ExtWeylElt
from .rootsys import FinCoweight

__all__ = [
    "DCosetFn", "convolve", "indicator", "identity", "from_group_algebra",
    "av_element", "av_embed", "lattice_mul", "AvCheck", "av_check", "invariant_to_cosets",
]


def _idx(s: Iterable[int]) -> frozenset[int]:
    return frozenset(s)


@dataclass(frozen=True, eq=False)
class DCosetFn:
    """A finitely supported W_P-left, W_Q-right invariant function on W~."""

    group: ExtendedAffineWeylGroup = field(repr=False)
    P: frozenset[int]
    Q: frozenset[int]
    support: Mapping[ExtWeylElt, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "P", _idx(self.P))
        object.__setattr__(self, "Q", _idx(self.Q))
        W = self.group
        clean = {}
        for rep, c in self.support.items():
            c = Fraction(c)
            if not c:
                continue
            if not W.is_min_double_coset_rep(self.P, self.Q, rep):
                raise ValueError("support keys must be minimal double-coset representatives")
            clean[rep] = c
        object.__setattr__(self, "support", clean)

    def __call__(self, x: ExtWeylElt) -> Fraction:
        rep = self.group.min_double_coset_rep(self.P, self.Q, x)
        return self.support.get(rep, Fraction(0))

    def _same_shape(self, other: "DCosetFn"):
        if (self.P, self.Q) != (other.P, other.Q):
            raise ValueError("functions live on different double-coset spaces")

    def __eq__(self, other):
        if not isinstance(other, DCosetFn):
            return NotImplemented
        return (self.P, self.Q) == (other.P, other.Q) and self.support == other.support

    def __add__(self, other: "DCosetFn") -> "DCosetFn":
        self._same_shape(other)
        out = defaultdict(Fraction, self.support)
        for k, v in other.support.items():
            out[k] += v
        return DCosetFn(self.group, self.P, self.Q, out)

    def __mul__(self, c) -> "DCosetFn":
        c = Fraction(c)
        return DCosetFn(self.group, self.P, self.Q, {k: c * v for k, v in self.support.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "DCosetFn") -> "DCosetFn":
        return convolve(self, other)

    def is_proportional_to(self, other: "DCosetFn") -> Fraction | None:
        """The scalar k with self == k * other, if one exists (other nonzero)."""
        self._same_shape(other)
        if not other.support:
            return None
        if set(self.support) - set(other.support):
            return None
        ratios = {self.support.get(k, Fraction(0)) / v for k, v in other.support.items()}
        return ratios.pop() if len(ratios) == 1 else None


def indicator(W: ExtendedAffineWeylGroup, P: Iterable[int], Q: Iterable[int],
              x: ExtWeylElt) -> DCosetFn:
    P, Q = _idx(P), _idx(Q)
    return DCosetFn(W, P, Q, {W.min_double_coset_rep(P, Q, x): Fraction(1)})


def identity(W: ExtendedAffineWeylGroup, P: Iterable[int]) -> DCosetFn:
    """1_{W_P}, the unit of Q[P\\W~/P]."""
    return indicator(W, P, P, W.identity)


def from_group_algebra(W: ExtendedAffineWeylGroup, values: Mapping[ExtWeylElt, Fraction]) -> DCosetFn:
    """A function on W~ viewed in Q[I\\W~/I] (trivial parahoric on both sides)."""
    return DCosetFn(W, frozenset(), frozenset(), dict(values))


def convolve(f1: DCosetFn, f2: DCosetFn) -> DCosetFn:
    if f1.Q != f2.P:
        raise ValueError(f"middle types differ: {sorted(f1.Q)} vs {sorted(f2.P)}")
    W = f1.group
    P, Q, R = f1.P, f1.Q, f2.Q
    cosets: dict[ExtWeylElt, Fraction] = {}
    for rep, c in f1.support.items():
        for x in W.double_coset(P, Q, rep):
            cosets[W.min_double_coset_rep((), Q, x)] = c
    right = [(z, c) for rep, c in f2.support.items() for z in W.double_coset(Q, R, rep)]
    out: dict[ExtWeylElt, Fraction] = defaultdict(Fraction)
    for v, c1 in cosets.items():
        for z, c2 in right:
            w = W.mul(v, z)
            if W.is_min_double_coset_rep(P, R, w):
                out[w] += c1 * c2
    return DCosetFn(W, P, R, out)


# -- the embedding Q[X_*(T)]^{W_P} -> Q[P\W~/P] ----------------------------

LatticeElt = Mapping[FinCoweight, Fraction]


def _orbit(W: ExtendedAffineWeylGroup, P: Iterable[int], lam: Sequence) -> set[FinCoweight]:
    lam = tuple(Fraction(x) for x in lam)
    d = W.datum
    return {d.w_act_coweight(p.w, lam) for p in W.parabolic_subgroup(P)}


def av_element(W: ExtendedAffineWeylGroup, P: Iterable[int], lam: Sequence) -> dict[FinCoweight, Fraction]:
    """Av_{W_P}(lam): the sum of the W_P-orbit of lam in Q[X_*(T)]."""
    return {mu: Fraction(1) for mu in _orbit(W, P, lam)}


def lattice_mul(a: LatticeElt, b: LatticeElt) -> dict[FinCoweight, Fraction]:
    out: dict[FinCoweight, Fraction] = defaultdict(Fraction)
    for x, c in a.items():
        for y, e in b.items():
            out[tuple(p + q for p, q in zip(x, y))] += c * e
    return {k: v for k, v in out.items() if v}


def invariant_to_cosets(W: ExtendedAffineWeylGroup, P: Iterable[int], elt: LatticeElt) -> DCosetFn:
    """Send sum c_nu Av(nu) to sum c_nu 1_{W_P nu W_P}; elt must be W_P-invariant."""
    P = _idx(P)
    remaining = dict(elt)
    out: dict[ExtWeylElt, Fraction] = defaultdict(Fraction)
    while remaining:
        nu = min(remaining)
        c = remaining[nu]
        for mu in _orbit(W, P, nu):
            if remaining.pop(mu, None) != c:
                raise ValueError("lattice element is not W_P-invariant")
        out[W.min_double_coset_rep(P, P, W.translation(nu))] += c
    return DCosetFn(W, P, P, out)


@dataclass(frozen=True)
class AvCheck:
    """Comparison of 1_lam *_P 1_mu with the image of Av(lam) Av(mu)."""

    lam: FinCoweight
    mu: FinCoweight
    convolution: DCosetFn
    image: DCosetFn
    # c with (c 1_lam) * (c 1_mu) == c * image, or None when not proportional
    normalization: Fraction | None

    @property
    def defect(self) -> DCosetFn:
        return self.convolution + (-1) * self.image

    @property
    def structural(self) -> bool:
        return self.normalization is None


def av_check(W: ExtendedAffineWeylGroup, P: Iterable[int], lam: Sequence, mu: Sequence) -> AvCheck:
    P = _idx(P)
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    conv = convolve(indicator(W, P, P, W.translation(lam)), indicator(W, P, P, W.translation(mu)))
    image = invariant_to_cosets(W, P, lattice_mul(av_element(W, P, lam), av_element(W, P, mu)))
    # c^2 conv = c image  <=>  image = c conv
    return AvCheck(lam, mu, conv, image, image.is_proportional_to(conv))


def av_embed(W: ExtendedAffineWeylGroup, P: Iterable[int], lam: Sequence) -> tuple[DCosetFn, Fraction | None]:
    """1_{W_P lam W_P} together with the normalization fitted from Av(lam)^2."""
    P = _idx(P)
    fn = indicator(W, P, P, W.translation(lam))
    return fn, av_check(W, P, lam, lam).normalization
