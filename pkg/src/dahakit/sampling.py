"""Seeded random generators for property checks (all driven by `random.Random`)."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .afflattice import AffCoweight, AffWeight
from .convolution import DCosetFn
from .daha import Daha, DahaElt
from .extweyl import ExtendedAffineWeylGroup, ExtWeylElt

__all__ = [
    "rng_for", "random_rational", "random_weight", "random_coweight", "random_element",
    "random_poly", "random_daha", "random_dcoset",
]


def rng_for(seed: int, *tags) -> random.Random:
    """Independent stream per (seed, tags); string seeding is stable across platforms."""
    return random.Random(":".join([str(seed), *map(str, tags)]))


def random_rational(rng: random.Random, bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 1, 2, 3)))


def random_weight(rng: random.Random, rank: int, bound: int = 3) -> AffWeight:
    return AffWeight(random_rational(rng, bound), [random_rational(rng, bound) for _ in range(rank)],
                     random_rational(rng, bound))


def random_coweight(rng: random.Random, rank: int, bound: int = 3) -> AffCoweight:
    return AffCoweight(random_rational(rng, bound), [random_rational(rng, bound) for _ in range(rank)],
                       random_rational(rng, bound))


def random_element(W: ExtendedAffineWeylGroup, rng: random.Random, max_word: int = 4) -> ExtWeylElt:
    """A random word in the affine simple reflections followed by a random omega."""
    word = [rng.randint(0, W.rank) for _ in range(rng.randint(0, max_word))]
    return W.from_word(word, rng.choice(W.omega_elements))


def random_poly(H: Daha, rng: random.Random, max_degree: int = 2, max_terms: int = 3,
                with_u: bool = True) -> PolyElement:
    """Random polynomial in L, a_i, D (and u) of total polynomial degree <= max_degree."""
    nvars = H.num_weight_vars + (1 if with_u else 0)
    data = {}
    for _ in range(rng.randint(1, max_terms)):
        monom = [0] * (H.num_weight_vars + 1)
        for _ in range(rng.randint(0, max_degree)):
            monom[rng.randrange(nvars)] += 1
        c = random_rational(rng)
        if c:
            data[tuple(monom)] = data.get(tuple(monom), QQ(0)) + QQ(c.numerator, c.denominator)
    return H.ring({k: v for k, v in data.items() if v})


def random_daha(H: Daha, rng: random.Random, max_degree: int = 2, max_terms: int = 2,
                max_word: int = 3) -> DahaElt:
    """sum of random poly * random group element; max_degree is polynomial degree."""
    out = H.zero
    for _ in range(rng.randint(1, max_terms)):
        g = random_element(H.group, rng, max_word)
        out = out + H.poly(random_poly(H, rng, max_degree)) * H.group_elt(g)
    return out


def random_dcoset(W: ExtendedAffineWeylGroup, P: Iterable[int], Q: Iterable[int], rng: random.Random,
                  max_length: int = 6, max_terms: int = 2) -> DCosetFn:
    """Random function on P\\W~/Q supported on double cosets of elements of length <= max_length."""
    P, Q = frozenset(P), frozenset(Q)
    support: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        x = random_element(W, rng, max_length)
        rep = W.min_double_coset_rep(P, Q, x)
        support[rep] = support.get(rep, Fraction(0)) + Fraction(rng.randint(1, 4), rng.choice((1, 2)))
    return DCosetFn(W, P, Q, support)
