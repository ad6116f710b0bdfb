"""
Finite root data for irreducible Cartan types.

Weights (the X*(T) side) are stored in simple-root coordinates and coweights
(the X_*(T) side) in simple-coroot coordinates, so the natural pairing of a
weight `a` with a coweight `b` is `a^T C b` where `C[i][j] = <alpha_i, alpha_j^vee>`.
Labelling of simple roots follows Bourbaki.

The two flavors only change which rational vectors count as integral:

* simply-connected: X_*(T) is the coroot lattice, X*(T) the weight lattice;
* adjoint: X*(T) is the root lattice, X_*(T) the coweight lattice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd
from typing import Iterable, Sequence

import sympy

__all__ = [
    "FinWeight", "FinCoweight", "RootDatum", "build_root_datum",
    "killing_form", "highest_root", "dual_coxeter_number", "rho", "weyl_orbit",
    "parse_type", "cartan_matrix", "weyl_group_order",
]

# rational coordinates in the simple-root (resp. simple-coroot) basis
FinWeight = tuple[Fraction, ...]
FinCoweight = tuple[Fraction, ...]

# a finite Weyl group element, as a permutation of `RootDatum.roots`
Perm = tuple[int, ...]

SIMPLY_CONNECTED = "sc"
ADJOINT = "adjoint"


def _dynkin(letter: str, n: int) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Squared root lengths and off-diagonal inner products (0-based nodes)."""
    if letter == "A":
        d = [2] * n
        edges = {(i, i + 1): -1 for i in range(n - 1)}
    elif letter == "B":
        d = [4] * (n - 1) + [2]
        edges = {(i, i + 1): -2 for i in range(n - 1)}
    elif letter == "C":
        d = [2] * (n - 1) + [4]
        edges = {(i, i + 1): -1 for i in range(n - 2)}
        edges[(n - 2, n - 1)] = -2
    elif letter == "D":
        d = [2] * n
        edges = {(i, i + 1): -1 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = -1
    elif letter == "E":
        d = [2] * n
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update({(i, i + 1): -1 for i in range(2, n - 1)})
    elif letter == "F":
        d = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif letter == "G":
        d = [2, 6]
        edges = {(0, 1): -3}
    else:
        raise ValueError(f"unknown Cartan type letter {letter!r}")
    return d, edges


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _check_type(letter: str, n: int) -> None:
    if letter not in _VALID_RANKS:
        raise ValueError(
            f"unknown Cartan type {letter!r}; only irreducible types A-G are supported")
    if not isinstance(n, int) or not _VALID_RANKS[letter](n):
        raise ValueError(f"invalid rank {n!r} for Cartan type {letter}")


def cartan_matrix(letter: str, n: int) -> tuple[tuple[int, ...], ...]:
    """`C[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`."""
    _check_type(letter, n)
    d, edges = _dynkin(letter, n)

    def inner(i, j):
        if i == j:
            return d[i]
        return edges.get((i, j), edges.get((j, i), 0))

    return tuple(tuple(2 * inner(i, j) // d[j] for j in range(n)) for i in range(n))


def weyl_group_order(letter: str, n: int) -> int:
    _check_type(letter, n)
    if letter == "A":
        return factorial(n + 1)
    if letter in "BC":
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(letter, n)]


def parse_type(label: str) -> tuple[str, int]:
    """'B3' -> ('B', 3)."""
    label = label.strip()
    letter, rank = label[:1].upper(), label[1:]
    if not rank.isdigit():
        raise ValueError(f"cannot parse Cartan type {label!r}")
    _check_type(letter, int(rank))
    return letter, int(rank)


def _frac_vec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """
    A finite irreducible root datum.

    `roots` lists the positive roots (sorted by height) followed by their
    negatives in the same order, so `roots[k + N] == -roots[k]` with
    `N = len(positive_roots)`, and `roots[i] == alpha_{i+1}` for `i < rank`.
    `coroots[k]` is the coroot of `roots[k]`.
    """

    cartan_type: str
    rank: int
    flavor: str
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...] = field(repr=False)
    coroots: tuple[tuple[int, ...], ...] = field(repr=False)

    # -- identification --------------------------------------------------

    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.rank}"

    @property
    def descriptor(self) -> str:
        return f"{self.label}/{self.flavor}"

    def key(self) -> tuple:
        return (self.cartan_type, self.rank, self.flavor)

    def __eq__(self, other):
        return isinstance(other, RootDatum) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- roots -----------------------------------------------------------

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.num_positive]

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.rank]

    @property
    def simple_coroots(self) -> tuple[tuple[int, ...], ...]:
        return self.coroots[: self.rank]

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return {r: k for k, r in enumerate(self.roots)}

    def is_positive_index(self, k: int) -> bool:
        return k < self.num_positive

    @cached_property
    def _root_pairing_rows(self) -> tuple[tuple[int, ...], ...]:
        # row k holds <roots[k], alpha_j^vee> for j = 1..n
        n = self.rank
        return tuple(
            tuple(sum(r[i] * self.cartan[i][j] for i in range(n)) for j in range(n))
            for r in self.roots)

    def root_pairing(self, k: int, coweight: Sequence) -> Fraction:
        """<roots[k], coweight>."""
        row = self._root_pairing_rows[k]
        total = Fraction(0)
        for r, c in zip(row, coweight):
            if r and c:
                total += r * c
        return total

    # -- pairings and forms ---------------------------------------------

    def pair(self, weight: Sequence, coweight: Sequence) -> Fraction:
        """Natural pairing of a weight and a coweight."""
        n = self.rank
        if len(weight) != n or len(coweight) != n:
            raise ValueError("vector length does not match the rank of the datum")
        return sum((Fraction(weight[i]) * self.cartan[i][j] * Fraction(coweight[j])
                    for i in range(n) for j in range(n) if self.cartan[i][j]),
                   Fraction(0))

    @cached_property
    def killing_gram(self) -> tuple[tuple[int, ...], ...]:
        """Gram matrix of the Killing form on the simple coroots."""
        n = self.rank
        rows = self._root_pairing_rows
        return tuple(tuple(sum(r[i] * r[j] for r in rows) for j in range(n))
                     for i in range(n))

    def killing(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.killing_gram
        n = self.rank
        return sum((Fraction(x[i]) * g[i][j] * Fraction(y[j])
                    for i in range(n) for j in range(n) if g[i][j]), Fraction(0))

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        inv = sympy.Matrix(self.cartan).inv()
        return tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q))
                           for j in range(self.rank)) for i in range(self.rank))

    def star(self, coweight: Sequence) -> FinWeight:
        """The weight `x*` with `<x*, y> = (x|y)_can` for every coweight `y`."""
        # C^T a = G x  =>  a = C^{-T} G x
        n = self.rank
        g = self.killing_gram
        gx = [sum((g[i][j] * Fraction(coweight[j]) for j in range(n)), Fraction(0))
              for i in range(n)]
        cinv = self.cartan_inverse
        return tuple(sum((cinv[j][i] * gx[j] for j in range(n)), Fraction(0))
                     for i in range(n))

    # -- lattices --------------------------------------------------------

    def is_integral_weight(self, weight: Sequence) -> bool:
        if self.flavor == ADJOINT:
            return all(Fraction(x).denominator == 1 for x in weight)
        n = self.rank
        return all(sum((Fraction(weight[i]) * self.cartan[i][j] for i in range(n)),
                       Fraction(0)).denominator == 1 for j in range(n))

    def is_integral_coweight(self, coweight: Sequence) -> bool:
        if self.flavor == SIMPLY_CONNECTED:
            return all(Fraction(x).denominator == 1 for x in coweight)
        n = self.rank
        return all(sum((self.cartan[i][j] * Fraction(coweight[j]) for j in range(n)),
                       Fraction(0)).denominator == 1 for i in range(n))

    @cached_property
    def fundamental_coweights(self) -> tuple[FinCoweight, ...]:
        """`varpi_j^vee` in coroot coordinates: `<alpha_i, varpi_j^vee> = delta_ij`."""
        cinv = self.cartan_inverse
        return tuple(tuple(cinv[i][j] for i in range(self.rank)) for j in range(self.rank))

    @cached_property
    def cochar_basis(self) -> tuple[FinCoweight, ...]:
        """A Z-basis of X_*(T), in coroot coordinates."""
        if self.flavor == ADJOINT:
            return self.fundamental_coweights
        return tuple(tuple(Fraction(int(i == j)) for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def char_basis(self) -> tuple[FinWeight, ...]:
        """A Z-basis of X*(T), in root coordinates."""
        n = self.rank
        if self.flavor == ADJOINT:
            return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        # fundamental weights: C^T a = e_j
        cinv = self.cartan_inverse
        return tuple(tuple(cinv[j][i] for i in range(n)) for j in range(n))

    # -- finite Weyl group as permutations of `roots` ---------------------

    def reflect_weight(self, i: int, weight: Sequence) -> FinWeight:
        """s_{i+1} on a weight (0-based simple index)."""
        c = sum((Fraction(weight[k]) * self.cartan[k][i] for k in range(self.rank)),
                Fraction(0))
        out = list(_frac_vec(weight))
        out[i] -= c
        return tuple(out)

    def reflect_coweight(self, i: int, coweight: Sequence) -> FinCoweight:
        c = sum((self.cartan[i][k] * Fraction(coweight[k]) for k in range(self.rank)),
                Fraction(0))
        out = list(_frac_vec(coweight))
        out[i] -= c
        return tuple(out)

    @cached_property
    def identity_perm(self) -> Perm:
        return tuple(range(len(self.roots)))

    @cached_property
    def simple_reflection_perms(self) -> tuple[Perm, ...]:
        idx = self.root_index
        perms = []
        for i in range(self.rank):
            perms.append(tuple(
                idx[tuple(int(x) for x in self.reflect_weight(i, r))] for r in self.roots))
        return tuple(perms)

    def reflection_perm(self, k: int) -> Perm:
        """Permutation of the reflection in `roots[k]`."""
        idx = self.root_index
        cov = self.coroots[k]
        root = self.roots[k]
        out = []
        for j, r in enumerate(self.roots):
            c = self.root_pairing(j, cov)
            out.append(idx[tuple(int(r[m] - c * root[m]) for m in range(self.rank))])
        return tuple(out)

    @staticmethod
    def perm_mul(p: Perm, q: Perm) -> Perm:
        return tuple(p[k] for k in q)

    @staticmethod
    def perm_inv(p: Perm) -> Perm:
        out = [0] * len(p)
        for k, v in enumerate(p):
            out[v] = k
        return tuple(out)

    def perm_word(self, word: Iterable[int]) -> Perm:
        """Product s_{i1} s_{i2} ... for a word of 1-based finite simple indices."""
        p = self.identity_perm
        for i in word:
            p = self.perm_mul(p, self.simple_reflection_perms[i - 1])
        return p

    def w_act_weight(self, p: Perm, weight: Sequence) -> FinWeight:
        out = [Fraction(0)] * self.rank
        for i in range(self.rank):
            a = Fraction(weight[i])
            if a:
                img = self.roots[p[i]]
                for m in range(self.rank):
                    out[m] += a * img[m]
        return tuple(out)

    def w_act_coweight(self, p: Perm, coweight: Sequence) -> FinCoweight:
        # integer arithmetic over a common denominator; this sits on every group product
        coweight = [Fraction(a) for a in coweight]
        den = 1
        for a in coweight:
            den = den * a.denominator // gcd(den, a.denominator)
        out = [0] * self.rank
        for i, a in enumerate(coweight):
            if a:
                num = a.numerator * (den // a.denominator)
                img = self.coroots[p[i]]
                for m in range(self.rank):
                    out[m] += num * img[m]
        return tuple(Fraction(x, den) for x in out)

    def perm_is_valid(self, p: Sequence[int]) -> bool:
        """Whether `p` is the root permutation of some element of W."""
        if sorted(p) != list(range(len(self.roots))):
            return False
        p = tuple(p)
        # w is determined by the images of the simple roots; rebuild and compare
        for k, r in enumerate(self.roots):
            img = self.w_act_weight(p, r)
            if tuple(int(x) for x in img) != self.roots[p[k]] or any(
                    x.denominator != 1 for x in img):
                return False
        return True

    def finite_weyl_group(self) -> list[Perm]:
        """All elements of W (BFS from the identity). Only sensible for small ranks."""
        seen = {self.identity_perm}
        order = [self.identity_perm]
        queue = deque(order)
        while queue:
            p = queue.popleft()
            for s in self.simple_reflection_perms:
                q = self.perm_mul(s, p)
                if q not in seen:
                    seen.add(q)
                    order.append(q)
                    queue.append(q)
        return order

    # -- distinguished elements ----------------------------------------

    @cached_property
    def highest_root_index(self) -> int:
        pos = self.positive_roots
        return max(range(len(pos)), key=lambda k: (sum(pos[k]), pos[k]))

    @cached_property
    def theta(self) -> FinWeight:
        return _frac_vec(self.roots[self.highest_root_index])

    @cached_property
    def theta_dual(self) -> FinCoweight:
        return _frac_vec(self.coroots[self.highest_root_index])

    @cached_property
    def rho(self) -> FinWeight:
        n = self.rank
        return tuple(Fraction(sum(r[i] for r in self.positive_roots), 2) for i in range(n))

    @cached_property
    def h_dual(self) -> int:
        return 1 + int(sum(self.theta_dual))

    def coxeter_m(self, i: int, j: int) -> int:
        """Order of s_i s_j in W (0-based finite indices)."""
        if i == j:
            return 1
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.cartan[i][j] * self.cartan[j][i]]


def build_root_datum(cartan_type: str, rank: int, flavor: str = SIMPLY_CONNECTED) -> RootDatum:
    """Construct the root datum of type (cartan_type, rank) with the given isogeny flavor."""
    letter = cartan_type.upper()
    _check_type(letter, rank)
    if flavor not in (SIMPLY_CONNECTED, ADJOINT):
        raise ValueError(f"flavor must be 'sc' or 'adjoint', not {flavor!r}")
    cartan = cartan_matrix(letter, rank)
    n = rank

    def reflect_root(j, a):
        c = sum(a[k] * cartan[k][j] for k in range(n))
        return a[:j] + (a[j] - c,) + a[j + 1:]

    def reflect_coroot(j, b):
        c = sum(cartan[j][k] * b[k] for k in range(n))
        return b[:j] + (b[j] - c,) + b[j + 1:]

    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    coroot_of = {u: u for u in unit}
    queue = deque(unit)
    while queue:
        a = queue.popleft()
        b = coroot_of[a]
        for j in range(n):
            a2 = reflect_root(j, a)
            if a2 not in coroot_of:
                coroot_of[a2] = reflect_coroot(j, b)
                queue.append(a2)

    positive = sorted((a for a in coroot_of if all(x >= 0 for x in a)),
                      key=lambda a: (sum(a), tuple(-x for x in a)))
    if 2 * len(positive) != len(coroot_of):
        raise AssertionError("root closure is not symmetric under negation")
    roots = tuple(positive) + tuple(tuple(-x for x in a) for a in positive)
    coroots = tuple(coroot_of[a] for a in roots)
    return RootDatum(letter, rank, flavor, cartan, roots, coroots)


# -- thin functional wrappers ---------------------------------------------

def killing_form(d: RootDatum, x: Sequence, y: Sequence) -> Fraction:
    """(x|y)_can = sum over all roots of <alpha, x><alpha, y>."""
    return d.killing(x, y)


def highest_root(d: RootDatum) -> tuple[FinWeight, FinCoweight]:
    return d.theta, d.theta_dual


def dual_coxeter_number(d: RootDatum) -> int:
    return d.h_dual


def rho(d: RootDatum) -> FinWeight:
    return d.rho


def weyl_orbit(d: RootDatum, coweight: Sequence) -> set[FinCoweight]:
    """Orbit of a coweight under the finite Weyl group, by reflection closure."""
    start = _frac_vec(coweight)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(d.rank):
            v2 = d.reflect_coweight(i, v)
            if v2 not in seen:
                seen.add(v2)
                queue.append(v2)
    return seen
