"""
The extended affine Weyl group W~ = X_*(T) x| W.

An element `(lam, w)` stands for `t^lam w`, so

    (lam1, w1) (lam2, w2) = (lam1 + w1 lam2, w1 w2).

Real affine roots are written `(k, m)` meaning `roots[k] + m delta`; the
element `(lam, w)` sends it to `(w[k], m + <w roots[k], lam>)`. Length,
descents and reduced words are all read off from this action.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .afflattice import (AffCoweight, AffWeight, affine_simple_coroot, affine_simple_root,
                         pair, weight_basis)
from .rootsys import FinCoweight, Perm, RootDatum

__all__ = ["ExtWeylElt", "CoxOmegaWord", "ExtendedAffineWeylGroup"]


@dataclass(frozen=True)
class ExtWeylElt:
    lam: FinCoweight
    w: Perm
    group: "ExtendedAffineWeylGroup" = field(compare=False, repr=False)

    def __mul__(self, other: "ExtWeylElt") -> "ExtWeylElt":
        return self.group.mul(self, other)

    def inverse(self) -> "ExtWeylElt":
        return self.group.inv(self)

    def length(self) -> int:
        return self.group.length(self)

    def is_identity(self) -> bool:
        return self == self.group.identity


@dataclass(frozen=True)
class CoxOmegaWord:
    """`s_{word[0]} s_{word[1]} ... omega`, with `omega` of length zero."""

    word: tuple[int, ...]
    omega: ExtWeylElt

    def evaluate(self) -> ExtWeylElt:
        return self.omega.group.from_word(self.word, self.omega)


class ExtendedAffineWeylGroup:
    """W~ for a root datum, with the s_0 sign fixed by self-calibration."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        self._word_cache: dict[ExtWeylElt, CoxOmegaWord] = {}
        self._parabolic_cache: dict[frozenset[int], list[ExtWeylElt]] = {}
        self.s0_sign = self._calibrate_s0()

    def __repr__(self):
        return f"ExtendedAffineWeylGroup({self.datum.descriptor})"

    # -- construction ----------------------------------------------------

    def element(self, lam: Sequence, w: Perm | None = None) -> ExtWeylElt:
        lam = tuple(Fraction(x) for x in lam)
        if len(lam) != self.rank:
            raise ValueError("translation part has the wrong rank")
        return ExtWeylElt(lam, self.datum.identity_perm if w is None else tuple(w), self)

    @cached_property
    def identity(self) -> ExtWeylElt:
        return self.element((0,) * self.rank)

    def translation(self, lam: Sequence) -> ExtWeylElt:
        if not self.datum.is_integral_coweight(lam):
            raise ValueError(f"{tuple(str(x) for x in lam)} is not in X_*(T)")
        return self.element(lam)

    def finite(self, w: Perm) -> ExtWeylElt:
        return self.element((0,) * self.rank, w)

    def _s0_candidate(self, eps: int) -> ExtWeylElt:
        d = self.datum
        s_theta = d.reflection_perm(d.highest_root_index)
        return self.element(tuple(eps * x for x in d.theta_dual), s_theta)

    def _calibrate_s0(self) -> int:
        d = self.datum
        a0, a0v = affine_simple_root(d, 0), affine_simple_coroot(d, 0)
        coweights = [AffCoweight(1, (0,) * d.rank, 0), AffCoweight(0, (0,) * d.rank, 1)]
        coweights += [AffCoweight.finite(b) for b in d.simple_coroots]
        for eps in (1, -1):
            s0 = self._s0_candidate(eps)
            ok = all(self.act_on_weight(s0, xi) == xi - pair(d, xi, a0v) * a0
                     for xi in weight_basis(d))
            ok = ok and all(self.act_on_coweight(s0, eta) == eta - pair(d, a0, eta) * a0v
                            for eta in coweights)
            if ok:
                return eps
        raise RuntimeError(f"no sign of t^(+-theta^vee) s_theta realizes s_0 for {d.descriptor}")

    @cached_property
    def simple_reflections(self) -> tuple[ExtWeylElt, ...]:
        d = self.datum
        gens = [self._s0_candidate(self.s0_sign)]
        gens += [self.finite(p) for p in d.simple_reflection_perms]
        return tuple(gens)

    def simple_reflection(self, i: int) -> ExtWeylElt:
        if not 0 <= i <= self.rank:
            raise IndexError(f"simple reflection index {i} out of range 0..{self.rank}")
        return self.simple_reflections[i]

    def from_word(self, word: Iterable[int], omega: ExtWeylElt | None = None) -> ExtWeylElt:
        x = self.identity
        for i in word:
            x = self.mul(x, self.simple_reflection(i))
        return x if omega is None else self.mul(x, omega)

    # -- group law -------------------------------------------------------

    def _check(self, a: ExtWeylElt):
        if a.group is not self and a.group.datum != self.datum:
            raise ValueError("element belongs to a different datum")

    def mul(self, a: ExtWeylElt, b: ExtWeylElt) -> ExtWeylElt:
        self._check(a)
        self._check(b)
        d = self.datum
        wl = d.w_act_coweight(a.w, b.lam)
        return ExtWeylElt(tuple(x + y for x, y in zip(a.lam, wl)), d.perm_mul(a.w, b.w), self)

    def inv(self, a: ExtWeylElt) -> ExtWeylElt:
        d = self.datum
        winv = d.perm_inv(a.w)
        return ExtWeylElt(tuple(-x for x in d.w_act_coweight(winv, a.lam)), winv, self)

    def power(self, a: ExtWeylElt, k: int) -> ExtWeylElt:
        x = self.identity
        base = a if k >= 0 else self.inv(a)
        for _ in range(abs(k)):
            x = self.mul(x, base)
        return x

    # -- actions on the Kac-Moody lattices --------------------------------

    def act_on_weight(self, a: ExtWeylElt, xi: AffWeight) -> AffWeight:
        d = self.datum
        c = xi.c_lambda
        mu = d.w_act_weight(a.w, xi.fin)
        lam = a.lam
        if not any(lam):
            return AffWeight(c, mu, xi.c_delta)
        lam_star = d.star(lam)
        shift = d.pair(mu, lam) - Fraction(1, 2) * d.killing(lam, lam) * c
        return AffWeight(c, tuple(m - c * s for m, s in zip(mu, lam_star)), xi.c_delta + shift)

    def act_on_coweight(self, a: ExtWeylElt, eta: AffCoweight) -> AffCoweight:
        d = self.datum
        dd = eta.c_d
        nu = d.w_act_coweight(a.w, eta.fin)
        lam = a.lam
        if not any(lam):
            return AffCoweight(eta.c_k, nu, dd)
        shift = d.killing(nu, lam) - Fraction(1, 2) * d.killing(lam, lam) * dd
        return AffCoweight(eta.c_k + shift, tuple(v - dd * l for v, l in zip(nu, lam)), dd)

    # -- affine roots, length, descents ---------------------------------

    @cached_property
    def _simple_root_indices(self) -> tuple[tuple[int, int], ...]:
        d = self.datum
        a0 = (d.root_index[tuple(-x for x in d.roots[d.highest_root_index])], 1)
        return (a0,) + tuple((i, 0) for i in range(self.rank))

    def affine_simple_root_index(self, i: int) -> tuple[int, int]:
        """alpha_i as (finite root index k, delta coefficient m): roots[k] + m delta."""
        return self._simple_root_indices[i]

    def root_image(self, a: ExtWeylElt, k: int, m: int) -> tuple[int, int]:
        k2 = a.w[k]
        return k2, m + int(self.datum.root_pairing(k2, a.lam))

    def is_positive_root(self, k: int, m: int) -> bool:
        return m > 0 or (m == 0 and self.datum.is_positive_index(k))

    def length(self, a: ExtWeylElt) -> int:
        """Number of positive real affine roots sent to negative ones."""
        d = self.datum
        total = 0
        for k in range(len(d.roots)):
            k2 = a.w[k]
            m = int(d.root_pairing(k2, a.lam))
            lo = 0 if d.is_positive_index(k) else 1
            hi = -m - 1 if d.is_positive_index(k2) else -m
            if hi >= lo:
                total += hi - lo + 1
        return total

    def is_right_descent(self, a: ExtWeylElt, i: int) -> bool:
        return not self.is_positive_root(*self.root_image(a, *self.affine_simple_root_index(i)))

    def is_left_descent(self, a: ExtWeylElt, i: int) -> bool:
        # a^{-1}(roots[k] + m delta) = roots[w^{-1} k] + (m - <roots[k], lam>) delta
        k, m = self.affine_simple_root_index(i)
        return not self.is_positive_root(a.w.index(k), m - int(self.datum.root_pairing(k, a.lam)))

    def left_descents(self, a: ExtWeylElt) -> list[int]:
        return [i for i in range(self.rank + 1) if self.is_left_descent(a, i)]

    def right_descents(self, a: ExtWeylElt) -> list[int]:
        return [i for i in range(self.rank + 1) if self.is_right_descent(a, i)]

    def reduced_word(self, a: ExtWeylElt) -> CoxOmegaWord:
        """Lexicographically smallest reduced word (0 < 1 < ... < n) and the Omega_I part."""
        cached = self._word_cache.get(a)
        if cached is not None:
            return cached
        word = []
        x = a
        while True:
            ainv = self.inv(x)
            i = next((i for i in range(self.rank + 1) if self.is_right_descent(ainv, i)), None)
            if i is None:
                break
            word.append(i)
            x = self.mul(self.simple_reflections[i], x)
        out = CoxOmegaWord(tuple(word), x)
        self._word_cache[a] = out
        return out

    # -- Omega_I ---------------------------------------------------------

    @staticmethod
    def _coset_key(lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(x - (x.numerator // x.denominator) for x in lam)

    @cached_property
    def omega_elements(self) -> tuple[ExtWeylElt, ...]:
        """Length-zero elements, one per class in X_*(T)/ZPhi^vee; identity first."""
        d = self.datum
        start = tuple(Fraction(0) for _ in range(self.rank))
        reps = {self._coset_key(start): start}
        queue = deque([start])
        while queue:
            lam = queue.popleft()
            for b in d.cochar_basis:
                lam2 = tuple(x + y for x, y in zip(lam, b))
                key = self._coset_key(lam2)
                if key not in reps:
                    reps[key] = key
                    queue.append(key)
        out = []
        for key in sorted(reps):
            omega = self.reduced_word(self.element(key)).omega
            out.append(omega)
        return tuple(out)

    def omega_id(self, omega: ExtWeylElt) -> int:
        return self.omega_elements.index(omega)

    def omega_decompose(self, a: ExtWeylElt) -> tuple[ExtWeylElt, ExtWeylElt]:
        """(a omega^{-1}, omega) with omega of length zero and a omega^{-1} in W_aff."""
        omega = self.reduced_word(a).omega
        return self.mul(a, self.inv(omega)), omega

    def conj_simple_by_omega(self, omega: ExtWeylElt, i: int) -> int:
        """The index j with omega s_i omega^{-1} = s_j."""
        if self.length(omega) != 0:
            raise ValueError("omega must have length zero")
        x = self.mul(self.mul(omega, self.simple_reflection(i)), self.inv(omega))
        return self.simple_reflections.index(x)

    # -- enumeration -----------------------------------------------------

    def sort_key(self, a: ExtWeylElt) -> tuple:
        rw = self.reduced_word(a)
        return (len(rw.word), rw.word, self.omega_id(rw.omega))

    def elements_up_to_length(self, max_length: int) -> list[ExtWeylElt]:
        """All elements with length <= max_length, sorted by `sort_key`."""
        level = list(self.omega_elements)
        seen = set(level)
        out = list(level)
        for ell in range(max_length):
            nxt = []
            for x in level:
                for s in self.simple_reflections:
                    y = self.mul(s, x)
                    if y not in seen and self.length(y) == ell + 1:
                        seen.add(y)
                        nxt.append(y)
            out.extend(nxt)
            level = nxt
        return sorted(out, key=self.sort_key)

    def parabolic_subgroup(self, subset: Iterable[int]) -> list[ExtWeylElt]:
        """Elements of W_S = <s_i : i in S>; S must be a proper subset of {0..n}."""
        key = frozenset(subset)
        cached = self._parabolic_cache.get(key)
        if cached is not None:
            return list(cached)
        subset = sorted(key)
        if any(not 0 <= i <= self.rank for i in subset):
            raise IndexError("parabolic index out of range")
        if len(subset) == self.rank + 1:
            raise ValueError("W_S is infinite when S contains every affine node")
        gens = [self.simple_reflections[i] for i in subset]
        seen = {self.identity}
        out = [self.identity]
        queue = deque(out)
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.mul(s, x)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        out.sort(key=self.sort_key)
        self._parabolic_cache[key] = out
        return list(out)

    # -- parabolic double cosets ---------------------------------------

    def is_min_double_coset_rep(self, P: Iterable[int], Q: Iterable[int], a: ExtWeylElt) -> bool:
        return (not any(self.is_left_descent(a, i) for i in P)
                and not any(self.is_right_descent(a, j) for j in Q))

    def min_double_coset_rep(self, P: Iterable[int], Q: Iterable[int], a: ExtWeylElt) -> ExtWeylElt:
        """The unique minimal-length element of W_P a W_Q."""
        P, Q = tuple(P), tuple(Q)
        x = a
        changed = True
        while changed:
            changed = False
            for i in P:
                if self.is_left_descent(x, i):
                    x = self.mul(self.simple_reflections[i], x)
                    changed = True
            for j in Q:
                if self.is_right_descent(x, j):
                    x = self.mul(x, self.simple_reflections[j])
                    changed = True
        return x

    def double_coset(self, P: Iterable[int], Q: Iterable[int], a: ExtWeylElt) -> set[ExtWeylElt]:
        WP = self.parabolic_subgroup(P)
        WQ = self.parabolic_subgroup(Q)
        return {self.mul(self.mul(p, a), q) for p in WP for q in WQ}

    def double_cosets(self, P: Iterable[int], Q: Iterable[int], max_length: int) -> list[ExtWeylElt]:
        """Minimal representatives of all W_P\\W~/W_Q cosets meeting {length <= max_length}."""
        P, Q = tuple(P), tuple(Q)
        return [x for x in self.elements_up_to_length(max_length)
                if self.is_min_double_coset_rep(P, Q, x)]

    # -- Bruhat order ----------------------------------------------------

    def bruhat_leq(self, a: ExtWeylElt, b: ExtWeylElt) -> bool:
        """Bruhat order; elements with different Omega_I parts are incomparable."""
        if self.reduced_word(a).omega != self.reduced_word(b).omega:
            return False
        return self._bruhat(a, b)

    def _bruhat(self, a: ExtWeylElt, b: ExtWeylElt) -> bool:
        la, lb = self.length(a), self.length(b)
        if la > lb:
            return False
        if lb == 0:
            return a == b
        i = self.reduced_word(b).word[0]
        s = self.simple_reflections[i]
        if self.is_left_descent(a, i):
            return self._bruhat(self.mul(s, a), self.mul(s, b))
        return self._bruhat(a, self.mul(s, b))
