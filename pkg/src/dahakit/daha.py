"""
The graded double affine Hecke algebra

    H = Q[W~] (x) Sym(X*(T~)_Q) (x) Q[u]

with relations: u central, omega xi = (omega.xi) omega, and

    s_i xi - (s_i.xi) s_i = <xi, alpha_i^vee> u.

Elements are kept in the normal form sum_g p_g * g with each polynomial
p_g written to the left of its group element. Induction on degree turns the
linear relation into

    s_i p = (s_i.p) s_i + u Delta_i(p),   Delta_i(p) = (p - s_i.p) / alpha_i,

and every product is reduced to this rule by peeling reduced words.

Polynomials live in a sympy sparse ring over QQ with generators
`L, a1, ..., an, D, u` standing for Lambda_can, alpha_1..alpha_n, delta, u.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .afflattice import AffWeight, affine_simple_root, weight_basis
from .extweyl import ExtendedAffineWeylGroup, ExtWeylElt
from .rootsys import RootDatum

__all__ = ["InvariantViolation", "DahaElt", "Daha", "to_qq"]

NEG_INF = float("-inf")


class InvariantViolation(ArithmeticError):
    """A structural identity that must hold exactly did not."""


def to_qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


@dataclass(frozen=True, eq=False)
class DahaElt:
    """sum over `terms` of poly * group element; zero polynomials are never stored."""

    algebra: "Daha" = field(repr=False)
    terms: Mapping[ExtWeylElt, PolyElement]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, DahaElt):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset((g, tuple(sorted(p.items()))) for g, p in self.terms.items()))

    def __add__(self, other):
        return self.algebra.add(self, self.algebra.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return self.algebra.scale(self, -1)

    def __sub__(self, other):
        return self + (-self.algebra.coerce(other))

    def __rsub__(self, other):
        return self.algebra.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.algebra.scale(self, other)
        return self.algebra.mul(self, self.algebra.coerce(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.algebra.scale(self, other)
        return self.algebra.mul(self.algebra.coerce(other), self)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.algebra.format(self)


class Daha:
    """The graded DAHA attached to a root datum."""

    def __init__(self, datum: RootDatum | ExtendedAffineWeylGroup):
        if isinstance(datum, ExtendedAffineWeylGroup):
            self.group = datum
        else:
            self.group = ExtendedAffineWeylGroup(datum)
        self.datum = self.group.datum
        n = self.datum.rank
        names = ["L"] + [f"a{i}" for i in range(1, n + 1)] + ["D", "u"]
        self.ring, *gens = ring(",".join(names), QQ)
        self.gens = tuple(gens)
        self.L, self.D, self.u = gens[0], gens[n + 1], gens[n + 2]
        self.alpha_polys = tuple(self.weight_poly(affine_simple_root(self.datum, i))
                                 for i in range(n + 1))
        self._twist_cache: dict[ExtWeylElt, list] = {}
        self._straighten_cache: dict[tuple[ExtWeylElt, tuple[int, ...]], dict] = {}

    def __repr__(self):
        return f"Daha({self.datum.descriptor})"

    # -- polynomials -----------------------------------------------------

    @property
    def num_weight_vars(self) -> int:
        return self.datum.rank + 2

    def weight_poly(self, xi: AffWeight) -> PolyElement:
        coords = xi.coords()
        if len(coords) != self.num_weight_vars:
            raise ValueError("weight does not belong to this datum")
        p = self.ring.zero
        for c, g in zip(coords, self.gens):
            if c:
                p += to_qq(c) * g
        return p

    def poly_weight(self, p: PolyElement) -> AffWeight:
        """Inverse of `weight_poly` for homogeneous linear polynomials without u."""
        n = self.datum.rank
        coords = [Fraction(0)] * (n + 2)
        for monom, c in p.items():
            if sum(monom) != 1 or monom[-1]:
                raise ValueError("not a linear form in the weight generators")
            coords[monom.index(1)] = Fraction(int(c.numerator), int(c.denominator))
        return AffWeight(coords[0], coords[1:n + 1], coords[n + 1])

    def _substitution(self, g: ExtWeylElt) -> list:
        sub = self._twist_cache.get(g)
        if sub is None:
            sub = []
            for gen, xi in zip(self.gens, weight_basis(self.datum)):
                img = self.weight_poly(self.group.act_on_weight(g, xi))
                if img != gen:
                    sub.append((gen, img))
            self._twist_cache[g] = sub
        return sub

    def twist(self, g: ExtWeylElt, p: PolyElement) -> PolyElement:
        """The polynomial g.p, extending the W~-action on X*(T~) multiplicatively."""
        sub = self._substitution(g)
        if not sub or p.is_ground:
            return p
        return p.compose(sub)

    def divided_difference(self, i: int, p: PolyElement) -> PolyElement:
        """Delta_i(p) = (p - s_i.p) / alpha_i, with exactness enforced."""
        diff = p - self.twist(self.group.simple_reflections[i], p)
        if not diff:
            return self.ring.zero
        try:
            return diff.exquo(self.alpha_polys[i])
        except ExactQuotientFailed as exc:
            raise InvariantViolation(f"alpha_{i} does not divide p - s_{i}.p") from exc

    # -- constructors ----------------------------------------------------

    def element(self, terms: Mapping[ExtWeylElt, PolyElement]) -> DahaElt:
        return DahaElt(self, {g: p for g, p in terms.items() if p})

    @property
    def zero(self) -> DahaElt:
        return DahaElt(self, {})

    @property
    def one(self) -> DahaElt:
        return self.scalar(1)

    def scalar(self, c) -> DahaElt:
        return self.element({self.group.identity: self.ring(to_qq(c))})

    def poly(self, p: PolyElement) -> DahaElt:
        return self.element({self.group.identity: self.ring(p)})

    def weight(self, xi: AffWeight) -> DahaElt:
        return self.poly(self.weight_poly(xi))

    def group_elt(self, g: ExtWeylElt) -> DahaElt:
        return self.element({g: self.ring.one})

    def s(self, i: int) -> DahaElt:
        return self.group_elt(self.group.simple_reflection(i))

    def coerce(self, x) -> DahaElt:
        if isinstance(x, DahaElt):
            if x.algebra is not self and x.algebra.datum != self.datum:
                raise ValueError("element belongs to a different datum")
            return x
        if isinstance(x, ExtWeylElt):
            return self.group_elt(x)
        if isinstance(x, AffWeight):
            return self.weight(x)
        if isinstance(x, PolyElement):
            return self.poly(x)
        if isinstance(x, (int, Fraction)):
            return self.scalar(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a DAHA element")

    # -- linear structure -----------------------------------------------

    def add(self, a: DahaElt, b: DahaElt) -> DahaElt:
        out = dict(a.terms)
        for g, p in b.terms.items():
            q = out.get(g)
            q = p if q is None else q + p
            if q:
                out[g] = q
            else:
                out.pop(g, None)
        return DahaElt(self, out)

    def scale(self, a: DahaElt, c) -> DahaElt:
        c = to_qq(c)
        if not c:
            return self.zero
        return DahaElt(self, {g: p * c for g, p in a.terms.items()})

    # -- multiplication ------------------------------------------------

    def straighten_simple(self, i: int, p: PolyElement) -> DahaElt:
        """Normal form of s_i * p."""
        s = self.group.simple_reflection(i)
        return self.element({s: self.twist(s, p),
                             self.group.identity: self.u * self.divided_difference(i, p)})

    def _straighten_monomial(self, g: ExtWeylElt, monom: tuple[int, ...]) -> dict:
        key = (g, monom)
        cached = self._straighten_cache.get(key)
        if cached is not None:
            return cached
        rw = self.group.reduced_word(g)
        omega = rw.omega
        terms = {omega: self.twist(omega, self.ring({monom: QQ(1)}))}
        for i in reversed(rw.word):
            s = self.group.simple_reflections[i]
            nxt: dict[ExtWeylElt, PolyElement] = defaultdict(lambda: self.ring.zero)
            for h, r in terms.items():
                nxt[self.group.mul(s, h)] += self.twist(s, r)
                dr = self.divided_difference(i, r)
                if dr:
                    nxt[h] += self.u * dr
            terms = {h: r for h, r in nxt.items() if r}
        self._straighten_cache[key] = terms
        return terms

    def straighten(self, g: ExtWeylElt, q: PolyElement) -> dict[ExtWeylElt, PolyElement]:
        """g * q rewritten as sum_h r_h * h."""
        out: dict[ExtWeylElt, PolyElement] = defaultdict(lambda: self.ring.zero)
        for monom, c in q.items():
            for h, r in self._straighten_monomial(g, monom).items():
                out[h] += r * c
        return {h: r for h, r in out.items() if r}

    def mul(self, a: DahaElt, b: DahaElt) -> DahaElt:
        out: dict[ExtWeylElt, PolyElement] = defaultdict(lambda: self.ring.zero)
        for g, p in a.terms.items():
            for h, q in b.terms.items():
                for g2, r in self.straighten(g, q).items():
                    out[self.group.mul(g2, h)] += p * r
        return self.element(out)

    def product(self, factors: Iterable) -> DahaElt:
        out = self.one
        for f in factors:
            out = self.mul(out, self.coerce(f))
        return out

    # -- grading, idempotents, specialization ---------------------------

    def degree(self, a: DahaElt) -> tuple[float, bool]:
        """(top degree, is_homogeneous) with deg u = deg xi = 2, deg g = 0; zero has -inf."""
        degs = {2 * sum(m) for p in a.terms.values() for m in p.monoms()}
        if not degs:
            return NEG_INF, True
        return max(degs), len(degs) == 1

    def idempotent(self, P: Iterable[int]) -> DahaElt:
        """e_P = (1/#W_P) sum_{w in W_P} w."""
        WP = self.group.parabolic_subgroup(P)
        c = QQ(1, len(WP))
        return self.element({w: self.ring(c) for w in WP})

    def sandwich(self, P: Iterable[int], a: DahaElt) -> DahaElt:
        e = self.idempotent(P)
        return self.mul(self.mul(e, a), e)

    def specialize(self, a: DahaElt) -> DahaElt:
        """Image in H/(delta, u)."""
        n = self.datum.rank
        out = {}
        for g, p in a.terms.items():
            q = self.ring({m: c for m, c in p.items() if m[n + 1] == 0 and m[n + 2] == 0})
            if q:
                out[g] = q
        return DahaElt(self, out)

    # -- display -------------------------------------------------------

    def format(self, a: DahaElt) -> str:
        if not a.terms:
            return "0"
        parts = []
        for g in sorted(a.terms, key=self.group.sort_key):
            rw = self.group.reduced_word(g)
            gs = "*".join(f"s{i}" for i in rw.word)
            oid = self.group.omega_id(rw.omega)
            if oid:
                gs = f"{gs}*w{oid}" if gs else f"w{oid}"
            poly = str(a.terms[g].as_expr())
            parts.append(f"({poly})" + (f"*{gs}" if gs else ""))
        return " + ".join(parts)
