"""
Operator model of the graded DAHA on Sym(X*(T~)_Q)[u].

    s_i   -> p |-> s_i.p + u Delta_i(p)
    omega -> p |-> omega.p
    xi, u -> multiplication

This is used purely as a cross-check of `Daha.mul`, so the divided difference
here is computed by a different route: change variables so that alpha_i is a
coordinate, strip one power of it, and change back.
"""

from __future__ import annotations

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .afflattice import weight_basis
from .daha import Daha, DahaElt, InvariantViolation
from .extweyl import ExtWeylElt

__all__ = ["divided_difference", "simple_operator", "group_operator", "act"]


def _twist(H: Daha, g: ExtWeylElt, p: PolyElement) -> PolyElement:
    # evaluate each monomial directly: g.(x1^e1 ... xk^ek) = prod (g.x_j)^e_j
    images = [H.weight_poly(H.group.act_on_weight(g, xi)) for xi in weight_basis(H.datum)]
    images.append(H.u)
    out = H.ring.zero
    for monom, c in p.items():
        term = H.ring(c)
        for img, e in zip(images, monom):
            if e:
                term *= img ** e
        out += term
    return out


def divided_difference(H: Daha, i: int, p: PolyElement) -> PolyElement:
    """(p - s_i.p) / alpha_i via a coordinate change making alpha_i a variable."""
    f = p - _twist(H, H.group.simple_reflection(i), p)
    if not f:
        return H.ring.zero
    alpha = H.alpha_polys[i]
    # pivot on the first generator with a nonzero coefficient in alpha_i
    j = next(k for k in range(H.num_weight_vars) if alpha.coeff(H.gens[k]))
    xj = H.gens[j]
    c = alpha.coeff(xj)
    rest = alpha - c * xj
    # x_j = (y - rest)/c with y stored in the slot of x_j
    g = f.compose(xj, (xj - rest) * (QQ(1) / c))
    stripped = {}
    for monom, coeff in g.items():
        if monom[j] == 0:
            raise InvariantViolation(f"alpha_{i} does not divide p - s_{i}.p")
        m = list(monom)
        m[j] -= 1
        stripped[tuple(m)] = coeff
    return H.ring(stripped).compose(xj, alpha)


def simple_operator(H: Daha, i: int, p: PolyElement) -> PolyElement:
    """T_i(p) = s_i.p + u Delta_i(p)."""
    return _twist(H, H.group.simple_reflection(i), p) + H.u * divided_difference(H, i, p)


def group_operator(H: Daha, g: ExtWeylElt, p: PolyElement) -> PolyElement:
    rw = H.group.reduced_word(g)
    out = _twist(H, rw.omega, p)
    for i in reversed(rw.word):
        out = simple_operator(H, i, out)
    return out


def act(H: Daha, a: DahaElt, p: PolyElement) -> PolyElement:
    """Action of a = sum r_g g on p: sum r_g T_g(p)."""
    out = H.ring.zero
    for g, r in a.terms.items():
        out += r * group_operator(H, g, p)
    return out
