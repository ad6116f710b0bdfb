"""JSON encodings. Rationals travel as strings "p/q" (or "p" when integral)."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from sympy.polys.domains import QQ

from .afflattice import AffCoweight, AffWeight
from .convolution import DCosetFn
from .daha import Daha, DahaElt
from .extweyl import CoxOmegaWord, ExtendedAffineWeylGroup, ExtWeylElt

__all__ = [
    "frac_to_json", "frac_from_json", "weight_to_json", "weight_from_json",
    "coweight_to_json", "coweight_from_json", "elt_to_json", "elt_from_json",
    "word_to_json", "daha_to_json", "daha_from_json", "dcoset_to_json", "dcoset_from_json",
]


def frac_to_json(x) -> str:
    x = Fraction(int(x.numerator), int(x.denominator)) if not isinstance(x, Fraction) else x
    return str(x)


def frac_from_json(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected an integer or a 'p/q' string, got {v!r}")
    return Fraction(v)


def _lattice_entry(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def weight_to_json(xi: AffWeight) -> dict:
    return {"c_lambda": frac_to_json(xi.c_lambda), "fin": [frac_to_json(x) for x in xi.fin],
            "c_delta": frac_to_json(xi.c_delta)}


def weight_from_json(obj: dict) -> AffWeight:
    return AffWeight(frac_from_json(obj.get("c_lambda", 0)),
                     [frac_from_json(x) for x in obj["fin"]],
                     frac_from_json(obj.get("c_delta", 0)))


def coweight_to_json(eta: AffCoweight) -> dict:
    return {"c_k": frac_to_json(eta.c_k), "fin": [frac_to_json(x) for x in eta.fin],
            "c_d": frac_to_json(eta.c_d)}


def coweight_from_json(obj: dict) -> AffCoweight:
    return AffCoweight(frac_from_json(obj.get("c_k", 0)),
                       [frac_from_json(x) for x in obj["fin"]],
                       frac_from_json(obj.get("c_d", 0)))


def elt_to_json(a: ExtWeylElt) -> dict:
    return {"lambda": [_lattice_entry(x) for x in a.lam], "w_perm": list(a.w)}


def word_to_json(rw: CoxOmegaWord) -> dict:
    return {"word": list(rw.word), "omega": rw.omega.group.omega_id(rw.omega)}


def elt_from_json(W: ExtendedAffineWeylGroup, obj: dict) -> ExtWeylElt:
    """Accepts {"lambda", "w_perm"}, {"lambda", "w_word"} or {"word", "omega"}."""
    if not isinstance(obj, dict):
        raise ValueError("group element must be a JSON object")
    if "word" in obj:
        word = [int(i) for i in obj["word"]]
        omega = W.omega_elements[int(obj.get("omega", 0))]
        return W.from_word(word, omega)
    lam = [frac_from_json(x) for x in obj.get("lambda", [0] * W.rank)]
    if len(lam) != W.rank:
        raise ValueError("lambda has the wrong length")
    if not W.datum.is_integral_coweight(lam):
        raise ValueError("lambda is not in the cocharacter lattice")
    if "w_perm" in obj:
        perm = tuple(int(i) for i in obj["w_perm"])
        if not W.datum.perm_is_valid(perm):
            raise ValueError("w_perm is not a Weyl group permutation of the roots")
    else:
        perm = W.datum.perm_word(int(i) for i in obj.get("w_word", []))
    return W.element(lam, perm)


def _poly_to_json(H: Daha, p) -> list:
    n = H.datum.rank
    out = []
    for monom in sorted(p.keys(), reverse=True):
        mono = {str(k): e for k, e in enumerate(monom[: n + 2]) if e}
        if monom[n + 2]:
            mono["u"] = monom[n + 2]
        c = p[monom]
        out.append({"mono": mono, "coeff": frac_to_json(Fraction(int(c.numerator), int(c.denominator)))})
    return out


def _poly_from_json(H: Daha, terms: list):
    n = H.datum.rank
    data = {}
    for t in terms:
        monom = [0] * (n + 3)
        for k, e in t.get("mono", {}).items():
            slot = n + 2 if k == "u" else int(k)
            if not 0 <= slot <= n + 2 or (k != "u" and slot > n + 1):
                raise ValueError(f"basis index {k!r} out of range")
            monom[slot] += int(e)
        c = frac_from_json(t["coeff"])
        key = tuple(monom)
        data[key] = data.get(key, QQ(0)) + QQ(c.numerator, c.denominator)
    return H.ring({k: v for k, v in data.items() if v})


def daha_to_json(H: Daha, a: DahaElt) -> list:
    return [{"group": elt_to_json(g), "poly": _poly_to_json(H, a.terms[g])}
            for g in sorted(a.terms, key=H.group.sort_key)]


def daha_from_json(H: Daha, obj) -> DahaElt:
    """A DahaElt term list, or {"product": [factor, ...]} with factors
    {"s": i}, {"omega": id}, {"group": elt}, {"weight": AffWeight}, {"u": k},
    {"scalar": "p/q"} or a nested term list."""
    if isinstance(obj, list):
        out = H.zero
        for term in obj:
            if not isinstance(term, dict) or not set(term) <= {"poly", "group"}:
                raise ValueError(f"bad DahaElt term {term!r}")
            g = elt_from_json(H.group, term["group"]) if "group" in term else H.group.identity
            out = out + H.poly(_poly_from_json(H, term.get("poly", []))) * H.group_elt(g)
        return out
    if isinstance(obj, dict) and "product" in obj:
        return H.product(_factor(H, f) for f in obj["product"])
    raise ValueError("expected a DahaElt term list or a {\"product\": [...]} object")


def _factor(H: Daha, f) -> DahaElt:
    if isinstance(f, list):
        return daha_from_json(H, f)
    if not isinstance(f, dict) or len(f) != 1:
        raise ValueError(f"bad product factor {f!r}")
    (kind, v), = f.items()
    if kind == "s":
        return H.s(int(v))
    if kind == "omega":
        return H.group_elt(H.group.omega_elements[int(v)])
    if kind == "group":
        return H.group_elt(elt_from_json(H.group, v))
    if kind == "weight":
        return H.weight(weight_from_json(v))
    if kind == "u":
        return H.poly(H.u ** int(v))
    if kind == "scalar":
        return H.scalar(frac_from_json(v))
    if kind == "product":
        return daha_from_json(H, f)
    raise ValueError(f"unknown factor kind {kind!r}")


def dcoset_to_json(f: DCosetFn) -> dict:
    W = f.group
    return {"P": sorted(f.P), "Q": sorted(f.Q),
            "support": [{"rep": elt_to_json(r), "coeff": frac_to_json(f.support[r])}
                        for r in sorted(f.support, key=W.sort_key)]}


def dcoset_from_json(W: ExtendedAffineWeylGroup, obj: dict) -> DCosetFn:
    """Support entries may be any element of the double coset; keys are canonicalized."""
    P, Q = frozenset(int(i) for i in obj["P"]), frozenset(int(i) for i in obj["Q"])
    support: dict = {}
    for entry in obj.get("support", []):
        rep = W.min_double_coset_rep(P, Q, elt_from_json(W, entry["rep"]))
        support[rep] = support.get(rep, Fraction(0)) + frac_from_json(entry["coeff"])
    return DCosetFn(W, P, Q, support)


def dump(obj: Any) -> str:
    import json
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
