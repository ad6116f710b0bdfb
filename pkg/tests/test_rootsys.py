"""Root data against Euclidean realizations and closed-form tables."""

from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from dahakit.rootsys import (build_root_datum, cartan_matrix, dual_coxeter_number, killing_form,
                             parse_type, weyl_group_order, weyl_orbit)

from conftest import datum


def _e(n, *pairs):
    v = [F(0)] * n
    for i, c in pairs:
        v[i] += F(c)
    return tuple(v)


def euclidean_simple_roots(letter, n):
    """Bourbaki realizations of the simple roots."""
    if letter == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if letter == "B":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 1))]
    if letter == "C":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 1, 2))]
    if letter == "D":
        return [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [_e(n, (n - 2, 1), (n - 1, 1))]
    if letter == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if letter == "F":
        h = F(1, 2)
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if letter == "E":
        h = F(1, 2)
        e8 = [_e(8, (0, h), (7, h), *[(k, -h) for k in range(1, 7)]), _e(8, (0, 1), (1, 1))]
        e8 += [_e(8, (k, 1), (k - 1, -1)) for k in range(1, 7)]
        return e8[:n]
    raise ValueError(letter)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def euclidean_cartan(letter, n):
    rs = euclidean_simple_roots(letter, n)
    return [[2 * dot(a, b) / dot(b, b) for b in rs] for a in rs]


def euclidean_root_count(letter, n):
    """Orbit of the simple roots under the simple reflections, in the ambient space."""
    rs = euclidean_simple_roots(letter, n)
    seen = set(rs)
    frontier = list(rs)
    while frontier:
        nxt = []
        for v in frontier:
            for a in rs:
                w = tuple(x - 2 * dot(v, a) / dot(a, a) * y for x, y in zip(v, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return len(seen)


ALL_TYPES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + \
    [("C", n) for n in range(2, 6)] + [("D", n) for n in range(4, 7)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

ROOT_COUNT = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
              "D": lambda n: 2 * n * (n - 1), "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
              "F": lambda n: 48, "G": lambda n: 12}

H_DUAL = {("A", 1): 2, ("A", 2): 3, ("B", 2): 3, ("C", 2): 3, ("G", 2): 4, ("F", 4): 9,
          ("D", 4): 6, ("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("B", 3): 5, ("C", 3): 4}


@pytest.mark.parametrize("letter,n", ALL_TYPES)
def test_cartan_matches_euclidean_realization(letter, n):
    assert [list(map(F, r)) for r in cartan_matrix(letter, n)] == euclidean_cartan(letter, n)


@pytest.mark.parametrize("letter,n", ALL_TYPES)
def test_root_count(letter, n):
    d = datum(letter, n)
    assert len(d.roots) == ROOT_COUNT[letter](n) == euclidean_root_count(letter, n)
    assert len(d.positive_roots) * 2 == len(d.roots)


@pytest.mark.parametrize("letter,n", ALL_TYPES)
def test_roots_closed_and_paired(letter, n):
    d = datum(letter, n)
    roots = set(d.roots)
    assert all(tuple(-x for x in r) in roots for r in roots)
    for i in range(n):
        for r in d.roots:
            assert tuple(d.reflect_weight(i, r)) in roots
    # <alpha_i, alpha_j^vee> from the coordinate pairing
    for i, j in product(range(n), repeat=2):
        assert d.pair(d.simple_roots[i], d.simple_coroots[j]) == d.cartan[i][j]
    # each root pairs to 2 with its own coroot
    assert all(d.pair(r, c) == 2 for r, c in zip(d.roots, d.coroots))


@pytest.mark.parametrize("key,h", sorted(H_DUAL.items()))
def test_dual_coxeter_values(key, h):
    d = datum(*key)
    assert dual_coxeter_number(d) == h
    tv = d.theta_dual
    assert killing_form(d, tv, tv) / 2 == 2 * (d.pair(d.rho, tv) + 1) == 2 * h


def test_killing_form_a1():
    # roots +-alpha, <alpha, alpha^vee> = 2: (alpha^vee|alpha^vee) = 4 + 4
    d = datum("A", 1)
    assert d.killing((1,), (1,)) == 8


@pytest.mark.parametrize("letter,n,order", [("A", 1, 2), ("A", 2, 6), ("A", 3, 24), ("B", 2, 8),
                                            ("G", 2, 12), ("B", 3, 48), ("C", 3, 48)])
def test_weyl_group_order(letter, n, order):
    d = datum(letter, n)
    assert weyl_group_order(letter, n) == order == len(d.finite_weyl_group())


@pytest.mark.parametrize("letter,n", [("A", 2), ("B", 2), ("G", 2), ("B", 3)])
def test_highest_root_dominant(letter, n):
    d = datum(letter, n)
    assert all(d.pair(d.theta, c) >= 0 for c in d.simple_coroots)
    assert d.theta == max(d.positive_roots, key=sum)
    assert all(d.pair(d.rho, c) == 1 for c in d.simple_coroots)


def test_flavors_and_integrality():
    sc, ad = datum("A", 2, "sc"), datum("A", 2, "adjoint")
    fw = sc.char_basis[0]  # fundamental weight (2/3, 1/3) in root coordinates
    assert fw == (F(2, 3), F(1, 3))
    assert sc.is_integral_weight(fw) and not ad.is_integral_weight(fw)
    fc = ad.fundamental_coweights[0]
    assert ad.is_integral_coweight(fc) and not sc.is_integral_coweight(fc)
    assert sc.is_integral_coweight((1, 0))
    assert ad.is_integral_weight((1, 0))


def test_parse_type_and_errors():
    assert parse_type("E6") == ("E", 6)
    for bad in ["A0", "B1", "D3", "E9", "F3", "G3", "H2"]:
        with pytest.raises(ValueError):
            build_root_datum(bad[0], int(bad[1:]))
    with pytest.raises(ValueError):
        build_root_datum("A", 2, "weird")


def test_equality_by_type():
    assert build_root_datum("B", 2) == datum("B", 2)
    assert build_root_datum("B", 2) != build_root_datum("C", 2)
    assert datum("B", 2, "adjoint") != datum("B", 2)


vec2 = st.tuples(*[st.fractions(max_denominator=4, min_value=-5, max_value=5)] * 2)


@given(vec2, vec2, st.integers(0, 11))
def test_killing_form_invariant_and_star(x, y, k):
    d = datum("G", 2)
    w = d.finite_weyl_group()[k]
    wx, wy = d.w_act_coweight(w, x), d.w_act_coweight(w, y)
    assert d.killing(wx, wy) == d.killing(x, y) == d.killing(y, x)
    assert d.pair(d.star(x), y) == d.killing(x, y)


@given(vec2, st.integers(0, 7))
def test_weight_and_coweight_actions_compatible(lam, k):
    d = datum("B", 2)
    w = d.finite_weyl_group()[k]
    mu = d.simple_roots[0]
    assert d.pair(d.w_act_weight(w, mu), d.w_act_coweight(w, lam)) == d.pair(mu, lam)


def test_weyl_orbit():
    d = datum("A", 2)
    assert len(weyl_orbit(d, (1, 0))) == 6  # a simple coroot sits in the 6-element coroot orbit
    assert weyl_orbit(d, (0, 0)) == {(0, 0)}
