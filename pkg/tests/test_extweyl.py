"""Extended affine Weyl group: group law, actions, length and orders against brute-force oracles."""

import random
from fractions import Fraction as F
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given, strategies as st

from dahakit.afflattice import (AffCoweight, affine_cartan_matrix, affine_simple_coroot,
                                affine_simple_root, pair, weight_basis)
from dahakit.sampling import random_coweight, random_element, random_weight, rng_for

from conftest import SMALL, group


def bfs_lengths(W, max_len):
    """Cayley-graph distances in W_aff from the identity (right multiplication)."""
    dist = {W.identity: 0}
    frontier = [W.identity]
    for k in range(1, max_len + 1):
        nxt = []
        for x in frontier:
            for s in W.simple_reflections:
                y = W.mul(x, s)
                if y not in dist:
                    dist[y] = k
                    nxt.append(y)
        frontier = nxt
    return dist


def coxeter_m(a_ij, a_ji):
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(a_ij * a_ji)


@pytest.mark.parametrize("letter,n", SMALL)
def test_length_matches_bfs(letter, n):
    W = group(letter, n)
    dist = bfs_lengths(W, 6)
    assert all(W.length(x) == k for x, k in dist.items())
    # elements_up_to_length sees exactly the same set (sc: Omega trivial)
    assert set(W.elements_up_to_length(5)) == {x for x, k in dist.items() if k <= 5}


@pytest.mark.parametrize("letter,n", SMALL)
def test_length_adjoint_omega_twist(letter, n):
    W = group(letter, n, "adjoint")
    dist = bfs_lengths(W, 4)
    for om in W.omega_elements:
        assert W.length(om) == 0
        for x, k in list(dist.items())[:60]:
            assert W.length(W.mul(x, om)) == k == W.length(W.mul(om, x))


@pytest.mark.parametrize("letter,n", SMALL)
def test_translation_length_formula(letter, n):
    W = group(letter, n, "adjoint")
    d = W.datum
    for coeffs in product(range(-2, 3), repeat=n):
        lam = tuple(sum(c * b[k] for c, b in zip(coeffs, d.cochar_basis)) for k in range(n))
        expected = sum(abs(d.pair(a, lam)) for a in d.positive_roots)
        assert W.length(W.translation(lam)) == expected


@pytest.mark.parametrize("letter,n", SMALL + [("A", 3), ("B", 3), ("D", 4)])
def test_coxeter_relations(letter, n):
    W = group(letter, n)
    A = affine_cartan_matrix(W.datum)
    for i, j in combinations(range(n + 1), 2):
        m = coxeter_m(A[i][j], A[j][i])
        if m is None:
            continue
        si, sj = W.simple_reflection(i), W.simple_reflection(j)
        assert W.power(W.mul(si, sj), m) == W.identity
        assert all(W.power(W.mul(si, sj), k) != W.identity for k in range(1, m))
    for s in W.simple_reflections:
        assert W.mul(s, s) == W.identity


@pytest.mark.parametrize("letter,n", SMALL + [("B", 3), ("F", 4), ("E", 6)])
@pytest.mark.parametrize("flavor", ["sc", "adjoint"])
def test_simple_reflections_reflect(letter, n, flavor):
    W = group(letter, n, flavor)
    d = W.datum
    coweights = [AffCoweight(1, (0,) * n, 0), AffCoweight(0, (0,) * n, 1)]
    coweights += [AffCoweight.finite(b) for b in d.simple_coroots]
    for i in range(n + 1):
        s, a, av = W.simple_reflection(i), affine_simple_root(d, i), affine_simple_coroot(d, i)
        for xi in weight_basis(d):
            assert W.act_on_weight(s, xi) == xi - pair(d, xi, av) * a
        for eta in coweights:
            assert W.act_on_coweight(s, eta) == eta - pair(d, a, eta) * av


def test_s0_sign_a1():
    # s_0(d) = d - alpha_0^vee forces the finite part of s_0.d to be theta^vee = -lambda
    assert group("A", 1).s0_sign == -1


def test_a1_translation_words():
    W = group("A", 1)
    t = W.translation((1,))
    assert W.length(t) == 2
    assert W.reduced_word(t).word == (1, 0)
    Wa = group("A", 1, "adjoint")
    t = Wa.translation((F(1, 2),))
    rw = Wa.reduced_word(t)
    assert Wa.length(t) == 1 and rw.word == (1,) and Wa.omega_id(rw.omega) == 1
    assert Wa.conj_simple_by_omega(rw.omega, 0) == 1 and Wa.conj_simple_by_omega(rw.omega, 1) == 0


@pytest.mark.parametrize("letter,n", SMALL)
@pytest.mark.parametrize("flavor", ["sc", "adjoint"])
def test_omega_group(letter, n, flavor):
    W = group(letter, n, flavor)
    d = W.datum
    expected = 1 if flavor == "sc" else int(sympy.Matrix(d.cartan).det())
    assert len(W.omega_elements) == expected
    assert W.omega_id(W.identity) == 0
    A = affine_cartan_matrix(d)
    for om in W.omega_elements:
        sigma = [W.conj_simple_by_omega(om, i) for i in range(n + 1)]
        assert sorted(sigma) == list(range(n + 1))
        assert all(A[sigma[i]][sigma[j]] == A[i][j] for i in range(n + 1) for j in range(n + 1))
        for i in range(n + 1):
            conj = W.mul(W.mul(om, W.simple_reflection(i)), W.inv(om))
            assert conj == W.simple_reflection(sigma[i])


def test_reduced_word_is_lex_smallest():
    W = group("A", 2)
    for x in W.elements_up_to_length(4):
        ell = W.length(x)
        words = [w for w in product(range(3), repeat=ell) if W.from_word(w) == x]
        assert W.reduced_word(x).word == min(words)


@pytest.mark.parametrize("letter,n", SMALL)
def test_reduced_word_evaluates(letter, n):
    W = group(letter, n, "adjoint")
    rng = rng_for(3, "rw", letter, n)
    for _ in range(30):
        x = random_element(W, rng, 6)
        rw = W.reduced_word(x)
        assert rw.evaluate() == x and len(rw.word) == W.length(x)


def subword_leq(W, a, b):
    word = W.reduced_word(b).word
    om = W.reduced_word(b).omega
    return any(W.from_word([word[i] for i in idx], om) == a
               for k in range(len(word) + 1) for idx in combinations(range(len(word)), k))


@pytest.mark.parametrize("letter,n,flavor", [("A", 1, "sc"), ("A", 2, "sc"), ("A", 1, "adjoint"),
                                             ("B", 2, "sc")])
def test_bruhat_matches_subwords(letter, n, flavor):
    W = group(letter, n, flavor)
    elts = W.elements_up_to_length(3)
    for a, b in product(elts, repeat=2):
        assert W.bruhat_leq(a, b) == subword_leq(W, a, b)


def test_bruhat_examples():
    W = group("A", 1)
    s0, s1, e = W.simple_reflection(0), W.simple_reflection(1), W.identity
    b = W.from_word([0, 1, 0])
    assert W.bruhat_leq(b, b) and W.bruhat_leq(e, s0)
    assert W.bruhat_leq(s0, b) and W.bruhat_leq(s1, b)
    assert not W.bruhat_leq(b, s0)
    Wa = group("A", 1, "adjoint")
    om = Wa.omega_elements[1]
    assert not Wa.bruhat_leq(Wa.identity, om)


@pytest.mark.parametrize("letter,n", [("A", 1), ("A", 2), ("B", 2)])
def test_min_double_coset_rep_brute_force(letter, n):
    W = group(letter, n)
    subsets = [s for k in range(n + 1) for s in combinations(range(n + 1), k)]
    elts = W.elements_up_to_length(3)
    for P, Q in product(subsets, repeat=2):
        for x in elts[:25]:
            coset = W.double_coset(P, Q, x)
            ml = min(W.length(y) for y in coset)
            shortest = [y for y in coset if W.length(y) == ml]
            assert len(shortest) == 1
            assert W.min_double_coset_rep(P, Q, x) == shortest[0]
            assert W.is_min_double_coset_rep(P, Q, shortest[0])
        assert W.min_double_coset_rep(P, Q, W.identity) == W.identity


def test_double_cosets_a1():
    W = group("A", 1)
    reps = W.double_cosets([1], [1], 2)
    assert [W.reduced_word(r).word for r in reps] == [(), (0,)]


def test_errors():
    W = group("A", 2)
    with pytest.raises(ValueError):
        W.translation((F(1, 3), 0))
    with pytest.raises(ValueError):
        W.parabolic_subgroup([0, 1, 2])
    with pytest.raises(IndexError):
        W.simple_reflection(3)
    with pytest.raises(ValueError):
        W.mul(W.identity, group("B", 2).identity)


words = st.lists(st.integers(0, 2), max_size=6)


@given(words, words, words, st.integers(0, 2))
def test_group_axioms(w1, w2, w3, k):
    W = group("A", 2, "adjoint")
    om = W.omega_elements[k]
    a, b, c = W.from_word(w1, om), W.from_word(w2), W.from_word(w3, om)
    assert W.mul(W.mul(a, b), c) == W.mul(a, W.mul(b, c))
    assert W.mul(a, W.inv(a)) == W.identity == W.mul(W.inv(a), a)
    assert W.length(W.inv(a)) == W.length(a)
    assert W.length(W.mul(a, b)) <= W.length(a) + W.length(b)


@given(words, words, st.integers(0, 10 ** 6))
def test_action_laws(w1, w2, seed):
    W = group("A", 2, "adjoint")
    d = W.datum
    rng = random.Random(seed)
    a, b = W.from_word(w1, W.omega_elements[seed % 3]), W.from_word(w2)
    xi = random_weight(rng, 2)
    eta = random_coweight(rng, 2)
    ab = W.mul(a, b)
    assert W.act_on_weight(ab, xi) == W.act_on_weight(a, W.act_on_weight(b, xi))
    assert W.act_on_coweight(ab, eta) == W.act_on_coweight(a, W.act_on_coweight(b, eta))
    assert pair(d, W.act_on_weight(a, xi), W.act_on_coweight(a, eta)) == pair(d, xi, eta)
