import random
from fractions import Fraction as F

import pytest

from dahakit import jsonio
from dahakit.afflattice import AffCoweight, AffWeight
from dahakit.sampling import random_daha, random_dcoset, random_element

from conftest import algebra, group


def test_rationals():
    assert jsonio.frac_to_json(F(-3, 4)) == "-3/4"
    assert jsonio.frac_to_json(F(2)) == "2"
    assert jsonio.frac_from_json("5/10") == F(1, 2)
    assert jsonio.frac_from_json(3) == 3
    for bad in [1.5, True, None, "x"]:
        with pytest.raises((ValueError, TypeError)):
            jsonio.frac_from_json(bad)


def test_lattice_round_trip():
    xi = AffWeight(1, (F(1, 2), -3), F(2, 3))
    eta = AffCoweight(F(-1, 5), (0, 7), 1)
    assert jsonio.weight_from_json(jsonio.weight_to_json(xi)) == xi
    assert jsonio.coweight_from_json(jsonio.coweight_to_json(eta)) == eta


def test_elements_round_trip():
    W = group("A", 2, "adjoint")
    rng = random.Random(0)
    for _ in range(20):
        x = random_element(W, rng, 5)
        assert jsonio.elt_from_json(W, jsonio.elt_to_json(x)) == x
        assert jsonio.elt_from_json(W, jsonio.word_to_json(W.reduced_word(x))) == x
    t = W.translation(W.datum.fundamental_coweights[0])
    assert jsonio.elt_to_json(t)["lambda"] == ["2/3", "1/3"]
    assert jsonio.elt_from_json(W, {"lambda": [0, 0], "w_word": [1]}) == W.simple_reflection(1)


def test_element_errors():
    W = group("A", 2)
    with pytest.raises(ValueError):
        jsonio.elt_from_json(W, {"lambda": ["1/3", 0], "w_perm": list(range(6))})
    with pytest.raises(ValueError):
        jsonio.elt_from_json(W, {"lambda": [0, 0], "w_perm": [1, 0, 2, 3, 4, 5]})
    with pytest.raises(ValueError):
        jsonio.elt_from_json(W, {"lambda": [0], "w_perm": list(range(6))})
    with pytest.raises(ValueError):
        jsonio.elt_from_json(W, [1, 2])


def test_daha_round_trip_and_products():
    H = algebra("B", 2, "adjoint")
    rng = random.Random(1)
    for _ in range(10):
        a = random_daha(H, rng, 2)
        assert jsonio.daha_from_json(H, jsonio.daha_to_json(H, a)) == a
    H1 = algebra("A", 1)
    expr = {"product": [{"s": 1}, {"weight": {"fin": ["1"]}}]}
    assert jsonio.daha_from_json(H1, expr) == H1.s(1) * H1.weight(AffWeight.finite((1,)))
    expr = {"product": [{"u": 2}, {"scalar": "1/2"}, {"omega": 0}, {"group": {"word": [0]}}]}
    assert jsonio.daha_from_json(H1, expr) == H1.poly(H1.u ** 2) * F(1, 2) * H1.s(0)
    with pytest.raises(ValueError):
        jsonio.daha_from_json(H1, {"product": [{"t": 1}]})
    with pytest.raises(ValueError):
        jsonio.daha_from_json(H1, [{"poly": [{"mono": {"9": 1}, "coeff": "1"}]}])


def test_dcoset_round_trip():
    W = group("A", 2)
    rng = random.Random(2)
    f = random_dcoset(W, (1,), (0, 2), rng, 4, 3)
    g = jsonio.dcoset_from_json(W, jsonio.dcoset_to_json(f))
    assert g == f
    # non-minimal representatives are canonicalized
    s1 = W.simple_reflection(1)
    obj = {"P": [1], "Q": [], "support": [{"rep": jsonio.elt_to_json(s1), "coeff": "2"}]}
    assert list(jsonio.dcoset_from_json(W, obj).support) == [W.identity]


@pytest.mark.parametrize("bad", [[{"s": 1}], [3], {"s": 1}, {"product": [{"s": 1, "u": 1}]}])
def test_daha_malformed_terms_rejected(bad):
    with pytest.raises(ValueError):
        jsonio.daha_from_json(algebra("A", 1), bad)
