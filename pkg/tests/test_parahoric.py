from itertools import combinations

import pytest

from dahakit.afflattice import delta, weight_basis
from dahakit.parahoric import (ParahoricType, enumerate_standard, from_classical_index, levi_weyl_group,
                               to_classical_index)

from conftest import datum, group


def closure_order(W, subset):
    """|<s_i : i in S>| computed on the linear action on the weight basis (independent of W.mul)."""
    basis = weight_basis(W.datum)

    def image(g):
        return tuple(W.act_on_weight(g, xi) for xi in basis)

    gens = [W.simple_reflection(i) for i in subset]
    seen = {image(W.identity)}
    frontier = [W.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = W.mul(x, s)
                key = image(y)
                if key not in seen:
                    seen.add(key)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize("letter,n", [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 6)]
                         + [("C", n) for n in range(2, 6)])
def test_counts_and_round_trip(letter, n):
    d = datum(letter, n)
    types = enumerate_standard(d)
    assert len(types) == 2 ** (n + 1) - 1
    assert len({P.subset for P in types}) == len(types)
    for P in types:
        assert from_classical_index(d, to_classical_index(P)) == P


def test_a1_types_and_anchors():
    d = datum("A", 1)
    assert [P.indices for P in enumerate_standard(d)] == [(), (0,), (1,)]
    iwahori = ParahoricType(d, ())
    assert to_classical_index(iwahori) == (0, 1)
    assert from_classical_index(datum("A", 4), (0,)).subset == {1, 2, 3, 4}


@pytest.mark.parametrize("letter,n", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)])
def test_levi_orders_match_closure(letter, n):
    W = group(letter, n)
    for P in enumerate_standard(W.datum):
        WP = levi_weyl_group(P, W)
        assert len(WP) == closure_order(W, P.subset)
        assert len(set(WP)) == len(WP)
        elts = set(WP)
        assert all(W.mul(x, y) in elts for x in WP for y in WP)
        assert all(W.act_on_weight(x, delta(W.datum)) == delta(W.datum) for x in WP)


def test_levi_examples():
    W = group("A", 2)
    assert levi_weyl_group(ParahoricType(W.datum, ()), W) == [W.identity]
    assert len(levi_weyl_group(ParahoricType(W.datum, (1, 2)), W)) == 6
    W1 = group("A", 1)
    assert levi_weyl_group((1,), W1) == [W1.identity, W1.simple_reflection(1)]


def test_inclusions():
    W = group("B", 2)
    types = enumerate_standard(W.datum)
    for P, Q in combinations(types, 2):
        if P <= Q:
            assert set(levi_weyl_group(P, W)) <= set(levi_weyl_group(Q, W))


def test_errors():
    d = datum("A", 2)
    with pytest.raises(ValueError):
        ParahoricType(d, (0, 1, 2))
    with pytest.raises(ValueError):
        ParahoricType(d, (3,))
    with pytest.raises(ValueError):
        to_classical_index(ParahoricType(datum("D", 4), ()))
    for bad in [(), (1, 0), (0, 3), (-1,)]:
        with pytest.raises(ValueError):
            from_classical_index(d, bad)
    with pytest.raises(ValueError):
        levi_weyl_group((1,))
