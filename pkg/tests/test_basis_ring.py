import itertools
import random

import pytest

from weyltoric.basis_ring import (
    BasisCombination, SizeCapExceeded, check_size_cap, duality_check,
    elimination_order, expand_product, multiply, pairing_matrix, structure_constants,
)
from weyltoric.fan_oracle import oracle_integral
from weyltoric.intersect import class_X, class_Y, triple_number
from weyltoric.weyl import (
    RootSystemId, compose, descent_count, enumerate_weyl, identity, length,
    parse_element,
)

from systems import SMALL_SYSTEMS

A3 = RootSystemId("A", 3)
G2 = RootSystemId("G2")


def simple_reflection(system, i):
    line = list(range(1, system.rank + 2))
    line[i - 1], line[i] = line[i], line[i - 1]
    return parse_element(system, ",".join(map(str, line)))


def test_basis_combination():
    e = identity(A3)
    c = BasisCombination({e: 0, parse_element(A3, "2134"): -2})
    assert list(c) == [parse_element(A3, "2134")]
    c.add(parse_element(A3, "2134"), 2)
    assert not c and str(c) == "0"
    c = BasisCombination({parse_element(A3, "3214"): 3, parse_element(A3, "2134"): -1})
    assert str(c) == "-[X_2134] + 3*[X_3214]"
    assert c.to_json() == [{"w": "2134", "c": -1}, {"w": "3214", "c": 3}]


@pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
def test_pairing_invariants_on_full_matrix(system):
    P = pairing_matrix(system)
    e = identity(system)
    for u, v in itertools.product(enumerate_weyl(system), repeat=2):
        full = triple_number(v, e, u)
        assert P[(u, v)] == full
        if u == v:
            assert full == 1
        if descent_count(u) != descent_count(v) or length(u) < length(v):
            assert full == 0


@pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
def test_pairing_matches_oracle(system):
    P = pairing_matrix(system)
    for u, v in itertools.product(enumerate_weyl(system), repeat=2):
        if descent_count(u) == descent_count(v):
            assert P[(u, v)] == oracle_integral(class_Y(u) * class_X(v))


def test_pairing_a1_is_identity():
    A1 = RootSystemId("A", 1)
    P = pairing_matrix(A1)
    W = enumerate_weyl(A1)
    assert [[P[(u, v)] for v in W] for u in W] == [[1, 0], [0, 1]]


def test_pairing_g2_blocks():
    P = pairing_matrix(G2)
    W = enumerate_weyl(G2)
    assert len(W) == 12
    sizes = {d: sum(1 for u in W if descent_count(u) == d) for d in range(3)}
    assert sizes == {0: 1, 1: 10, 2: 1}
    for (u, v) in P.entries:
        assert descent_count(u) == descent_count(v)


def test_elimination_order_refines_length():
    order = elimination_order(enumerate_weyl(A3))
    assert [length(u) for u in order] == sorted(length(u) for u in order)
    assert order[0] == identity(A3)


def test_worked_example():
    u = parse_element(A3, "2134")
    expected = {"2431": 1, "4213": -1, "3421": -1, "3241": -1, "3214": -1}
    assert structure_constants(u, u) == {parse_element(A3, k): c for k, c in expected.items()}


@pytest.mark.parametrize("n", range(2, 6))
def test_simple_reflection_products(n):
    system = RootSystemId("A", n)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        si, sj = simple_reflection(system, i), simple_reflection(system, j)
        if abs(i - j) >= 2:
            assert structure_constants(si, sj) == {compose(si, sj): 1}
        elif abs(i - j) == 1:
            assert structure_constants(si, sj) == {}


@pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
def test_identity_is_unit(system):
    e = identity(system)
    for u in enumerate_weyl(system):
        assert structure_constants(u, e) == {u: 1}
        assert structure_constants(e, u) == {u: 1}


@pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
def test_commutative_graded_triangular(system):
    W = enumerate_weyl(system)
    for u, v in itertools.product(W, repeat=2):
        c = structure_constants(u, v)
        assert c == structure_constants(v, u)
        for w, coef in c.items():
            assert isinstance(coef, int)
            assert descent_count(w) == descent_count(u) + descent_count(v)
            assert length(w) >= max(length(u), length(v))


@pytest.mark.parametrize("system", [A3, RootSystemId("B", 2), G2], ids=str)
def test_structure_constants_reproduce_oracle_triples(system):
    # <[Y^w][X_u][X_v]> computed by localization equals sum_w' <[Y^w][X_w']> c^{w'}
    W = enumerate_weyl(system)
    for u, v in itertools.product(W, repeat=2):
        c = structure_constants(u, v)
        for w in W:
            if descent_count(u) + descent_count(v) != descent_count(w):
                continue
            lhs = oracle_integral(class_Y(w) * class_X(u) * class_X(v))
            rhs = sum(coef * oracle_integral(class_Y(w) * class_X(x)) for x, coef in c.items())
            assert lhs == rhs


def test_expand_product_examples():
    A5 = RootSystemId("A", 5)
    assert expand_product([], system=A5) == {identity(A5): 1}
    u = parse_element(A5, "216435")
    assert expand_product([u]) == {u: 1}
    s1, s3, s5 = (simple_reflection(A5, i) for i in (1, 3, 5))
    assert expand_product([s1, s3, s5]) == {parse_element(A5, "214365"): 1}
    with pytest.raises(ValueError):
        expand_product([])


@pytest.mark.parametrize("system", [A3, RootSystemId("B", 2), RootSystemId("D", 3), G2], ids=str)
def test_associativity(system):
    rng = random.Random(11)
    W = enumerate_weyl(system)
    for _ in range(40):
        a, b, c = (rng.choice(W) for _ in range(3))
        left = expand_product([a, b, c])
        right = multiply(BasisCombination({a: 1}), structure_constants(b, c))
        assert left == right


def test_duality_check():
    for system in [G2] + [RootSystemId("A", n) for n in (1, 2, 3)]:
        W = enumerate_weyl(system)
        assert all(duality_check(u, v) for u, v in itertools.product(W, repeat=2))


def test_size_cap():
    A6 = RootSystemId("A", 6)
    check_size_cap(A6)
    with pytest.raises(SizeCapExceeded):
        check_size_cap(RootSystemId("A", 8))
    with pytest.raises(SizeCapExceeded):
        pairing_matrix(A3, size_cap=10)


def test_size_cap_environment(monkeypatch):
    monkeypatch.setenv("WEYLTORIC_SIZE_CAP", "5")
    with pytest.raises(SizeCapExceeded):
        check_size_cap(A3)
