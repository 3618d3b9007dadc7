"""Term order axioms and agreement with a brute-force grevlex comparator."""

import random

import pytest

from detpres.orders import (
    EQ,
    GT,
    LT,
    BlockElimination,
    Grevlex,
    Lex,
    WeightOrder,
    is_elimination_order,
)

NVARS = 4

ORDERS = [
    Lex(),
    Grevlex(),
    BlockElimination(2),
    WeightOrder((3, 1, 4, 1), Grevlex()),
]


def brute_grevlex(u, v):
    """Textbook comparator: total degree, then rightmost nonzero of u - v negative."""
    du, dv = sum(u), sum(v)
    if du != dv:
        return GT if du > dv else LT
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return GT if a < b else LT
    return EQ


def random_exponents(rng):
    return tuple(rng.randint(0, 6) for _ in range(NVARS))


def test_lex_prefers_earlier_variables():
    assert Lex().compare((1, 0, 0), (0, 5, 0)) == GT


def test_grevlex_spec_example():
    assert Grevlex().compare((0, 2, 0), (1, 0, 1)) == GT


def test_compare_rejects_length_mismatch():
    with pytest.raises(ValueError):
        Grevlex().compare((1, 0), (1, 0, 0))


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: type(o).__name__)
def test_reflexivity(order):
    rng = random.Random(7)
    for _ in range(100):
        u = random_exponents(rng)
        assert order.compare(u, u) == EQ


def test_grevlex_matches_brute_force():
    rng = random.Random(11)
    order = Grevlex()
    for _ in range(2000):
        u, v = random_exponents(rng), random_exponents(rng)
        assert order.compare(u, v) == brute_grevlex(u, v)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: type(o).__name__)
def test_order_axioms_on_random_triples(order):
    """Totality, antisymmetry, multiplicativity, and minimality of 1."""
    rng = random.Random(13)
    zero = (0,) * NVARS
    for _ in range(1000):
        u, v, w = (random_exponents(rng) for _ in range(3))
        cuv = order.compare(u, v)
        assert cuv in (LT, EQ, GT)
        assert cuv == -order.compare(v, u)
        assert (cuv == EQ) == (u == v)
        shifted = order.compare(
            tuple(a + c for a, c in zip(u, w)), tuple(b + c for b, c in zip(v, w))
        )
        assert shifted == cuv
        assert order.compare(zero, u) in (LT, EQ)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: type(o).__name__)
def test_transitivity_on_random_triples(order):
    rng = random.Random(17)
    for _ in range(1000):
        a, b, c = sorted(
            (random_exponents(rng) for _ in range(3)), key=order.key
        )
        assert order.compare(a, c) in (LT, EQ)
        assert order.compare(a, b) in (LT, EQ)
        assert order.compare(b, c) in (LT, EQ)


def test_block_order_eliminates_first_block():
    order = BlockElimination(2)
    # Any monomial touching the first block beats any monomial outside it.
    assert order.compare((1, 0, 0, 0), (0, 0, 9, 9)) == GT
    assert order.compare((0, 1, 0, 0), (0, 0, 1, 0)) == GT


def test_weight_order_rejects_negative_weights():
    with pytest.raises(ValueError):
        WeightOrder((1, -1, 0, 0), Grevlex())


def test_elimination_order_recognition():
    assert is_elimination_order(Lex(), 3)
    assert is_elimination_order(BlockElimination(2), 2)
    assert not is_elimination_order(BlockElimination(2), 3)
    assert not is_elimination_order(Grevlex(), 1)
