import itertools

import pytest
from hypothesis import given, strategies as st

from johnsonlab.errors import Incompatible, InvalidGenerator
from johnsonlab.freegroup import IDENTITY, gen, invert, multiply, parse_word, power
from johnsonlab.groupring import (
    INTEGERS,
    CoefficientRing,
    GroupRingElement,
    PrimeField,
    augmentation,
    bar,
    eval_mod,
    fox_derivative,
    fox_expansion,
    higher_fox_derivative,
    product_rule_closed_form,
)

from strategies import words

E = GroupRingElement
x1, x2 = gen(1), gen(2)


def test_prime_field_validation():
    with pytest.raises(ValueError):
        CoefficientRing(2)
    with pytest.raises(ValueError):
        CoefficientRing(9)
    assert PrimeField(5).tag() == "F5"


def test_augmentation_examples():
    assert augmentation(E.of(parse_word("x1 X2 x3"))) == 1
    assert augmentation(E({x1: 2, x2: -3})) == -1
    assert augmentation(E.zero()) == 0


def test_bar_examples():
    e = E({x1: 1, x2: 2})
    assert bar(e) == E({invert(x1): 1, invert(x2): 2})
    assert bar(bar(e)) == e
    assert bar(E.one()) == E.one()


def test_zero_coefficients_are_dropped():
    assert E({x1: 3}, PrimeField(3)).terms == {}
    assert (E.of(x1) - E.of(x1)).terms == {}


def test_ring_mismatch():
    with pytest.raises(Incompatible):
        E.of(x1) + E.of(x1, ring=PrimeField(3))


def test_fox_examples():
    for i, j in itertools.product(range(1, 5), repeat=2):
        want = E.one() if i == j else E.zero()
        assert fox_derivative(gen(i), j) == want
    assert fox_derivative(parse_word("x1 x2"), 2) == E.of(x1)
    assert fox_derivative(parse_word("X1"), 1) == E({invert(x1): -1})


def test_fox_index_check():
    with pytest.raises(InvalidGenerator):
        fox_derivative(x1, 0)
    with pytest.raises(InvalidGenerator):
        fox_derivative(x1, 5, rank=4)


def test_higher_derivative_of_generator_vanishes():
    for m in itertools.product(range(1, 4), repeat=2):
        assert higher_fox_derivative(gen(m[0]), m) == E.zero()


def test_higher_derivative_order_convention():
    # (1, 2): d/dx1 gives 1 + x1 x2, then d/dx2 gives x1
    w = parse_word("x1 x2 x1")
    assert higher_fox_derivative(w, (1, 2)) == E.of(x1)
    # (2, 1): d/dx2 gives x1, then d/dx1 gives 1
    assert higher_fox_derivative(w, (2, 1)) == E.one()


def test_eval_mod_examples():
    p = 5
    assert eval_mod(E.one().scale(p), p) == 0
    assert eval_mod(fox_derivative(power(x1, p), 1), p) == 0
    assert augmentation(fox_derivative(power(x1, p), 1)) == p
    assert eval_mod(E.one(), p) == 1


@given(words(), words(), st.integers(1, 4))
def test_product_rule(u, v, j):
    lhs = fox_derivative(multiply(u, v), j)
    rhs = fox_derivative(u, j) + E.of(u) * fox_derivative(v, j)
    assert lhs == rhs


@given(words(), st.integers(1, 4))
def test_inverse_rule(u, j):
    assert fox_derivative(invert(u), j) == -(E.of(invert(u)) * fox_derivative(u, j))


@given(words())
def test_fundamental_formula(w):
    assert fox_expansion(w, 4) == E.of(w)


@given(words(max_len=6), words(max_len=6), st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_higher_product_rule(u, v, m):
    direct = higher_fox_derivative(multiply(u, v), m)
    assert product_rule_closed_form(u, v, m) == direct


@given(words(), words())
def test_bar_is_an_anti_automorphism(u, v):
    a, b = E.of(u), E.of(v)
    assert bar(a * b) == bar(b) * bar(a)


@given(words(), st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_mod_p_derivative_matches_integer(w, m):
    d = higher_fox_derivative(w, m)
    dp = higher_fox_derivative(E.of(w, ring=PrimeField(3)), m)
    assert d.reduce_mod(3) == dp


def test_json_roundtrip():
    e = E({parse_word("x1 X2"): -7, IDENTITY: 10**30}, INTEGERS)
    data = e.to_json()
    assert data["ring"] == "Z"
    assert {"word": "", "coeff": str(10**30)} in data["terms"]
    assert E.from_json(data) == e
