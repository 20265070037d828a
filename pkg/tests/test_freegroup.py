import pytest
from hypothesis import given

from johnsonlab.errors import InvalidGenerator, ParseError
from johnsonlab.filtrations import in_lcs, in_stallings
from johnsonlab.freegroup import (
    IDENTITY,
    Rank,
    Series,
    Word,
    boundary_word,
    commutator,
    exponent_vector,
    format_word,
    gen,
    invert,
    multiply,
    parse_word,
    power,
    reduce,
    sample_series,
)

from strategies import letters, words

x1, x2, x3, x4 = (gen(i) for i in range(1, 5))


def test_reduce_examples():
    assert reduce([1, -1]) == IDENTITY
    assert reduce([1, 2, -2, 1]) == Word((1, 1))
    w = reduce([1, 2, -1])
    assert reduce(w) == w


def test_reduce_rejects_bad_index():
    with pytest.raises(InvalidGenerator):
        reduce([5], rank=4)
    with pytest.raises(InvalidGenerator):
        reduce([0])


def test_word_must_be_reduced():
    with pytest.raises(ValueError):
        Word((1, -1))


def test_group_basics():
    u = parse_word("x1 x2 X3")
    assert multiply(u, invert(u)) == IDENTITY
    assert power(x1, 3) == Word((1, 1, 1))
    assert power(u, 0) == IDENTITY
    assert power(u, -2) == invert(power(u, 2))


def test_power_of_conjugate_has_no_cancellation_issue():
    u = parse_word("x2 x1 X2")
    assert power(u, 3) == parse_word("x2 x1 x1 x1 X2")


def test_commutator_examples():
    assert commutator(x1, x1) == IDENTITY
    assert commutator(x1, x2) == parse_word("x1 x2 X1 X2")
    assert commutator(parse_word("x1 x3"), IDENTITY) == IDENTITY


def test_exponent_vector_examples():
    assert exponent_vector(parse_word("x1 x2 X1"), 4) == [0, 1, 0, 0]
    assert exponent_vector(commutator(parse_word("x1 x3"), x2), 4) == [0, 0, 0, 0]
    assert exponent_vector(power(x1, 5), 4) == [5, 0, 0, 0]


def test_boundary_word():
    assert boundary_word(1) == parse_word("x1 x2 X1 X2")
    assert boundary_word(Rank(2)) == multiply(commutator(x1, x2), commutator(x3, x4))
    assert exponent_vector(boundary_word(3), 6) == [0] * 6


def test_parse_and_format():
    assert parse_word("x1 X2 x3^-1") == Word((1, -2, -3))
    assert parse_word("") == IDENTITY
    assert format_word(parse_word("X1 x2")) == "X1 x2"
    with pytest.raises(ParseError):
        parse_word("y1")
    with pytest.raises(ParseError):
        parse_word("x0")


@given(letters(), letters())
def test_reduce_is_a_homomorphism_on_sequences(a, b):
    assert multiply(reduce(a), reduce(b)) == reduce(a + b)
    assert reduce(reduce(a)) == reduce(a)


@given(words(), words())
def test_exponent_vector_is_additive(u, v):
    eu, ev = exponent_vector(u, 4), exponent_vector(v, 4)
    assert exponent_vector(multiply(u, v), 4) == [a + b for a, b in zip(eu, ev)]


@given(words(), words(), words())
def test_multiply_is_associative(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


@given(words(max_len=6))
def test_power_matches_repeated_product(u):
    assert power(u, 4) == multiply(u, u, u, u)


def test_sampler_is_deterministic():
    a = sample_series(Series.ZASSENHAUS, 4, 10, seed=3)
    b = sample_series(Series.ZASSENHAUS, 4, 10, seed=3)
    assert a == b
    assert a != sample_series(Series.ZASSENHAUS, 4, 10, seed=4)


def test_lcs_depth1_samples_are_nonempty():
    assert all(len(w) > 0 for w in sample_series(Series.LCS, 1, 50, seed=1))


@pytest.mark.parametrize("p", [3, 5])
def test_stallings_level2_samples(p):
    for w in sample_series(Series.STALLINGS, 2, 50, seed=2, p=p):
        assert all(e % p == 0 for e in exponent_vector(w, 4))
        assert in_stallings(w, 2, p, 4)


def test_lcs_samples_pass_oracle():
    for k in (2, 3, 4):
        assert all(in_lcs(w, k, 4) for w in sample_series(Series.LCS, k, 40, seed=k))
