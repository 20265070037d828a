import random

import pytest
from hypothesis import given, settings, strategies as st

from johnsonlab.errors import NotInLevel2
from johnsonlab.filtrations import (
    SeriesKind,
    cofinality_check,
    in_lcs,
    in_stallings,
    in_zassenhaus,
    l2s_image,
    member_report,
    membership,
    pair_index,
)
from johnsonlab.freegroup import Series, commutator, gen, multiply, parse_word, power, random_word, sample_series

from oracles import naive_valuation

x1, x2, x3 = gen(1), gen(2), gen(3)


def e(n, *hot):
    return tuple(1 if k in hot else 0 for k in range(n))


def test_lcs_examples():
    assert in_lcs(commutator(x1, x2), 2, 2)
    for p in (3, 5):
        assert not in_lcs(power(x1, p), 2, 2)
    for w in sample_series(Series.LCS, 3, 20, 1, g=2):
        assert in_lcs(w, 3, 4)


def test_zassenhaus_examples():
    for p in (3, 5):
        assert in_zassenhaus(power(x1, p), p, p, 2)
        assert not in_zassenhaus(power(x1, p), p + 1, p, 2)
    for w in sample_series(Series.LCS, 3, 20, 2, g=2):
        assert in_zassenhaus(w, 3, 3, 4)
    for w in sample_series(Series.STALLINGS, 3, 20, 3, g=2, p=3):
        assert in_zassenhaus(w, 3, 3, 4)


def test_oracles_match_naive_valuation():
    rng = random.Random(5)
    for _ in range(150):
        w = random_word(rng, 3, rng.randint(0, 9))
        vz = naive_valuation(w, 4)
        v3 = naive_valuation(w, 4, p=3)
        for k in range(1, 5):
            assert in_lcs(w, k, 3) is (vz >= k)
            assert in_zassenhaus(w, k, 3, 3) is (v3 >= k)


def test_l2s_examples():
    pairs = pair_index(2)
    assert pairs == [(1, 2)]
    im = l2s_image(commutator(x1, x2), 3, 2)
    assert im.wedge == (1,) and im.linear == (0, 0)
    for p in (3, 5):
        im = l2s_image(power(x1, p), p, 2)
        assert im.wedge == (0,) and im.linear == (1, 0)
    for w in sample_series(Series.STALLINGS, 3, 40, 4, g=2, p=3):
        assert l2s_image(w, 3, 4).is_zero()


def test_l2s_requires_level2():
    with pytest.raises(NotInLevel2):
        l2s_image(x1, 3, 2)


def test_l2s_surjective_on_basis():
    n, p = 4, 5
    pairs = pair_index(n)
    for k, (i, j) in enumerate(pairs):
        im = l2s_image(commutator(gen(i), gen(j)), p, n)
        assert im.wedge == e(len(pairs), k) and not any(im.linear)
    for i in range(1, n + 1):
        im = l2s_image(power(gen(i), p), p, n)
        assert not any(im.wedge) and im.linear == e(n, i - 1)


level2 = st.lists(st.sampled_from(["c12", "c13", "c23", "p1", "p2", "p3", "c21"]), max_size=5)


def _build(tokens, p=3):
    out = []
    for t in tokens:
        if t[0] == "c":
            out.append(commutator(gen(int(t[1])), gen(int(t[2]))))
        else:
            out.append(power(gen(int(t[1])), p))
    return multiply(*out)


@given(level2, level2)
def test_l2s_additive(a, b):
    u, v = _build(a), _build(b)
    assert l2s_image(multiply(u, v), 3, 3) == l2s_image(u, 3, 3) + l2s_image(v, 3, 3)


def test_stallings_examples():
    for p in (3, 5):
        assert in_stallings(power(x1, p), 2, p, 2) is True
        assert in_stallings(power(x1, p), 3, p, 2) is False
    assert in_stallings(commutator(x1, commutator(x1, x2)), 3, 3, 2) is True
    assert in_stallings(parse_word("x1 x2"), 5, 3, 2) is None
    assert in_stallings(x1, 1, 3, 2) is True


@settings(max_examples=40)
@given(st.integers(0, 10_000))
def test_nesting(seed):
    rng = random.Random(seed)
    w = random_word(rng, 3, rng.randint(0, 8))
    for k in range(2, 5):
        if in_lcs(w, k, 3):
            assert in_lcs(w, k - 1, 3)
        if in_zassenhaus(w, k, 3, 3):
            assert in_zassenhaus(w, k - 1, 3, 3)
    for k in (2, 3):
        if in_stallings(w, k, 3, 3):
            assert in_stallings(w, k - 1, 3, 3)


def test_bracket_and_power_properties():
    p = 3
    for k, l in ((1, 1), (1, 2), (2, 2)):
        us = sample_series(Series.ZASSENHAUS, k, 8, 10 + k, g=1, p=p)
        vs = sample_series(Series.ZASSENHAUS, l, 8, 20 + l, g=1, p=p)
        for u, v in zip(us, vs):
            assert in_zassenhaus(commutator(u, v), k + l, p, 2)
    for u in sample_series(Series.ZASSENHAUS, 1, 10, 30, g=1, p=p):
        assert in_zassenhaus(power(u, p), p, p, 2)
    for u in sample_series(Series.STALLINGS, 2, 20, 40, g=2, p=p):
        assert in_stallings(power(u, p), 3, p, 4) is True


def test_cofinality_examples():
    assert cofinality_check("StoZ", 3, 3, 50, 1).ok
    assert cofinality_check("ZtoS", 2, 3, 20, 1).ok
    with pytest.raises(ValueError):
        cofinality_check("ZtoS", 5, 3, 20, 1)


def test_series_are_distinct():
    # x1^p separates the lower central series from both mod-p series
    p = 3
    u = power(x1, p)
    assert in_stallings(u, 2, p, 2) and not in_lcs(u, 2, 2)
    assert in_zassenhaus(u, 3, p, 2) and in_stallings(u, 3, p, 2) is False


def test_membership_dispatch_and_report():
    w = power(x1, 3)
    assert membership(SeriesKind(Series.LCS), w, 1) is True
    r = member_report(SeriesKind(Series.LCS), w, 4, 2)
    assert r.verdict is False and r.witness_monomial == (1,)
    r = member_report(SeriesKind(Series.ZASSENHAUS, 3), w, 4, 2)
    assert r.verdict is False and r.witness_monomial == (1, 1, 1)
    assert member_report(SeriesKind(Series.STALLINGS, 3), w, 5, 2).to_json()["verdict"] == "unknown"
    with pytest.raises(ValueError):
        SeriesKind(Series.ZASSENHAUS)
    with pytest.raises(ValueError):
        SeriesKind(Series.STALLINGS, 4)
