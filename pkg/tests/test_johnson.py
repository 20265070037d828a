import itertools
import random

import numpy as np
import pytest

from johnsonlab.errors import NotInFiltration
from johnsonlab.filtrations import SeriesKind, l2s_image
from johnsonlab.freegroup import Series, gen, invert, multiply, sample_series
from johnsonlab.groupring import augmentation, higher_fox_derivative
from johnsonlab.johnson import (
    NotInSubspace,
    Wedge3Coordinates,
    dual_tensor,
    displacement,
    filtration_member,
    fox_matrix,
    hom_tensor,
    perron_member,
    tau,
    tau1_s,
    tau_at,
    taylor_block,
    wedge3_inclusion,
    wedge3_membership,
    wedge3_membership_tensor,
)
from johnsonlab.magnus import _monomial
from johnsonlab.mapclass import catalog, compose, identity, power, symplectic_rep
from johnsonlab.symplectic import intersection, mod, rank_mod, sp_abel, vector_to_block

CAT2, CAT3 = catalog(2), catalog(3)
LCS = SeriesKind(Series.LCS)
Z3 = SeriesKind(Series.ZASSENHAUS, 3)
Z5 = SeriesKind(Series.ZASSENHAUS, 5)
S3 = SeriesKind(Series.STALLINGS, 3)


def auto(name, cat=CAT3):
    return cat[name].automorphism


def test_filtration_member_examples():
    for series in (LCS, Z3, S3):
        for k in (1, 2, 3):
            assert filtration_member(identity(2), series, k) is True
    for p, zk in ((3, Z3), (5, Z5)):
        assert filtration_member(power(auto("Ta1"), p), zk, 1) is True
    assert filtration_member(auto("sep1"), LCS, 2) is True
    assert filtration_member(auto("Ta1"), LCS, 1) is False
    assert filtration_member(auto("sep1"), S3, 3) is None


def test_tau_examples():
    assert tau(identity(2), 2, LCS).is_zero()
    for p, zk in ((3, Z3), (5, Z5)):
        for name in ("Ta1", "Tb2", "Tc1", "Td12", "Te13"):
            assert tau(power(auto(name), p), 1, zk).is_zero()
    with pytest.raises(NotInFiltration):
        tau(auto("Ta1"), 1, LCS)
    with pytest.raises(ValueError):
        tau(identity(2), 1, S3)


def test_tau_z_is_tau_mod_p():
    for name in ("sep1", "sep2", "bp1", "bp6", "bp13"):
        f = auto(name)
        integral = tau(f, 1, LCS)
        for p, zk in ((3, Z3), (5, Z5)):
            reduced = tuple(r.astype(object) % p for r in integral.rows)
            assert all(np.array_equal(a, b) for a, b in zip(reduced, tau(f, 1, zk).rows))


def test_tau_rows_match_fox_derivatives():
    # independent oracle: degree-2 coefficients as augmented second Fox derivatives
    f = auto("bp3")
    v = tau(f, 1, LCS)
    n = f.n
    for i in range(n):
        d = displacement(f, gen(i + 1))
        for idx in range(n * n):
            m = _monomial(idx, 2, n)
            assert v.rows[i][idx] == augmentation(higher_fox_derivative(d, tuple(reversed(m))))


def test_tau_well_defined_on_homology():
    f = auto("bp2")
    rng = random.Random(1)
    for series, samples in ((LCS, sample_series(Series.LCS, 2, 6, 1, g=3)),
                            (Z3, sample_series(Series.ZASSENHAUS, 2, 6, 2, g=3, p=3))):
        for i in range(1, 7):
            base = tau_at(f, gen(i), 1, series)
            for c in samples:
                assert np.array_equal(tau_at(f, multiply(gen(i), c), 1, series), base)


def test_tau_homomorphy_examples():
    f, g = auto("bp1"), auto("sep2")
    assert tau(compose(f, g), 1, LCS) == tau(f, 1, LCS) + tau(g, 1, LCS)


def test_frozen_bounding_pair_coordinates():
    r = wedge3_membership(tau(auto("bp1"), 1, Z3))
    assert isinstance(r, Wedge3Coordinates)
    assert r.to_json()["coordinates"] == {"a1^b1^b2": "2", "a2^b1^b2": "2"}
    r = wedge3_membership(tau(auto("bp1"), 1, LCS), 5)
    assert r.to_json()["coordinates"] == {"a1^b1^b2": "4", "a2^b1^b2": "4"}


def test_wedge3_membership_zero_and_non_image():
    assert wedge3_membership(tau(identity(3), 1, Z3)).coordinates == (0,) * 20
    n, p = 6, 3
    A = wedge3_inclusion(n)
    assert A.shape == (6 * 15, 20)
    assert rank_mod(A, p) == 20
    T = np.zeros((n, n, n), dtype=object)
    T[0, 1, 2], T[0, 2, 1] = 1, -1  # a single term e_a1 (x) (e_a2 ^ e_a3)
    r = wedge3_membership_tensor(mod(T, p), p)
    assert isinstance(r, NotInSubspace)
    b = np.array([T[a, b, c] for a in range(n) for b in range(n) for c in range(b + 1, n)], dtype=object)
    assert int(np.dot(np.array(r.witness, dtype=object), b)) % p != 0
    assert not np.any(mod(np.array(r.witness, dtype=object).dot(A), p))


def test_dual_tensor_uses_symplectic_pairing():
    phi, p = hom_tensor(tau(auto("bp1"), 1, Z3))
    assert phi.shape == (6, 6, 6)
    assert np.array_equal(mod(phi + np.transpose(phi, (0, 2, 1)), p), np.zeros((6, 6, 6), dtype=object))
    assert dual_tensor(phi, p).shape == (6, 6, 6)


def test_tau1_s_examples():
    for p in (3, 5):
        assert tau1_s(auto("sep1"), p).is_zero()
        assert tau1_s(power(auto("Tc2"), p * p), p).is_zero()
        for name in ("Ta1", "Tb3", "Td23", "Te12"):
            f = power(auto(name), p)
            v = tau1_s(f, p)
            assert not any(any(w) for w in v.wedge_hom)
            assert np.array_equal(v.sp_part, sp_abel(symplectic_rep(f), p))
    with pytest.raises(NotInFiltration):
        tau1_s(auto("Ta1"), 3)


def test_twist_contributions_linear_part():
    p = 3
    for name in ("Ta2", "Tc1", "Te23"):
        e = CAT3[name]
        y = e.homology()
        f = power(e.automorphism, p)
        for i in range(1, 7):
            x = vector_to_block([1 if k == i - 1 else 0 for k in range(6)])
            im = l2s_image(displacement(f, gen(i)), p, 6)
            expected = mod(intersection(x, y) * y, p)
            assert np.array_equal(vector_to_block(im.linear), expected)


def test_fox_matrix_identity_and_chain_rule():
    B = fox_matrix(identity(2))
    assert np.array_equal(B.augmented(), np.eye(4, dtype=object))
    for l in (1, 2):
        assert not any(np.any(t) for row in taylor_block(B, l, 3) for t in row)
    rng = random.Random(4)
    names = list(CAT2)
    for _ in range(10):
        f, g = auto(rng.choice(names), CAT2), auto(rng.choice(names), CAT2)
        # g applied first, then f, is the function f o g
        assert fox_matrix(compose(g, f)) == fox_matrix(f) @ fox_matrix(g).act(f)


def test_perron_examples():
    for k in (1, 2, 3):
        assert perron_member(identity(2), k, 3)
    for p in (3, 5):
        assert perron_member(power(auto("Ta1", CAT2), p), 2, p)
    assert not perron_member(auto("Ta1", CAT2), 1, 3)


def test_perron_agrees_with_zassenhaus_genus2():
    mixed = set()
    for p, zk in ((3, Z3),):
        for name, e in CAT2.items():
            for f in (e.automorphism, power(e.automorphism, p)):
                for k in (1, 2, 3):
                    verdict = perron_member(f, k, p)
                    assert verdict is filtration_member(f, zk, k)
                    mixed.add(verdict)
    assert mixed == {True, False}
