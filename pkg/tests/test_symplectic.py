import random

import numpy as np
import pytest

from johnsonlab.errors import NotLevelP, NotQHSAtP
from johnsonlab.symplectic import (
    as_int_matrix,
    gen_M,
    gen_N,
    heegaard_reduce,
    identity,
    inverse_mod,
    is_sp_lie,
    is_symplectic,
    left_kernel_mod,
    level,
    lift_generator_check,
    mod,
    omega,
    random_symplectic,
    rank_mod,
    solve_mod,
    sp_abel,
    symplectic_inverse,
    transvection,
)


def test_predicates():
    assert is_symplectic(identity(4))
    for p in (3, 5):
        for i in (1, 2):
            for j in (1, 2):
                assert is_symplectic(gen_M(i, j, p, 2))
                assert is_symplectic(gen_N(i, j, p, 2))
                assert level(gen_M(i, j, p, 2), p) == 1
    # Omega^T Omega + Omega Omega = Id - Id = 0, so Omega is in the Lie algebra
    assert is_sp_lie(omega(2))
    assert not is_sp_lie(identity(4), 3)
    assert not is_symplectic(as_int_matrix([[2, 0], [0, 1]]))


def test_gen_examples():
    assert np.array_equal(gen_M(1, 1, 3, 1), as_int_matrix([[1, 3], [0, 1]]))
    assert np.array_equal(gen_N(1, 1, 3, 1), as_int_matrix([[1, 0], [3, 1]]))
    M = gen_M(1, 2, 5, 2)
    assert M[0, 3] == 5 and M[1, 2] == 5 and M[0, 2] == 0
    with pytest.raises(ValueError):
        gen_M(3, 1, 3, 2)


def test_sp_abel_examples():
    assert not np.any(sp_abel(identity(4), 3))
    A = sp_abel(gen_M(1, 2, 3, 2), 3)
    E = np.zeros((4, 4), dtype=object)
    E[0, 3] = E[1, 2] = 1
    assert np.array_equal(A, E)
    with pytest.raises(NotLevelP):
        sp_abel(transvection([1, 0, 0, 0]), 3)


def _level_p_word(rng, g, p, length):
    M = identity(2 * g)
    for _ in range(length):
        i, j = rng.randint(1, g), rng.randint(1, g)
        sign = rng.choice((1, -1))
        M = M @ (gen_M(i, j, sign * p, g) if rng.random() < 0.5 else gen_N(i, j, sign * p, g))
    return M


def test_sp_abel_additive_and_kernel():
    rng = random.Random(2)
    for p in (3, 5):
        for _ in range(30):
            X, Y = _level_p_word(rng, 2, p, 3), _level_p_word(rng, 2, p, 3)
            assert np.array_equal(sp_abel(X @ Y, p), mod(sp_abel(X, p) + sp_abel(Y, p), p))
            A = sp_abel(X, p)
            assert is_sp_lie(A, p)
            assert (not np.any(A)) is (level(X, p) == 2)
        # a cancelling product lies in level p^2 and abelianizes to zero
        Z = gen_M(1, 2, p, 2) @ gen_N(1, 1, p, 2) @ gen_M(1, 2, -p, 2)
        assert level(Z, p) == 1
        assert level(Z @ gen_N(1, 1, -p, 2), p) == 2


def test_mod_p_linear_algebra():
    A = as_int_matrix([[1, 2], [3, 4]])
    assert rank_mod(A, 2) == 1 and rank_mod(A, 3) == 2
    assert np.array_equal(mod(A @ inverse_mod(A, 5), 5), identity(2))
    with pytest.raises(ZeroDivisionError):
        inverse_mod(as_int_matrix([[1, 2], [2, 4]]), 5)
    x = solve_mod(A, [1, 1], 5)
    assert np.array_equal(mod(A @ x, 5), np.array([1, 1], dtype=object))
    B = as_int_matrix([[1, 0], [2, 0], [0, 0]])
    assert solve_mod(B, [0, 0, 1], 3) is None
    K = left_kernel_mod(B, 3)
    assert len(K) == 2 and not np.any(mod(np.array(K, dtype=object) @ B, 3))


def test_symplectic_inverse():
    rng = random.Random(3)
    for _ in range(10):
        M = random_symplectic(3, rng)
        assert is_symplectic(M)
        assert np.array_equal(M @ symplectic_inverse(M), identity(6))


def test_heegaard_identity():
    r = heegaard_reduce(identity(4), 3)
    assert np.array_equal(r.X, identity(4))
    assert np.array_equal(r.Y, identity(4))
    assert np.array_equal(r.residual, identity(4))
    assert all(r.checks.values())


def test_heegaard_random_inputs():
    for g in (2, 3):
        for p in (3, 5):
            rng = random.Random(f"t:{g}:{p}")
            done = 0
            while done < 25:
                M = random_symplectic(g, rng, steps=rng.randint(2, 8))
                try:
                    r = heegaard_reduce(M, p)
                except NotQHSAtP:
                    continue
                done += 1
                assert all(r.checks.values()), r.checks
                assert np.array_equal(r.shear, r.shear.T)
                assert np.array_equal(mod(r.X @ M @ r.Y, p), identity(2 * g))


def test_heegaard_singular_block():
    for p in (3, 5):
        with pytest.raises(NotQHSAtP):
            heegaard_reduce(omega(2), p)


def test_literal_slide_factor_fails_lower_left_condition():
    # Using the bare slide [[Id, B'], [0, Id]] as X forces Y = (X M)^-1, whose
    # lower-left block is nonzero in general; the reduction avoids this.
    rng = random.Random(9)
    p, g = 3, 2
    seen_bad = False
    for _ in range(40):
        M = random_symplectic(g, rng, steps=6)
        try:
            r = heegaard_reduce(M, p)
        except NotQHSAtP:
            continue
        Y = symplectic_inverse(r.slide @ M)
        if np.any(mod(Y[g:, :g], p)):
            seen_bad = True
        assert not np.any(mod(r.Y[g:, :g], p))
    assert seen_bad


def test_lift_generator_checks():
    assert lift_generator_check(1, 2, 3, 2).ok
    assert lift_generator_check(1, 1, 3, 2).ok
    r = lift_generator_check(2, 1, 5, 3)
    assert r.M_match and r.N_match
    assert "Td12" in r.M_word and "Te12" in r.N_word
