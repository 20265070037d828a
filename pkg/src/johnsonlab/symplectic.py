"""Symplectic matrices over Z and F_p in the block basis (a_1..a_g, b_1..b_g).

Matrices are numpy arrays of Python ints (object dtype) so products never
overflow. The word basis x1..x2g interleaves (a_i, b_i) = (x_{2i-1}, x_{2i});
`word_to_block` is the single conversion point.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotLevelP, NotQHSAtP


def as_int_matrix(rows) -> np.ndarray:
    a = np.array(rows, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return np.vectorize(int, otypes=[object])(a) if a.size else a


def identity(n: int) -> np.ndarray:
    return as_int_matrix(np.eye(n, dtype=np.int64))


def omega(g: int) -> np.ndarray:
    om = np.zeros((2 * g, 2 * g), dtype=np.int64)
    om[:g, g:] = np.eye(g, dtype=np.int64)
    om[g:, :g] = -np.eye(g, dtype=np.int64)
    return as_int_matrix(om)


def block_permutation(g: int) -> np.ndarray:
    """P with P @ (word-basis vector) = block-basis vector."""
    P = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        P[i, 2 * i] = 1
        P[g + i, 2 * i + 1] = 1
    return as_int_matrix(P)


def word_to_block(M_word: np.ndarray) -> np.ndarray:
    P = block_permutation(M_word.shape[0] // 2)
    return P @ M_word @ P.T


def vector_to_block(v) -> np.ndarray:
    v = np.array(v, dtype=object)
    return block_permutation(len(v) // 2) @ v


def mod(M: np.ndarray, p: int) -> np.ndarray:
    return np.vectorize(lambda x: int(x) % p, otypes=[object])(M)


def _genus(M: np.ndarray) -> int:
    n = M.shape[0]
    if M.shape != (n, n) or n % 2:
        raise ValueError(f"expected a square matrix of even size, got {M.shape}")
    return n // 2


def is_symplectic(M, p: int | None = None) -> bool:
    M = as_int_matrix(M)
    om = omega(_genus(M))
    lhs = M.T @ om @ M
    if p is None:
        return bool(np.all(lhs == om))
    return bool(np.all(mod(lhs - om, p) == 0))


def is_sp_lie(A, p: int | None = None) -> bool:
    A = as_int_matrix(A)
    om = omega(_genus(A))
    lhs = A.T @ om + om @ A
    if p is None:
        return bool(np.all(lhs == 0))
    return bool(np.all(mod(lhs, p) == 0))


def symplectic_inverse(M) -> np.ndarray:
    """Exact inverse of an integer symplectic matrix: -Omega M^T Omega."""
    M = as_int_matrix(M)
    om = omega(_genus(M))
    return -(om @ M.T @ om)


def transvection(y, k: int = 1) -> np.ndarray:
    """Block-basis matrix of x -> x + k * i(x, y) * y with i(x, y) = y^T Omega x."""
    y = np.array(y, dtype=object).reshape(-1, 1)
    om = omega(len(y) // 2)
    return identity(len(y)) + k * (y @ (y.T @ om))


def intersection(x, y) -> int:
    """i(x, y) = y^T Omega x in the block basis; i(b_1, a_1) = 1."""
    x = np.array(x, dtype=object)
    y = np.array(y, dtype=object)
    return int(y @ omega(len(x) // 2) @ x)


def _elementary(g: int, i: int, j: int) -> np.ndarray:
    if not (1 <= i <= g and 1 <= j <= g):
        raise ValueError(f"indices ({i}, {j}) outside 1..{g}")
    E = np.zeros((g, g), dtype=np.int64)
    E[i - 1, j - 1] = 1
    E[j - 1, i - 1] = 1
    return E


def gen_M(i: int, j: int, p: int, g: int) -> np.ndarray:
    """[[Id, pE_ij], [0, Id]]; E_ij is symmetric with a single 1 when i = j."""
    M = np.eye(2 * g, dtype=np.int64)
    M[:g, g:] = p * _elementary(g, i, j)
    return as_int_matrix(M)


def gen_N(i: int, j: int, p: int, g: int) -> np.ndarray:
    """[[Id, 0], [pE_ij, Id]]."""
    M = np.eye(2 * g, dtype=np.int64)
    M[g:, :g] = p * _elementary(g, i, j)
    return as_int_matrix(M)


def level(M, p: int) -> int:
    """0, 1 if M = Id mod p, 2 if M = Id mod p^2."""
    D = as_int_matrix(M) - identity(M.shape[0])
    if np.any(mod(D, p) != 0):
        return 0
    if np.any(mod(D, p * p) != 0):
        return 1
    return 2


def sp_abel(X, p: int) -> np.ndarray:
    """(X - Id) / p mod p for X = Id mod p."""
    X = as_int_matrix(X)
    D = X - identity(X.shape[0])
    if np.any(mod(D, p) != 0):
        raise NotLevelP(f"matrix is not congruent to the identity mod {p}")
    A = mod(np.vectorize(lambda x: int(x) // p, otypes=[object])(D), p)
    if not is_sp_lie(A, p):
        raise NotLevelP("abelianized matrix fails the sp identity; input was not symplectic")
    return A


# --- linear algebra over F_p --------------------------------------------------


def rref_mod(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    R = mod(as_int_matrix(A), p)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [k for k in range(r, rows) if R[k, c] % p]
        if not nz:
            continue
        k = nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = mod(R[r] * inv, p)
        for k in range(rows):
            if k != r and R[k, c] % p:
                R[k] = mod(R[k] - R[k, c] * R[r], p)
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(A, p: int) -> int:
    A = as_int_matrix(A)
    if A.size == 0:
        return 0
    return len(rref_mod(A, p)[1])


def inverse_mod(A, p: int) -> np.ndarray:
    A = as_int_matrix(A)
    n = A.shape[0]
    R, piv = rref_mod(np.hstack([A, identity(n)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError(f"matrix is singular mod {p}")
    return R[:, n:]


def solve_mod(A, b, p: int):
    """One solution of A x = b over F_p, or None."""
    A = as_int_matrix(A)
    b = np.array(b, dtype=object).reshape(-1, 1)
    cols = A.shape[1]
    R, piv = rref_mod(np.hstack([A, b]), p)
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=object)
    for r, c in enumerate(piv):
        x[c] = int(R[r, cols])
    return x


def left_kernel_mod(A, p: int) -> np.ndarray:
    """Rows y with y A = 0 over F_p, as a basis."""
    A = as_int_matrix(A)
    m = A.shape[0]
    R, piv = rref_mod(np.hstack([A, identity(m)]), p)
    k = A.shape[1]
    return np.array([R[r, k:] for r in range(len([c for c in piv if c < k]), m)], dtype=object).reshape(-1, m)


# --- Heegaard gluing map normalization ---------------------------------------


@dataclass
class HeegaardReduction:
    p: int
    slide: np.ndarray  # [[Id, B'], [0, Id]]
    shear: np.ndarray  # B'
    X: np.ndarray
    Y: np.ndarray
    residual: np.ndarray
    checks: dict = field(default_factory=dict)
    lagrangians: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        enc = lambda M: [[str(int(x)) for x in row] for row in M]
        return {
            "p": self.p,
            "B_prime": enc(self.shear),
            "slide": enc(self.slide),
            "X": enc(self.X),
            "Y": enc(self.Y),
            "residual": enc(self.residual),
            "checks": self.checks,
            "lagrangians": self.lagrangians,
        }


def heegaard_reduce(M, p: int) -> HeegaardReduction:
    """Split a gluing matrix into handlebody-extendable factors mod p.

    With M^-1 = [[E, F], [G, H]] mod p and B' = -F H^-1, the slide
    U = [[Id, B'], [0, Id]] makes X = U M^-1 block lower triangular mod p, and
    Y = (X M)^-1 = U^-1 is block upper triangular, so X M Y = Id.
    """
    M = as_int_matrix(M)
    g = _genus(M)
    if not is_symplectic(M):
        raise ValueError("gluing matrix must be symplectic over Z")
    Minv = symplectic_inverse(M)
    Mp = mod(Minv, p)
    F, H = Mp[:g, g:], Mp[g:, g:]
    try:
        Hinv = inverse_mod(H, p)
    except ZeroDivisionError:
        raise NotQHSAtP(f"H block of the inverse gluing matrix is singular mod {p}") from None
    B = mod(-(F @ Hinv), p)
    U = identity(2 * g)
    U[:g, g:] = B
    X = U @ Minv
    Y = symplectic_inverse(U)
    residual = X @ M @ Y
    checks = {
        "B_prime_symmetric": bool(np.all(B == B.T)),
        "X_symplectic": is_symplectic(X),
        "Y_symplectic": is_symplectic(Y),
        "residual_is_identity_mod_p": bool(np.all(mod(residual - identity(2 * g), p) == 0)),
        "X_upper_right_zero_mod_p": bool(np.all(mod(X[:g, g:], p) == 0)),
        "Y_lower_left_zero_mod_p": bool(np.all(mod(Y[g:, :g], p) == 0)),
    }
    lagrangians = {
        "X": "preserves span(b_1..b_g) mod p",
        "Y": "preserves span(a_1..a_g)",
    }
    return HeegaardReduction(p, U, B, X, Y, residual, checks, lagrangians)


def random_symplectic(g: int, rng, steps: int = 8, p: int | None = None) -> np.ndarray:
    """Product of random elementary symplectic factors (transvections and block moves)."""
    M = identity(2 * g)
    for _ in range(steps):
        kind = rng.randrange(4)
        if kind == 0:
            y = [rng.randint(-1, 1) for _ in range(2 * g)]
            T = transvection(y, rng.choice((1, -1)))
        elif kind == 1:
            i, j = rng.randint(1, g), rng.randint(1, g)
            T = gen_M(i, j, rng.choice((1, -1)) * (p or 1), g)
        elif kind == 2:
            i, j = rng.randint(1, g), rng.randint(1, g)
            T = gen_N(i, j, rng.choice((1, -1)) * (p or 1), g)
        else:
            # [[A, 0], [0, A^-T]] with A elementary unimodular
            A = np.eye(g, dtype=np.int64)
            i, j = rng.sample(range(g), 2) if g > 1 else (0, 0)
            if i != j:
                A[i, j] = rng.choice((1, -1))
            A = as_int_matrix(A)
            Ainv_T = as_int_matrix(np.eye(g, dtype=np.int64))
            if i != j:
                Ainv_T[j, i] = -A[i, j]
            T = identity(2 * g)
            T[:g, :g] = A
            T[g:, g:] = Ainv_T
        M = M @ T
    return M


@dataclass
class LiftReport:
    i: int
    j: int
    p: int
    g: int
    M_word: str
    N_word: str
    M_match: bool
    N_match: bool
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.M_match and self.N_match

    def to_json(self) -> dict:
        return {
            "i": self.i, "j": self.j, "p": self.p, "g": self.g,
            "M_word": self.M_word, "N_word": self.N_word,
            "M_match": self.M_match, "N_match": self.N_match,
            "mismatches": self.mismatches,
        }


def lift_generator_check(i: int, j: int, p: int, g: int) -> LiftReport:
    """Compare Psi of explicit twist-power products with gen_M / gen_N."""
    from .mapclass import catalog, evaluate, symplectic_rep

    cat = catalog(g)
    if i == j:
        m_expr = f"Ta{i}^{p}"
        n_expr = f"Tb{i}^{-p}"
    else:
        lo, hi = min(i, j), max(i, j)
        m_expr = f"Ta{j}^{-p} * Td{lo}{hi}^{p} * Ta{i}^{-p}"
        # the e-curve of (lo, hi) has class b_lo - b_hi
        n_expr = f"Tb{j}^{-p} * Te{lo}{hi}^{p} * Tb{i}^{-p}"
    want_M, want_N = gen_M(i, j, p, g), gen_N(i, j, p, g)
    got_M = symplectic_rep(evaluate(m_expr, cat))
    got_N = symplectic_rep(evaluate(n_expr, cat))
    mism = []
    if not np.array_equal(got_M, want_M):
        mism.append({"which": "M", "got": [[str(x) for x in r] for r in got_M]})
    if not np.array_equal(got_N, want_N):
        mism.append({"which": "N", "got": [[str(x) for x in r] for r in got_N]})
    return LiftReport(i, j, p, g, m_expr, n_expr, not any(m["which"] == "M" for m in mism),
                      not any(m["which"] == "N" for m in mism), mism)
