"""Johnson homomorphisms, the cubic-wedge test, and the Fox-matrix (Perron) filtration."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import Incompatible, NotInFiltration
from .filtrations import SeriesKind, antisymmetric_part, l2s_image, membership, pair_index
from .freegroup import Series, Word, gen, invert as invert_word, multiply
from .groupring import INTEGERS, CoefficientRing, GroupRingElement, PrimeField, augmentation, bar, fox_derivative
from .magnus import _monomial, check_budget, magnus_embed
from .mapclass import FreeAutomorphism, apply, congruence_level
from .symplectic import as_int_matrix, mod, omega, rank_mod, left_kernel_mod, solve_mod, word_to_block


def displacement(f: FreeAutomorphism, x: Word) -> Word:
    """f(x) x^-1."""
    return multiply(apply(f, x), invert_word(x))


def filtration_member(f: FreeAutomorphism, series: SeriesKind, k: int) -> bool | None:
    """Whether f(x_i) x_i^-1 lies in depth k+1 for every generator; None if undecidable."""
    verdicts = [membership(series, displacement(f, gen(i)), k + 1, f.n) for i in range(1, f.n + 1)]
    if any(v is False for v in verdicts):
        return False
    if any(v is None for v in verdicts):
        return None
    return True


def _ring_for(series: SeriesKind) -> CoefficientRing:
    if series.kind is Series.LCS:
        return INTEGERS
    if series.kind is Series.ZASSENHAUS:
        return PrimeField(series.p)
    raise ValueError("tau is offered for the lower central and Zassenhaus series only")


@dataclass(frozen=True, eq=False)
class JohnsonValue:
    k: int
    ring: CoefficientRing
    n: int
    rows: tuple  # rows[i]: flat table of the degree-(k+1) part for x_{i+1}

    def is_zero(self) -> bool:
        return not any(np.any(r) for r in self.rows)

    def _check(self, other: "JohnsonValue") -> None:
        if (self.k, self.ring, self.n) != (other.k, other.ring, other.n):
            raise Incompatible("Johnson values differ in level, ring or rank")

    def __add__(self, other: "JohnsonValue") -> "JohnsonValue":
        self._check(other)
        rows = []
        for a, b in zip(self.rows, other.rows):
            s = a.astype(object) + b.astype(object)
            rows.append(s % self.ring.p if self.ring.p else s)
        return JohnsonValue(self.k, self.ring, self.n, tuple(rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, JohnsonValue):
            return NotImplemented
        return (self.k, self.ring, self.n) == (other.k, other.ring, other.n) and all(
            np.array_equal(a, b) for a, b in zip(self.rows, other.rows)
        )

    def to_json(self) -> dict:
        rows = []
        for r in self.rows:
            nz = np.nonzero(r)[0]
            rows.append([
                {"monomial": list(_monomial(int(i), self.k + 1, self.n)), "coeff": str(int(r[i]))} for i in nz
            ])
        return {"level": self.k, "ring": self.ring.tag(), "rows": rows}


def degree_part(u: Word, d: int, ring: CoefficientRing, n: int) -> np.ndarray:
    return magnus_embed(u, d, ring, n).tables[d]


def tau(f: FreeAutomorphism, k: int, series: SeriesKind) -> JohnsonValue:
    ring = _ring_for(series)
    if filtration_member(f, series, k) is not True:
        raise NotInFiltration(f"{f.label} is not in level {k} of the {series.kind.value} filtration")
    rows = tuple(degree_part(displacement(f, gen(i)), k + 1, ring, f.n) for i in range(1, f.n + 1))
    return JohnsonValue(k, ring, f.n, rows)


def tau_at(f: FreeAutomorphism, x: Word, k: int, series: SeriesKind) -> np.ndarray:
    """Degree-(k+1) part of Mag(f(x) x^-1) for an arbitrary word x."""
    return degree_part(displacement(f, x), k + 1, _ring_for(series), f.n)


# --- level-1 Stallings value ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class Tau1SValue:
    p: int
    g: int
    wedge_hom: tuple  # per generator x_i: wedge vector indexed by pair_index(2g)
    linear: tuple  # per generator x_i: linear part in the word basis
    sp_part: np.ndarray  # block basis, column j = image of the j-th block basis vector

    def is_zero(self) -> bool:
        return not any(any(w) for w in self.wedge_hom) and not np.any(self.sp_part)

    def to_json(self) -> dict:
        return {
            "level": 1,
            "ring": f"F{self.p}",
            "columns": [[str(x) for x in w] for w in self.wedge_hom],
            "sp_part": [[str(int(x)) for x in row] for row in self.sp_part],
        }


def tau1_s(f: FreeAutomorphism, p: int) -> Tau1SValue:
    if congruence_level(f, p) < 1:
        raise NotInFiltration(f"{f.label} does not act trivially on homology mod {p}")
    images = [l2s_image(displacement(f, gen(i)), p, f.n) for i in range(1, f.n + 1)]
    L = as_int_matrix(np.array([im.linear for im in images], dtype=object).T)
    sp = mod(word_to_block(L), p)
    return Tau1SValue(p, f.g, tuple(im.wedge for im in images), tuple(im.linear for im in images), sp)


# --- cubic wedge test --------------------------------------------------------------


def _block_position(n: int) -> list[int]:
    """Word index (0-based) -> block index (0-based)."""
    g = n // 2
    return [(k // 2) if k % 2 == 0 else g + k // 2 for k in range(n)]


def hom_tensor(v: JohnsonValue | Tau1SValue, p: int | None = None) -> np.ndarray:
    """phi[a, b, c] over F_p in the block basis: phi(e_a) = sum_{b,c} phi[a,b,c] e_b (x) e_c, antisymmetric in b, c."""
    if isinstance(v, Tau1SValue):
        p = v.p
        n = 2 * v.g
        wedges = v.wedge_hom
    else:
        if v.k != 1:
            raise ValueError("cubic wedge test applies to level-1 values")
        p = v.ring.p or p
        if p is None:
            raise ValueError("need p to reduce an integral value")
        n = v.n
        wedges = [antisymmetric_part(r, n, p) for r in v.rows]
    pos = _block_position(n)
    phi = np.zeros((n, n, n), dtype=object)
    pairs = pair_index(n)
    for k, w in enumerate(wedges):
        a = pos[k]
        for (i, j), c in zip(pairs, w):
            bi, bj = pos[i - 1], pos[j - 1]
            phi[a, bi, bj] += c
            phi[a, bj, bi] -= c
    return mod(phi, p), p


def triple_index(n: int) -> list[tuple[int, int, int]]:
    return list(itertools.combinations(range(n), 3))


def wedge3_inclusion(n: int) -> np.ndarray:
    """Matrix of x^y^z -> x(y^z) + y(z^x) + z(x^y) into H (x) wedge^2, pair coordinates b < c."""
    pairs = [(b, c) for b in range(n) for c in range(b + 1, n)]
    row = {(a, b, c): a * len(pairs) + k for a in range(n) for k, (b, c) in enumerate(pairs)}
    cols = triple_index(n)
    A = np.zeros((n * len(pairs), len(cols)), dtype=object)

    def put(col, a, b, c, sign):
        if b > c:
            b, c, sign = c, b, -sign
        A[row[(a, b, c)], col] += sign

    for t, (x, y, z) in enumerate(cols):
        put(t, x, y, z, 1)
        put(t, y, z, x, 1)
        put(t, z, x, y, 1)
    return A


def dual_tensor(phi: np.ndarray, p: int) -> np.ndarray:
    """sum_a h_a (x) phi(e_a) with h_a = Omega e_a, so that e_a^* = omega(h_a, .)."""
    n = phi.shape[0]
    om = omega(n // 2)
    return mod(np.tensordot(om, phi, axes=([1], [0])), p)


def block_label(k: int, g: int) -> str:
    return f"a{k + 1}" if k < g else f"b{k - g + 1}"


@dataclass
class Wedge3Coordinates:
    p: int
    g: int
    coordinates: tuple[int, ...]  # indexed by triple_index(2g)

    member = True

    def vector(self) -> np.ndarray:
        return np.array(self.coordinates, dtype=object)

    def to_json(self) -> dict:
        out = {}
        for (x, y, z), c in zip(triple_index(2 * self.g), self.coordinates):
            if c:
                out["^".join(block_label(t, self.g) for t in (x, y, z))] = str(c)
        return {"member": True, "coordinates": out}


@dataclass
class NotInSubspace:
    p: int
    witness: tuple[int, ...]  # a functional killing the image of wedge^3 but not the input

    member = False

    def to_json(self) -> dict:
        return {"member": False, "witness": [str(x) for x in self.witness]}


def tensor_vector(T: np.ndarray) -> np.ndarray:
    n = T.shape[0]
    return np.array([T[a, b, c] for a in range(n) for b in range(n) for c in range(b + 1, n)], dtype=object)


def wedge3_membership_tensor(T: np.ndarray, p: int) -> Wedge3Coordinates | NotInSubspace:
    n = T.shape[0]
    A = wedge3_inclusion(n)
    b = tensor_vector(T)
    x = solve_mod(A, b, p)
    if x is not None:
        return Wedge3Coordinates(p, n // 2, tuple(int(c) for c in x))
    K = left_kernel_mod(A, p)
    for y in K:
        if int(np.dot(y, b)) % p:
            return NotInSubspace(p, tuple(int(c) for c in y))
    raise AssertionError("inconsistent system without a separating functional")


def wedge3_membership(v: JohnsonValue | Tau1SValue, p: int | None = None) -> Wedge3Coordinates | NotInSubspace:
    phi, p = hom_tensor(v, p)
    return wedge3_membership_tensor(dual_tensor(phi, p), p)


def wedge3_rank(results: list[Wedge3Coordinates], p: int) -> int:
    rows = [r.coordinates for r in results if isinstance(r, Wedge3Coordinates)]
    if not rows:
        return 0
    return rank_mod(np.array(rows, dtype=object), p)


# --- Fox matrix and Perron filtration ----------------------------------------------


@dataclass(frozen=True, eq=False)
class FoxMatrix:
    n: int
    entries: tuple  # entries[i][j] = bar(d f(x_{j+1}) / d x_{i+1})

    def __matmul__(self, other: "FoxMatrix") -> "FoxMatrix":
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = GroupRingElement.zero(self.entries[0][0].ring)
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return FoxMatrix(n, tuple(rows))

    def act(self, f: FreeAutomorphism) -> "FoxMatrix":
        """Apply f to every group element appearing in the entries."""
        return FoxMatrix(self.n, tuple(tuple(e.map_words(lambda w: apply(f, w)) for e in row) for row in self.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, FoxMatrix) and self.entries == other.entries

    def augmented(self) -> np.ndarray:
        return as_int_matrix([[augmentation(e) for e in row] for row in self.entries])

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[e.to_json() for e in row] for row in self.entries]}


def fox_matrix(f: FreeAutomorphism) -> FoxMatrix:
    n = f.n
    entries = tuple(
        tuple(bar(fox_derivative(f.images[j], i + 1)) for j in range(n)) for i in range(n)
    )
    return FoxMatrix(n, entries)


def _entry_tables(e: GroupRingElement, D: int, p: int, n: int) -> list[np.ndarray]:
    ring = PrimeField(p)
    acc = [np.zeros(n**d, dtype=np.int64) for d in range(D + 1)]
    for w, c in e.terms.items():
        s = magnus_embed(w, D, ring, n)
        for d in range(D + 1):
            acc[d] = (acc[d] + c * s.tables[d]) % p
    return acc


def taylor_blocks(B: FoxMatrix, D: int, p: int) -> list[list[list[np.ndarray]]]:
    """blocks[l][i][j]: degree-l table of the mod-p expansion of entry (i, j), l = 0..D."""
    n = B.n
    if D == 0:
        return [[[np.array([augmentation(e) % p], dtype=np.int64) for e in row] for row in B.entries]]
    check_budget(n, D)
    tabs = [[_entry_tables(e, D, p, n) for e in row] for row in B.entries]
    return [[[tabs[i][j][l] for j in range(n)] for i in range(n)] for l in range(D + 1)]


def taylor_block(B: FoxMatrix, l: int, p: int) -> list[list[np.ndarray]]:
    return taylor_blocks(B, l, p)[l]


def perron_member(f: FreeAutomorphism, k: int, p: int) -> bool:
    """Constant block is Id mod p and blocks 1..k-1 vanish."""
    B = fox_matrix(f)
    blocks = taylor_blocks(B, k - 1, p)
    n = f.n
    for i in range(n):
        for j in range(n):
            if int(blocks[0][i][j][0]) % p != (1 if i == j else 0):
                return False
    return all(not np.any(blocks[l][i][j]) for l in range(1, k) for i in range(n) for j in range(n))


def johnson_range_holds(f: FreeAutomorphism, k: int, u: Word, l: int, p: int) -> bool:
    """f(u) u^-1 lies in Zassenhaus depth k + l (f in level k, u in depth l)."""
    from .filtrations import in_zassenhaus

    return in_zassenhaus(displacement(f, u), k + l, p, f.n)
