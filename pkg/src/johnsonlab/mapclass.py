"""Mapping classes as free-group automorphisms fixing the boundary word."""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass

import numpy as np

from .errors import Incompatible, InvariantViolation, ParseError
from .freegroup import (
    Word,
    boundary_word,
    conjugate,
    exponent_vector,
    format_word,
    gen,
    invert as invert_word,
    multiply,
    parse_word,
    reduce,
)
from .symplectic import (
    as_int_matrix,
    identity as identity_matrix,
    is_symplectic,
    level,
    transvection,
    vector_to_block,
    word_to_block,
)
from .twistdata import CURVE_TWISTS


@dataclass(frozen=True)
class FreeAutomorphism:
    g: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...]
    label: str = "f"

    def __post_init__(self):
        n = 2 * self.g
        if len(self.images) != n or len(self.inverse_images) != n:
            raise ValueError(f"need {n} images and {n} inverse images")

    @property
    def n(self) -> int:
        return 2 * self.g

    def __call__(self, u: Word) -> Word:
        return apply(self, u)

    def to_json(self) -> dict:
        return {
            "rank": self.n,
            "images": [format_word(w) for w in self.images],
            "inverse_images": [format_word(w) for w in self.inverse_images],
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FreeAutomorphism":
        n = int(data["rank"])
        if n % 2:
            raise ParseError("rank must be even")
        images = tuple(parse_word(w, n) for w in data["images"])
        inv = tuple(parse_word(w, n) for w in data["inverse_images"])
        return cls(n // 2, images, inv, data.get("label", "json"))


def _substitute(images: tuple[Word, ...], u: Word) -> Word:
    inv_cache: dict[int, Word] = {}
    parts = []
    for l in u.letters:
        if l > 0:
            parts.append(images[l - 1])
        else:
            w = inv_cache.get(l)
            if w is None:
                w = inv_cache[l] = invert_word(images[-l - 1])
            parts.append(w)
    return multiply(*parts)


def apply(f: FreeAutomorphism, u: Word) -> Word:
    if u.max_index() > f.n:
        raise Incompatible(f"word uses generator {u.max_index()} beyond rank {f.n}")
    return _substitute(f.images, u)


def identity(g: int) -> FreeAutomorphism:
    gens = tuple(gen(i) for i in range(1, 2 * g + 1))
    return FreeAutomorphism(g, gens, gens, "id")


def compose(f: FreeAutomorphism, g: FreeAutomorphism) -> FreeAutomorphism:
    """Apply f first, then g: the result sends x to g(f(x))."""
    if f.g != g.g:
        raise Incompatible(f"rank mismatch: genus {f.g} vs {g.g}")
    images = tuple(_substitute(g.images, w) for w in f.images)
    inv = tuple(_substitute(f.inverse_images, w) for w in g.inverse_images)
    return FreeAutomorphism(f.g, images, inv, f"{g.label}∘{f.label}")


def invert(f: FreeAutomorphism) -> FreeAutomorphism:
    return FreeAutomorphism(f.g, f.inverse_images, f.images, f"({f.label})^-1")


def power(f: FreeAutomorphism, n: int) -> FreeAutomorphism:
    label = f"({f.label})^{n}"
    if n < 0:
        f, n = invert(f), -n
    result = identity(f.g)
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return FreeAutomorphism(result.g, result.images, result.inverse_images, label)


def conjugate_by(f: FreeAutomorphism, h: FreeAutomorphism) -> FreeAutomorphism:
    """h f h^-1 as functions: apply h^-1, then f, then h."""
    c = compose(compose(invert(h), f), h)
    return FreeAutomorphism(c.g, c.images, c.inverse_images, f"{h.label}·{f.label}·{h.label}^-1")


def is_identity(f: FreeAutomorphism) -> bool:
    return all(w == gen(i + 1) for i, w in enumerate(f.images))


def same_map(f: FreeAutomorphism, g: FreeAutomorphism) -> bool:
    return f.g == g.g and f.images == g.images


def word_matrix(f: FreeAutomorphism) -> np.ndarray:
    """Action on exponent vectors in the word basis (column j = f(x_j))."""
    cols = [exponent_vector(w, f.n) for w in f.images]
    return as_int_matrix(np.array(cols, dtype=object).T)


def symplectic_rep(f: FreeAutomorphism) -> np.ndarray:
    """Psi(f) in the block basis (a_1..a_g, b_1..b_g). Psi(compose(f, g)) = Psi(g) Psi(f)."""
    M = word_to_block(word_matrix(f))
    if not is_symplectic(M):
        raise InvariantViolation(f"{f.label} does not act symplectically")
    return M


def congruence_level(f: FreeAutomorphism, p: int) -> int:
    return level(symplectic_rep(f), p)


# --- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # TwistA, TwistB, TwistCurve, TwistSeparating, BoundingPair, Power
    automorphism: FreeAutomorphism
    curve: Word | None = None
    detail: str = ""

    def homology(self) -> np.ndarray | None:
        if self.curve is None:
            return None
        return vector_to_block(exponent_vector(self.curve, self.automorphism.n))


def validate(f: FreeAutomorphism, curve: Word | None = None, torelli: bool = False) -> None:
    """Construction checks: inverse pair, boundary fixed, expected homology action."""
    for i in range(1, f.n + 1):
        x = gen(i)
        if _substitute(f.images, _substitute(f.inverse_images, x)) != x:
            raise InvariantViolation(f"{f.label}: stored inverse fails on x{i}")
        if _substitute(f.inverse_images, _substitute(f.images, x)) != x:
            raise InvariantViolation(f"{f.label}: stored inverse fails on x{i}")
    b = boundary_word(f.g)
    if apply(f, b) != b:
        raise InvariantViolation(f"{f.label}: boundary word not fixed")
    M = symplectic_rep(f)
    if curve is not None:
        y = vector_to_block(exponent_vector(curve, f.n))
        if not np.array_equal(M, transvection(y)):
            raise InvariantViolation(f"{f.label}: homology action is not the transvection along {format_word(curve)}")
    if torelli and not np.array_equal(M, identity_matrix(f.n)):
        raise InvariantViolation(f"{f.label}: expected trivial homology action")


def _curve_support(curve: tuple[int, ...]) -> int:
    return (max(abs(l) for l in curve) + 1) // 2


def _twist_from_data(key: str, g: int, label: str) -> tuple[FreeAutomorphism, Word]:
    curve, moved, moved_inv = CURVE_TWISTS[key]
    if _curve_support(curve) > g:
        raise KeyError(key)
    images = tuple(reduce(moved[i], 2 * g) if i in moved else gen(i) for i in range(1, 2 * g + 1))
    inv = tuple(reduce(moved_inv[i], 2 * g) if i in moved_inv else gen(i) for i in range(1, 2 * g + 1))
    return FreeAutomorphism(g, images, inv, label), reduce(curve, 2 * g)


MAX_GENUS = 4


def twist_nonseparating(kind: str, i: int, g: int) -> CatalogEntry:
    """Twist about a_i (kind 'A') or b_i (kind 'B')."""
    kind = kind.upper()
    if kind not in ("A", "B") or not 1 <= i <= g:
        raise ValueError(f"no twist {kind}{i} in genus {g}")
    f, c = _twist_from_data(f"{kind.lower()}{i}", g, f"T{kind.lower()}{i}")
    validate(f, c)
    return CatalogEntry(f"T{kind.lower()}{i}", f"Twist{kind}", f, c, f"{kind.lower()}{i}")


def twist_curve(key: str, g: int) -> CatalogEntry:
    f, c = _twist_from_data(key, g, f"T{key}")
    validate(f, c)
    return CatalogEntry(f"T{key}", "TwistCurve", f, c, key)


def twist_separating(h: int, g: int) -> CatalogEntry:
    """Conjugation by c_h = [x1,x2]...[x_{2h-1},x_{2h}] on x1..x2h."""
    if not 1 <= h < g:
        raise ValueError(f"separating curve index must satisfy 1 <= h < g, got h={h}, g={g}")
    c = boundary_word(h)
    ci = invert_word(c)
    images = tuple(conjugate(gen(j), c) if j <= 2 * h else gen(j) for j in range(1, 2 * g + 1))
    inv = tuple(conjugate(gen(j), ci) if j <= 2 * h else gen(j) for j in range(1, 2 * g + 1))
    f = FreeAutomorphism(g, images, inv, f"sep{h}")
    validate(f, torelli=True)
    return CatalogEntry(f"sep{h}", "TwistSeparating", f, c, f"c{h}")


# Bounding pairs: keys of two disjoint homologous curves in CURVE_TWISTS.
# bp{k} always names the k-th pair; it exists in genus g when both curves fit.
BOUNDING_PAIRS = [(f"p{k}", f"q{k}") for k in range(1, 21)]


def _bp_support(k: int) -> int:
    c_key, d_key = BOUNDING_PAIRS[k - 1]
    return max(_curve_support(CURVE_TWISTS[c_key][0]), _curve_support(CURVE_TWISTS[d_key][0]))


def bounding_pair(index: int, g: int) -> CatalogEntry:
    """T_c T_d^-1 for the index-th built-in pair (c, d)."""
    if not 1 <= index <= len(BOUNDING_PAIRS) or _bp_support(index) > g:
        raise ValueError(f"unknown bounding pair bp{index} in genus {g}")
    c_key, d_key = BOUNDING_PAIRS[index - 1]
    tc, c = _twist_from_data(c_key, g, f"T{c_key}")
    td, d = _twist_from_data(d_key, g, f"T{d_key}")
    validate(tc, c)
    validate(td, d)
    ec, ed = exponent_vector(c, 2 * g), exponent_vector(d, 2 * g)
    if ec != ed and ec != [-x for x in ed]:
        raise InvariantViolation(f"curves {c_key}, {d_key} are not homologous")
    f = compose(invert(td), tc)
    f = FreeAutomorphism(g, f.images, f.inverse_images, f"bp{index}")
    validate(f, torelli=True)
    return CatalogEntry(f"bp{index}", "BoundingPair", f, None, f"T({format_word(c)}) T({format_word(d)})^-1")


def bounding_pair_indices(g: int) -> list[int]:
    return [k for k in range(1, len(BOUNDING_PAIRS) + 1) if _bp_support(k) <= g]


@functools.lru_cache(maxsize=None)
def _catalog(g: int) -> dict:
    if not 1 <= g <= MAX_GENUS:
        raise ValueError(f"catalog covers genus 1..{MAX_GENUS}")
    cat: dict[str, CatalogEntry] = {}
    for i in range(1, g + 1):
        for kind in ("A", "B"):
            e = twist_nonseparating(kind, i, g)
            cat[e.name] = e
    for key, (curve, _, _) in CURVE_TWISTS.items():
        if key[0] in "cde" and _curve_support(curve) <= g:
            e = twist_curve(key, g)
            cat[e.name] = e
    for h in range(1, g):
        e = twist_separating(h, g)
        cat[e.name] = e
    for k in bounding_pair_indices(g):
        e = bounding_pair(k, g)
        cat[e.name] = e
    return cat


def catalog(g: int) -> dict[str, CatalogEntry]:
    """Named, validated catalog entries for genus g."""
    return dict(_catalog(g))


def power_entry(entry: CatalogEntry, n: int) -> CatalogEntry:
    f = power(entry.automorphism, n)
    return CatalogEntry(f"{entry.name}^{n}", "Power", f, entry.curve, f"{entry.name}^{n}")


# --- expression grammar ----------------------------------------------------------

_FACTOR = re.compile(r"^\s*([A-Za-z][A-Za-z0-9]*)\s*(?:\^\s*([+-]?\d+))?\s*$")


def evaluate(expr: str, cat: dict[str, CatalogEntry]) -> FreeAutomorphism:
    """Evaluate `A^n * B * ...`; factors act left to right (A first)."""
    factors = [s for s in expr.split("*")]
    if not expr.strip() or any(not s.strip() for s in factors):
        raise ParseError(f"empty factor in {expr!r}")
    g = next(iter(cat.values())).automorphism.g
    result = None
    for s in factors:
        m = _FACTOR.match(s)
        if not m:
            raise ParseError(f"bad factor {s.strip()!r}")
        name, exp = m.group(1), m.group(2)
        if name in ("id", "identity"):
            f = identity(g)
        elif name in cat:
            f = cat[name].automorphism
        else:
            raise ParseError(f"unknown catalog name {name!r}")
        if exp is not None:
            f = power(f, int(exp))
            f = FreeAutomorphism(f.g, f.images, f.inverse_images, f"{name}^{int(exp)}")
        result = f if result is None else compose(result, f)
    return FreeAutomorphism(result.g, result.images, result.inverse_images, expr.strip())

