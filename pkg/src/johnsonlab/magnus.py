"""Truncated noncommutative power series and the Magnus embedding.

Storage is one flat table per degree: the degree-d table has n**d entries and
the monomial w_{i_1} ... w_{i_d} sits at index sum (i_k - 1) * n**(d-k), so the
leftmost variable is the most significant digit. Tables are int64 while a
running bound proves it safe and fall back to Python ints (object dtype)
otherwise.

Bridge convention, pinned by tests: the coefficient of w_{a_1} w_{a_2} ... w_{a_l}
in embed(u) equals eps(D_{a_1} D_{a_2} ... D_{a_l} u), where D_{a_l} is applied
first. In multi-index terms, higher_fox_derivative(u, (j_1, ..., j_l)) evaluates
to the coefficient of w_{j_l} ... w_{j_1}.
"""
from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, Incompatible, NotAUnit, OutOfRange
from .freegroup import Word
from .groupring import INTEGERS, CoefficientRing

DEFAULT_BUDGET = 2_000_000
_SAFE = 2**62


def monomial_budget() -> int:
    raw = os.environ.get("JOHNSONLAB_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def check_budget(n: int, D: int) -> None:
    total = sum(n**d for d in range(D + 1))
    limit = monomial_budget()
    if total > limit:
        raise BudgetExceeded(f"{total} monomials for n={n}, D={D} exceeds budget {limit}")


def _to_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _maxabs(a: np.ndarray) -> int:
    return int(np.max(np.abs(a))) if a.size else 0


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    n: int
    D: int
    ring: CoefficientRing
    tables: tuple  # tables[d] has shape (n**d,)

    @classmethod
    def one(cls, n: int, D: int, ring: CoefficientRing = INTEGERS) -> "TruncatedSeries":
        tables = [np.zeros(n**d, dtype=np.int64) for d in range(D + 1)]
        tables[0][0] = 1
        return cls(n, D, ring, tuple(tables))

    @classmethod
    def from_terms(cls, n: int, D: int, terms: dict, ring: CoefficientRing = INTEGERS) -> "TruncatedSeries":
        """Build from {monomial tuple (1-based): coeff}."""
        tables = [np.zeros(n**d, dtype=object) for d in range(D + 1)]
        for mono, c in terms.items():
            if len(mono) > D:
                raise OutOfRange(f"monomial {mono} exceeds truncation {D}")
            tables[len(mono)][_flat_index(mono, n)] += c
        return cls(n, D, ring, tuple(_normalize(t, ring) for t in tables))

    def compatible(self, other: "TruncatedSeries") -> None:
        if (self.n, self.D, self.ring) != (other.n, other.D, other.ring):
            raise Incompatible("series differ in rank, truncation or ring")

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if (self.n, self.D, self.ring) != (other.n, other.D, other.ring):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.tables, other.tables))

    def degree_part(self, d: int) -> np.ndarray:
        if d > self.D:
            raise OutOfRange(f"degree {d} exceeds truncation {self.D}")
        return self.tables[d]

    def reduce_mod(self, p: int) -> "TruncatedSeries":
        ring = CoefficientRing(p)
        return TruncatedSeries(self.n, self.D, ring, tuple(_normalize(t % p, ring) for t in self.tables))

    def terms(self) -> dict:
        out = {}
        for d, t in enumerate(self.tables):
            for idx in np.nonzero(t)[0]:
                out[_monomial(int(idx), d, self.n)] = int(t[idx])
        return out

    def to_json(self) -> dict:
        items = sorted(self.terms().items(), key=lambda kv: (len(kv[0]), kv[0]))
        return {
            "truncation": self.D,
            "ring": self.ring.tag(),
            "terms": [{"monomial": list(m), "coeff": str(c)} for m, c in items],
        }


def _flat_index(mono: Sequence[int], n: int) -> int:
    idx = 0
    for i in mono:
        if not 1 <= i <= n:
            raise OutOfRange(f"variable index {i} outside 1..{n}")
        idx = idx * n + (i - 1)
    return idx


def _monomial(idx: int, d: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        idx, r = divmod(idx, n)
        out.append(r + 1)
    return tuple(reversed(out))


def _normalize(t: np.ndarray, ring: CoefficientRing) -> np.ndarray:
    if ring.p is not None:
        t = np.asarray(t % ring.p)
        return t.astype(np.int64)
    if t.dtype == object and (t.size == 0 or _maxabs(t) < _SAFE):
        return t.astype(np.int64)
    return t


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a.compatible(b)
    n, D, ring = a.n, a.D, a.ring
    out = []
    for d in range(D + 1):
        if ring.p is None:
            bound = sum(_maxabs(a.tables[i]) * _maxabs(b.tables[d - i]) for i in range(d + 1))
            big = bound >= _SAFE
        else:
            big = False
        acc = np.zeros(n**d, dtype=object if big else np.int64)
        for i in range(d + 1):
            x, y = a.tables[i], b.tables[d - i]
            if big:
                x, y = _to_object(x), _to_object(y)
            acc += np.outer(x, y).ravel()
            if ring.p is not None:
                acc %= ring.p
        out.append(_normalize(acc, ring))
    return TruncatedSeries(n, D, ring, tuple(out))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse via the geometric series of (1 - a)."""
    if int(a.tables[0][0]) != 1:
        raise NotAUnit("constant term must be 1")
    one = TruncatedSeries.one(a.n, a.D, a.ring)
    neg = [np.zeros(1, dtype=np.int64)] + [-t for t in a.tables[1:]]
    h = TruncatedSeries(a.n, a.D, a.ring, tuple(_normalize(t, a.ring) for t in neg))
    result, term = one, one
    for _ in range(a.D):
        term = series_mul(term, h)
        result = TruncatedSeries(
            a.n, a.D, a.ring,
            tuple(_normalize(_to_object(x) + _to_object(y), a.ring) for x, y in zip(result.tables, term.tables)),
        )
    return result


def _embed_letters(letters: tuple[int, ...], n: int, D: int, p: int | None) -> list[np.ndarray]:
    tabs = [np.zeros(n**d, dtype=np.int64) for d in range(D + 1)]
    tabs[0][0] = 1
    bounds = [1] + [0] * D
    big = False
    for l in letters:
        i = abs(l) - 1
        if p is None and not big:
            # bound update before touching int64 storage
            nb = list(bounds)
            if l > 0:
                for d in range(D, 0, -1):
                    nb[d] = bounds[d] + bounds[d - 1]
            else:
                for d in range(1, D + 1):
                    nb[d] = bounds[d] + nb[d - 1]
            if max(nb) >= _SAFE:
                big = True
                tabs = [t.astype(object) for t in tabs]
            bounds = nb
        if l > 0:
            # right multiplication by (1 + w_i)
            for d in range(D, 0, -1):
                tabs[d].reshape(-1, n)[:, i] += tabs[d - 1]
        else:
            # right multiplication by 1 - w_i + w_i^2 - ...
            for d in range(1, D + 1):
                tabs[d].reshape(-1, n)[:, i] -= tabs[d - 1]
        if p is not None:
            for t in tabs:
                t %= p
    return tabs


@functools.lru_cache(maxsize=4096)
def _embed_cached(letters: tuple[int, ...], n: int, D: int, ring: CoefficientRing) -> TruncatedSeries:
    tabs = _embed_letters(letters, n, D, ring.p)
    tabs = [_normalize(t, ring) for t in tabs]
    for t in tabs:
        t.flags.writeable = False
    return TruncatedSeries(n, D, ring, tuple(tabs))


def magnus_embed(u: Word, D: int, ring: CoefficientRing = INTEGERS, n: int | None = None) -> TruncatedSeries:
    """Magnus image of u truncated at degree D; n defaults to the largest index used."""
    if D < 1:
        raise ValueError("truncation must be >= 1")
    if n is None:
        n = max(u.max_index(), 1)
    if u.max_index() > n:
        raise OutOfRange(f"word uses generator {u.max_index()} but n={n}")
    check_budget(n, D)
    return _embed_cached(u.letters, n, D, ring)


def coefficient(s: TruncatedSeries, m: Sequence[int]) -> int:
    if len(m) > s.D:
        raise OutOfRange(f"monomial degree {len(m)} exceeds truncation {s.D}")
    return int(s.tables[len(m)][_flat_index(m, s.n)])


@dataclass(frozen=True)
class Beyond:
    """Valuation exceeds the truncation: all degrees 1..D vanish."""

    D: int

    def __str__(self) -> str:
        return f">={self.D + 1}"

    def at_least(self, k: int) -> bool:
        if k <= self.D + 1:
            return True
        raise OutOfRange(f"cannot decide valuation >= {k} from truncation {self.D}")


def valuation(u: Word, ring: CoefficientRing = INTEGERS, D: int = 3, n: int | None = None) -> int | Beyond:
    s = magnus_embed(u, D, ring, n)
    for d in range(1, D + 1):
        if np.any(s.tables[d]):
            return d
    return Beyond(D)


def valuation_at_least(u: Word, k: int, ring: CoefficientRing = INTEGERS, n: int | None = None) -> bool:
    """Whether embed(u) - 1 vanishes through degree k - 1."""
    if k <= 1:
        return True
    v = valuation(u, ring, k - 1, n)
    return isinstance(v, Beyond) or v >= k


def first_nonzero_monomial(u: Word, D: int, ring: CoefficientRing = INTEGERS, n: int | None = None):
    s = magnus_embed(u, D, ring, n)
    for d in range(1, D + 1):
        nz = np.nonzero(s.tables[d])[0]
        if nz.size:
            return _monomial(int(nz[0]), d, s.n)
    return None
