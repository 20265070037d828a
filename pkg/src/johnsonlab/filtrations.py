"""Membership oracles for the lower central, Stallings and Zassenhaus series."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import NotInLevel2
from .freegroup import Series, Word, exponent_vector, format_word, sample_series
from .groupring import INTEGERS, PrimeField
from .magnus import first_nonzero_monomial, magnus_embed, valuation_at_least


@dataclass(frozen=True)
class SeriesKind:
    kind: Series
    p: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Series(self.kind))
        if self.kind is not Series.LCS:
            if self.p is None:
                raise ValueError(f"{self.kind.value} series needs a prime p")
            PrimeField(self.p)  # validates


def _rank(u: Word, n: int | None) -> int:
    if n is None:
        n = u.max_index()
    return max(n, 1)


def in_lcs(u: Word, k: int, n: int | None = None) -> bool:
    return valuation_at_least(u, k, INTEGERS, _rank(u, n))


def in_zassenhaus(u: Word, k: int, p: int, n: int | None = None) -> bool:
    return valuation_at_least(u, k, PrimeField(p), _rank(u, n))


def pair_index(n: int) -> list[tuple[int, int]]:
    """Pairs (i, j), 1 <= i < j <= n, in the order used by wedge vectors."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class L2SImage:
    """Image of a level-2 Stallings element in the wedge plus linear parts."""

    p: int
    wedge: tuple[int, ...]
    linear: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.wedge) and not any(self.linear)

    def __add__(self, other: "L2SImage") -> "L2SImage":
        p = self.p
        return L2SImage(
            p,
            tuple((a + b) % p for a, b in zip(self.wedge, other.wedge)),
            tuple((a + b) % p for a, b in zip(self.linear, other.linear)),
        )

    def to_json(self) -> dict:
        return {"p": self.p, "wedge": [str(x) for x in self.wedge], "linear": [str(x) for x in self.linear]}


def antisymmetric_part(table2: np.ndarray, n: int, p: int) -> tuple[int, ...]:
    """(c_ij - c_ji) / 2 mod p for i < j, from a flat degree-2 table."""
    c = np.asarray(table2, dtype=object).reshape(n, n)
    half = pow(2, -1, p)
    return tuple(int((c[i - 1, j - 1] - c[j - 1, i - 1]) * half % p) for i, j in pair_index(n))


def l2s_image(u: Word, p: int, n: int | None = None) -> L2SImage:
    n = _rank(u, n)
    e = exponent_vector(u, n)
    if any(x % p for x in e):
        raise NotInLevel2(f"exponent vector {e} is not divisible by {p}")
    s = magnus_embed(u, 2, INTEGERS, n)
    wedge = antisymmetric_part(s.tables[2], n, p)
    linear = tuple((x // p) % p for x in e)
    return L2SImage(p, wedge, linear)


def in_stallings(u: Word, k: int, p: int, n: int | None = None) -> bool | None:
    """Exact for k <= 3; returns None (unknown) beyond that."""
    if k <= 1 or not u.letters:
        return True
    if k >= 4:
        return None
    n = _rank(u, n)
    e = exponent_vector(u, n)
    level2 = all(x % p == 0 for x in e)
    if k == 2 or not level2:
        return level2
    return l2s_image(u, p, n).is_zero()


def membership(series: SeriesKind, u: Word, k: int, n: int | None = None) -> bool | None:
    if series.kind is Series.LCS:
        return in_lcs(u, k, n)
    if series.kind is Series.ZASSENHAUS:
        return in_zassenhaus(u, k, series.p, n)
    return in_stallings(u, k, series.p, n)


@dataclass
class MembershipReport:
    series: str
    depth: int
    p: int | None
    verdict: bool | None
    witness_monomial: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {
            "series": self.series,
            "depth": self.depth,
            "p": None if self.p is None else str(self.p),
            "verdict": "unknown" if self.verdict is None else self.verdict,
        }
        if self.witness_monomial is not None:
            out["witness_monomial"] = list(self.witness_monomial)
        return out


def member_report(series: SeriesKind, u: Word, k: int, n: int | None = None) -> MembershipReport:
    verdict = membership(series, u, k, n)
    witness = None
    if verdict is False and series.kind is not Series.STALLINGS and k > 1:
        ring = INTEGERS if series.kind is Series.LCS else PrimeField(series.p)
        witness = first_nonzero_monomial(u, k - 1, ring, _rank(u, n))
    return MembershipReport(series.kind.value, k, series.p, verdict, witness)


class Direction(str, enum.Enum):
    S_TO_Z = "StoZ"
    Z_TO_S = "ZtoS"


@dataclass
class CofinalityReport:
    direction: Direction
    depth: int
    p: int
    checked: int
    counterexamples: list[Word] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "direction": self.direction.value,
            "depth": self.depth,
            "p": self.p,
            "checked": self.checked,
            "counterexamples": [format_word(w) for w in self.counterexamples],
        }


def cofinality_check(direction: Direction | str, l: int, p: int, budget: int, seed: int, g: int = 2) -> CofinalityReport:
    """StoZ: Stallings depth l inside Zassenhaus depth l. ZtoS: Zassenhaus depth p^l inside Stallings depth l."""
    direction = Direction(direction)
    n = 2 * g
    bad = []
    if direction is Direction.S_TO_Z:
        words = sample_series(Series.STALLINGS, l, budget, seed, g=g, p=p)
        bad = [w for w in words if not in_zassenhaus(w, l, p, n)]
    else:
        if l > 3:
            raise ValueError("ZtoS needs the exact Stallings oracle, available for l <= 3")
        words = sample_series(Series.ZASSENHAUS, p**l, budget, seed, g=g, p=p)
        bad = [w for w in words if in_stallings(w, l, p, n) is not True]
    return CofinalityReport(direction, l, p, len(words), bad)
