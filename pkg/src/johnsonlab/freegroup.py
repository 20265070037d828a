"""Reduced words in the free group on x1..x2g.

A letter is a nonzero int: +i stands for x_i and -i for its inverse X_i.
"""
from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidGenerator, ParseError


@dataclass(frozen=True)
class Rank:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"genus must be a positive integer, got {self.g!r}")

    @property
    def n(self) -> int:
        return 2 * self.g


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word. Build through `reduce` unless already reduced."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        ls = self.letters
        for a, b in zip(ls, ls[1:]):
            if a == -b:
                raise ValueError(f"word is not reduced: {ls}")
        if 0 in ls:
            raise InvalidGenerator("letter index 0 is not a generator")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def __str__(self) -> str:
        return format_word(self)

    def max_index(self) -> int:
        return max((abs(l) for l in self.letters), default=0)


IDENTITY = Word(())


def _check_rank(letters: Iterable[int], rank: int | Rank | None) -> None:
    if rank is None:
        for l in letters:
            if l == 0:
                raise InvalidGenerator("letter index 0 is not a generator")
        return
    n = rank.n if isinstance(rank, Rank) else int(rank)
    for l in letters:
        if l == 0 or abs(l) > n:
            raise InvalidGenerator(f"generator index {abs(l)} outside 1..{n}")


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def reduce(letters: Sequence[int] | Word, rank: int | Rank | None = None) -> Word:
    """Freely reduce a letter sequence. `rank` is the number of generators (or a Rank)."""
    if isinstance(letters, Word):
        letters = letters.letters
    letters = tuple(int(l) for l in letters)
    _check_rank(letters, rank)
    return Word(_free_reduce(letters))


def gen(i: int) -> Word:
    return reduce((i,))


def multiply(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        for l in w.letters:
            if out and out[-1] == -l:
                out.pop()
            else:
                out.append(l)
    return Word(tuple(out))


def invert(u: Word) -> Word:
    return Word(tuple(-l for l in reversed(u.letters)))


def power(u: Word, n: int) -> Word:
    if n < 0:
        u, n = invert(u), -n
    if n == 0 or not u:
        return IDENTITY
    # peel off the conjugating part so the core repeats without cancellation
    ls = u.letters
    k = 0
    while k < len(ls) // 2 and ls[k] == -ls[-1 - k]:
        k += 1
    head, core = ls[:k], ls[k:len(ls) - k]
    tail = tuple(-l for l in reversed(head))
    return Word(head + core * n + tail)


def conjugate(u: Word, c: Word) -> Word:
    """c u c^-1."""
    return multiply(c, u, invert(c))


def commutator(u: Word, v: Word) -> Word:
    return multiply(u, v, invert(u), invert(v))


def exponent_vector(u: Word, n: int | Rank | None = None) -> list[int]:
    if isinstance(n, Rank):
        n = n.n
    if n is None:
        n = u.max_index()
    vec = [0] * n
    for l in u.letters:
        if abs(l) > n:
            raise InvalidGenerator(f"generator index {abs(l)} outside 1..{n}")
        vec[abs(l) - 1] += 1 if l > 0 else -1
    return vec


def boundary_word(rank: Rank | int) -> Word:
    g = rank.g if isinstance(rank, Rank) else int(rank)
    return multiply(*(commutator(gen(2 * i - 1), gen(2 * i)) for i in range(1, g + 1)))


_TOKEN = re.compile(r"^([xX])(\d+)(\^-1)?$")


def parse_word(text: str, rank: int | Rank | None = None) -> Word:
    """Parse `x1 X2 x3^-1`; the empty string (or `1`, `e`) is the identity."""
    letters = []
    for tok in text.replace(",", " ").split():
        if tok in ("1", "e"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad word token {tok!r}")
        idx = int(m.group(2))
        if idx == 0:
            raise ParseError(f"bad word token {tok!r}")
        sign = -1 if m.group(1) == "X" else 1
        if m.group(3):
            sign = -sign
        letters.append(sign * idx)
    return reduce(letters, rank)


def format_word(u: Word) -> str:
    return " ".join(f"x{l}" if l > 0 else f"X{-l}" for l in u.letters)


def random_word(rng: random.Random, n: int, length: int) -> Word:
    out: list[int] = []
    while len(out) < length:
        l = rng.randint(1, n) * rng.choice((1, -1))
        if out and out[-1] == -l:
            continue
        out.append(l)
    return Word(tuple(out))


# --- samplers ---------------------------------------------------------------


class Series(str, enum.Enum):
    LCS = "lcs"
    STALLINGS = "stallings"
    ZASSENHAUS = "zassenhaus"


class _Sampler:
    """Builds elements of a series term by unwinding its recursive definition."""

    def __init__(self, rng: random.Random, n: int, p: int, max_len: int, max_lcs_depth: int):
        self.rng = rng
        self.n = n
        self.p = p
        self.max_len = max_len
        self.max_lcs_depth = max_lcs_depth

    def short(self) -> Word:
        return random_word(self.rng, self.n, self.rng.randint(1, self.max_len))

    def maybe_conjugate(self, u: Word) -> Word:
        if self.rng.random() < 0.3:
            c = random_word(self.rng, self.n, self.rng.randint(1, 2))
            return conjugate(u, c)
        return u

    def product(self, make) -> Word:
        return multiply(*(self.maybe_conjugate(make()) for _ in range(self.rng.randint(1, 2))))

    def lcs(self, k: int) -> Word:
        if k <= 1:
            return self.short()

        def one():
            a, b = self.short(), self.lcs(k - 1)
            return commutator(a, b) if self.rng.random() < 0.5 else commutator(b, a)

        return self.product(one)

    def stallings(self, k: int) -> Word:
        if k <= 1:
            return self.short()

        def one():
            if self.rng.random() < 0.5:
                return commutator(self.short(), self.stallings(k - 1))
            return power(self.stallings(k - 1), self.p)

        return self.product(one)

    def zassenhaus(self, k: int) -> Word:
        if k <= 1:
            return self.short()
        # every (i, j) with i * p^j >= k gives generators lcs(i)^(p^j)
        options = []
        j = 0
        while True:
            i = -(-k // self.p**j)
            if i <= self.max_lcs_depth:
                options.append((i, j))
            if i == 1:
                break
            j += 1

        def one():
            i, j = self.rng.choice(options)
            return power(self.lcs(i), self.p**j)

        return self.product(one)


def sample_series(
    series: Series | str,
    k: int,
    budget: int,
    seed: int,
    *,
    g: int = 2,
    p: int = 3,
    max_len: int = 6,
    max_lcs_depth: int = 4,
) -> list[Word]:
    """Return `budget` words lying in the depth-k term of the series, by construction."""
    series = Series(series)
    if k < 1 or budget < 1:
        raise ValueError("need k >= 1 and budget >= 1")
    rng = random.Random(f"{series.value}:{k}:{p}:{g}:{seed}")
    s = _Sampler(rng, 2 * g, p, max_len, max_lcs_depth)
    make = {Series.LCS: s.lcs, Series.STALLINGS: s.stallings, Series.ZASSENHAUS: s.zassenhaus}[series]
    out = []
    for _ in range(budget):
        w = make(k)
        for _ in range(20):
            if w:
                break
            w = make(k)
        out.append(w)
    return out
