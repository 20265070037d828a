"""Integral and mod-p group rings of the free group, with Fox calculus."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import Incompatible, InvalidGenerator
from .freegroup import IDENTITY, Word, format_word, invert, multiply, parse_word


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """Integers when p is None, otherwise the prime field F_p (p odd)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 3 or not _is_prime(self.p)):
            raise ValueError(f"p must be an odd prime, got {self.p}")

    @property
    def is_integral(self) -> bool:
        return self.p is None

    def norm(self, c: int) -> int:
        return c if self.p is None else c % self.p

    def tag(self) -> str:
        return "Z" if self.p is None else f"F{self.p}"

    @classmethod
    def from_tag(cls, tag: str) -> "CoefficientRing":
        if tag == "Z":
            return cls()
        if tag.startswith("F"):
            return cls(int(tag[1:]))
        raise ValueError(f"unknown ring tag {tag!r}")

    def __str__(self) -> str:
        return self.tag()


INTEGERS = CoefficientRing()


def PrimeField(p: int) -> CoefficientRing:
    return CoefficientRing(p)


@dataclass(frozen=True)
class GroupRingElement:
    terms: Mapping[Word, int] = field(default_factory=dict)
    ring: CoefficientRing = INTEGERS

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            c = self.ring.norm(int(c))
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, word: Word, coeff: int = 1, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        return cls({word: coeff}, ring)

    @classmethod
    def zero(cls, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        return cls({}, ring)

    @classmethod
    def one(cls, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        return cls({IDENTITY: 1}, ring)

    def _same_ring(self, other: "GroupRingElement") -> None:
        if self.ring != other.ring:
            raise Incompatible(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._same_ring(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out, self.ring)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()}, self.ring)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def scale(self, k: int) -> "GroupRingElement":
        return GroupRingElement({w: k * c for w, c in self.terms.items()}, self.ring)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        if isinstance(other, int):
            return self.scale(other)
        self._same_ring(other)
        out: dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = multiply(u, v)
                out[w] = out.get(w, 0) + a * b
        return GroupRingElement(out, self.ring)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def map_words(self, fn) -> "GroupRingElement":
        out: dict[Word, int] = {}
        for w, c in self.terms.items():
            v = fn(w)
            out[v] = out.get(v, 0) + c
        return GroupRingElement(out, self.ring)

    def reduce_mod(self, p: int) -> "GroupRingElement":
        return GroupRingElement(self.terms, PrimeField(p))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].letters)):
            parts.append(f"{c}*({format_word(w) or '1'})")
        return " + ".join(parts)

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].letters))
        return {
            "ring": self.ring.tag(),
            "terms": [{"word": format_word(w), "coeff": str(c)} for w, c in items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupRingElement":
        ring = CoefficientRing.from_tag(data["ring"])
        terms: dict[Word, int] = {}
        for t in data["terms"]:
            w = parse_word(t["word"])
            terms[w] = terms.get(w, 0) + int(t["coeff"])
        return cls(terms, ring)


def as_element(x: Word | GroupRingElement, ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    if isinstance(x, Word):
        return GroupRingElement.of(x, 1, ring)
    return x


def augmentation(e: GroupRingElement) -> int:
    return e.ring.norm(sum(e.terms.values()))


def bar(e: GroupRingElement) -> GroupRingElement:
    return e.map_words(invert)


def _check_index(j: int, rank: int | None) -> None:
    if j < 1 or (rank is not None and j > rank):
        raise InvalidGenerator(f"generator index {j} out of range")


def fox_derivative_word(w: Word, j: int, ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    """d w / d x_j, read off letter by letter."""
    ls = w.letters
    out: dict[Word, int] = {}
    for k, l in enumerate(ls):
        if l == j:
            pre = Word(ls[:k])
            out[pre] = out.get(pre, 0) + 1
        elif l == -j:
            pre = Word(ls[: k + 1])
            out[pre] = out.get(pre, 0) - 1
    return GroupRingElement(out, ring)


def fox_derivative(
    w: Word | GroupRingElement, j: int, rank: int | None = None
) -> GroupRingElement:
    _check_index(j, rank)
    if isinstance(w, Word):
        return fox_derivative_word(w, j)
    out: dict[Word, int] = {}
    for u, c in w.terms.items():
        for v, d in fox_derivative_word(u, j, w.ring).terms.items():
            out[v] = out.get(v, 0) + c * d
    return GroupRingElement(out, w.ring)


def higher_fox_derivative(
    e: Word | GroupRingElement, m: Sequence[int], rank: int | None = None
) -> GroupRingElement:
    """Apply d/dx_{m[0]} first, then d/dx_{m[1]}, and so on."""
    if len(m) < 1:
        raise ValueError("multi-index must have order >= 1")
    cur = as_element(e)
    for j in m:
        cur = fox_derivative(cur, j, rank)
    return cur


def eval_mod(e: GroupRingElement, p: int) -> int:
    return sum(e.terms.values()) % p


def fox_expansion(w: Word, n: int, ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    """Right side of the fundamental formula: eps(w) + sum_i (dw/dx_i)(x_i - 1)."""
    total = GroupRingElement.one(ring)
    for i in range(1, n + 1):
        d = fox_derivative(as_element(w, ring), i)
        xi_minus_1 = GroupRingElement({Word((i,)): 1, IDENTITY: -1}, ring)
        total = total + d * xi_minus_1
    return total


def product_rule_closed_form(u: Word, v: Word, m: Sequence[int], ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    """Higher product rule for d^l(uv) written as a sum over split points.

    d^l(uv) = sum_{n=1..l} D_{m[l-1]}..D_{m[n-1]}(u) * eps(D_{m[n-2]}..D_{m[0]}(v)) + u * D^l(v)
    where the inner derivative chain on v is empty (eps(v) = 1) when n = 1.
    """
    l = len(m)
    U = as_element(u, ring)
    V = as_element(v, ring)
    total = GroupRingElement.zero(ring)
    for n in range(1, l + 1):
        left = higher_fox_derivative(U, m[n - 1:])
        inner = m[: n - 1]
        scal = augmentation(higher_fox_derivative(V, inner)) if inner else 1
        total = total + left.scale(scal)
    total = total + U * higher_fox_derivative(V, m)
    return total

