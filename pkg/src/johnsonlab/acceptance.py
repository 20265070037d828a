"""Acceptance checks shared by the test suite and `johnsonlab selftest`."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NotQHSAtP
from .filtrations import SeriesKind, cofinality_check, in_lcs, in_stallings, in_zassenhaus
from .freegroup import Series, gen, power as word_power, random_word, sample_series
from .groupring import INTEGERS, PrimeField, augmentation, fox_derivative
from .johnson import (
    Wedge3Coordinates,
    filtration_member,
    johnson_range_holds,
    perron_member,
    tau,
    tau1_s,
    wedge3_membership,
    wedge3_rank,
)
from .magnus import coefficient, magnus_embed
from .mapclass import (
    FreeAutomorphism,
    catalog,
    compose,
    congruence_level,
    power,
    symplectic_rep,
    validate,
)
from .symplectic import (
    heegaard_reduce,
    identity as identity_matrix,
    is_sp_lie,
    is_symplectic,
    lift_generator_check,
    mod,
    omega,
    random_symplectic,
    sp_abel,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.detail})"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "failures": [str(f) for f in self.failures[:10]],
        }


# --- catalog families -------------------------------------------------------------


def twist_names(cat: dict) -> list[str]:
    return [k for k, e in cat.items() if e.kind in ("TwistA", "TwistB", "TwistCurve")]


def mapping_class_family(g: int, p: int) -> list[tuple[str, FreeAutomorphism]]:
    """Catalog entries plus the p-th and p^2-th twist powers and p-th bounding pair powers."""
    cat = catalog(g)
    fam = [(name, e.automorphism) for name, e in cat.items()]
    for name in twist_names(cat):
        fam.append((f"{name}^{p}", power(cat[name].automorphism, p)))
    for name in [k for k, e in cat.items() if e.kind == "BoundingPair"]:
        fam.append((f"{name}^{p}", power(cat[name].automorphism, p)))
    for name in ("Ta1", "Tb1", f"Tb{g}"):
        fam.append((f"{name}^{p * p}", power(cat[name].automorphism, p * p)))
    return fam


# --- criteria ---------------------------------------------------------------------------


def criterion_bridge(seed: int = 7, count: int = 1000) -> CriterionResult:
    rng = random.Random(seed)
    n, D = 4, 3
    failures = []
    checked = 0
    for _ in range(count):
        w = random_word(rng, n, rng.randint(0, 10))
        for ring in (INTEGERS, PrimeField(3)):
            s = magnus_embed(w, D, ring, n)
            # derivative tree: derivs[m] = d^l w / d x_{m[l-1]} ... d x_{m[0]}
            level = {(): None}
            for l in range(1, D + 1):
                nxt = {}
                for m, e in level.items():
                    for j in range(1, n + 1):
                        d = fox_derivative(w if e is None else e, j)
                        if ring.p is not None:
                            d = d.reduce_mod(ring.p)
                        mm = m + (j,)
                        nxt[mm] = d
                        want = augmentation(d)
                        got = coefficient(s, tuple(reversed(mm)))
                        checked += 1
                        if got != want:
                            failures.append((str(w), ring.tag(), mm, got, want))
                level = nxt
    return CriterionResult(1, "Fox/Magnus bridge", not failures, f"{checked} coefficient comparisons", failures)


def criterion_power_signature() -> CriterionResult:
    failures = []
    for p in (3, 5):
        w = word_power(gen(1), p)
        checks = {
            "lcs2": (in_lcs(w, 2, 2), False),
            "stallings2": (in_stallings(w, 2, p, 2), True),
            "stallings3": (in_stallings(w, 3, p, 2), False),
            f"zassenhaus{p}": (in_zassenhaus(w, p, p, 2), True),
            f"zassenhaus{p + 1}": (in_zassenhaus(w, p + 1, p, 2), False),
        }
        for name, (got, want) in checks.items():
            if got is not want:
                failures.append((p, name, got))
    return CriterionResult(2, "series signature of x1^p", not failures, "p in {3,5}", failures)


def criterion_cofinality(seed: int = 7) -> CriterionResult:
    failures = []
    total = 0
    for p in (3, 5):
        for k in range(1, 5):
            r = cofinality_check("StoZ", k, p, 200, seed)
            total += r.checked
            failures += [("StoZ", p, k, str(w)) for w in r.counterexamples]
        for l in range(1, 4):
            r = cofinality_check("ZtoS", l, p, 50, seed)
            total += r.checked
            failures += [("ZtoS", p, l, str(w)) for w in r.counterexamples]
    return CriterionResult(3, "cofinality of Stallings and Zassenhaus", not failures, f"{total} samples", failures)


def criterion_perron(ps=(3, 5), genera=(2, 3)) -> CriterionResult:
    failures = []
    checked = 0
    for g in genera:
        for p in ps:
            for name, f in mapping_class_family(g, p):
                for k in (1, 2, 3):
                    a = perron_member(f, k, p)
                    b = filtration_member(f, SeriesKind(Series.ZASSENHAUS, p), k)
                    checked += 1
                    if a is not b:
                        failures.append((g, p, name, k, a, b))
    return CriterionResult(4, "Perron filtration equals Zassenhaus filtration", not failures,
                           f"{checked} (map, k) comparisons", failures)


def criterion_tau1_z(ps=(3, 5), genera=(2, 3)) -> CriterionResult:
    failures = []
    rank_info = ""
    for g in genera:
        cat = catalog(g)
        for p in ps:
            zk = SeriesKind(Series.ZASSENHAUS, p)
            for name, e in cat.items():
                if e.kind == "TwistSeparating" and not tau(e.automorphism, 1, zk).is_zero():
                    failures.append((g, p, name, "separating twist has nonzero tau1"))
            for name in twist_names(cat):
                f = power(cat[name].automorphism, p)
                if not tau(f, 1, zk).is_zero():
                    failures.append((g, p, f"{name}^{p}", "twist power has nonzero tau1"))
            results = []
            for name, e in cat.items():
                if e.kind != "BoundingPair":
                    continue
                r = wedge3_membership(tau(e.automorphism, 1, zk))
                if not isinstance(r, Wedge3Coordinates):
                    failures.append((g, p, name, "not in the cubic wedge"))
                results.append(r)
            if g == 3 and p == 3:
                rk = wedge3_rank(results, p)
                need = min(len(results), 20)
                rank_info = f"g=3 p=3 rank {rk} of {len(results)} pairs"
                if rk < need:
                    failures.append(("rank", rk, need))
    return CriterionResult(5, "image of tau1 mod p", not failures, rank_info, failures)


def criterion_tau1_s(ps=(3, 5), genera=(2, 3)) -> CriterionResult:
    failures = []
    checked = 0
    for g in genera:
        cat = catalog(g)
        for p in ps:
            for name, f in mapping_class_family(g, p):
                if congruence_level(f, p) < 1:
                    continue
                v = tau1_s(f, p)
                checked += 1
                if not is_sp_lie(v.sp_part, p):
                    failures.append((g, p, name, "sp part fails the Lie identity"))
                base = name.split("^")[0]
                kind = cat[base].kind if base in cat else ""
                if kind in ("TwistA", "TwistB", "TwistCurve") and name.endswith(f"^{p}"):
                    if not np.array_equal(v.sp_part, sp_abel(symplectic_rep(f), p)):
                        failures.append((g, p, name, "sp part differs from abel(Psi)"))
                should_vanish = (
                    kind == "TwistSeparating"
                    or (kind == "BoundingPair" and name.endswith(f"^{p}"))
                    or name.endswith(f"^{p * p}")
                )
                if should_vanish and not v.is_zero():
                    failures.append((g, p, name, "expected zero value"))
    return CriterionResult(6, "structure of tau1 for the Stallings series", not failures,
                           f"{checked} level-p maps", failures)


def criterion_homomorphy(seed: int = 7, pairs: int = 100) -> CriterionResult:
    rng = random.Random(seed)
    failures = []
    g, p = 3, 3
    fam = mapping_class_family(g, p)
    torelli = [(n, f) for n, f in fam if np.array_equal(symplectic_rep(f), identity_matrix(2 * g))]
    level_p = [(n, f) for n, f in fam if congruence_level(f, p) >= 1]
    lcs = SeriesKind(Series.LCS)
    zk = SeriesKind(Series.ZASSENHAUS, p)
    for _ in range(pairs):
        (n1, f1), (n2, f2) = rng.choice(torelli), rng.choice(torelli)
        fg = compose(f1, f2)
        if tau(fg, 1, lcs) != tau(f1, 1, lcs) + tau(f2, 1, lcs):
            failures.append(("lcs", n1, n2))
        (n1, f1), (n2, f2) = rng.choice(level_p), rng.choice(level_p)
        fg = compose(f1, f2)
        if tau(fg, 1, zk) != tau(f1, 1, zk) + tau(f2, 1, zk):
            failures.append(("zassenhaus", n1, n2))
        a, b, c = tau1_s(fg, p), tau1_s(f1, p), tau1_s(f2, p)
        wedge_ok = all(
            tuple((x + y) % p for x, y in zip(wb, wc)) == wa for wa, wb, wc in zip(a.wedge_hom, b.wedge_hom, c.wedge_hom)
        )
        if not wedge_ok or not np.array_equal(a.sp_part, mod(b.sp_part + c.sp_part, p)):
            failures.append(("stallings", n1, n2))
    kernel_checked = 0
    for gg in (2, 3):
        for name, f in mapping_class_family(gg, p):
            for series in (lcs, zk):
                for k in (1, 2):
                    if filtration_member(f, series, k) is not True:
                        continue
                    kernel_checked += 1
                    zero = tau(f, k, series).is_zero()
                    if zero is not filtration_member(f, series, k + 1):
                        failures.append(("kernel", gg, name, series.kind.value, k))
    return CriterionResult(7, "homomorphy and kernel of tau", not failures,
                           f"{pairs} pairs, {kernel_checked} kernel checks", failures)


def zassenhaus_level(f: FreeAutomorphism, p: int, cap: int = 4) -> int:
    k = 0
    while k < cap and filtration_member(f, SeriesKind(Series.ZASSENHAUS, p), k + 1):
        k += 1
    return k


def criterion_johnson_range(seed: int = 7, pairs: int = 50) -> CriterionResult:
    rng = random.Random(seed)
    failures = []
    checked = 0
    for g, p in ((2, 3), (3, 3), (2, 5)):
        fam = [(n, f) for n, f in mapping_class_family(g, p)]
        leveled = [(n, f, zassenhaus_level(f, p)) for n, f in fam]
        leveled = [t for t in leveled if 1 <= t[2] <= 4]
        for t in range(pairs):
            name, f, k = rng.choice(leveled)
            l = rng.randint(1, 5 - k)
            u = sample_series(Series.ZASSENHAUS, l, 1, seed * 1000 + t, g=g, p=p)[0]
            checked += 1
            if not johnson_range_holds(f, k, u, l, p):
                failures.append((g, p, name, k, l, str(u)))
    return CriterionResult(8, "JohnsonRange inclusion", not failures, f"{checked} (map, word) pairs", failures)


def criterion_heegaard(seed: int = 7, count: int = 100) -> CriterionResult:
    failures = []
    done = 0
    for g in (2, 3):
        for p in (3, 5):
            rng = random.Random(f"heegaard:{g}:{p}:{seed}")
            got = 0
            attempts = 0
            while got < count and attempts < 50 * count:
                attempts += 1
                M = random_symplectic(g, rng, steps=rng.randint(2, 10))
                try:
                    r = heegaard_reduce(M, p)
                except NotQHSAtP:
                    continue
                got += 1
                bad = [k for k, v in r.checks.items() if not v]
                if not is_symplectic(r.X) or not is_symplectic(r.Y) or not is_symplectic(r.residual, p):
                    bad.append("symplectic")
                if bad:
                    failures.append((g, p, bad))
            done += got
            if got < count:
                failures.append((g, p, f"only {got} inputs with invertible H"))
            for M in (omega(g), -omega(g)):
                try:
                    heegaard_reduce(M, p)
                    failures.append((g, p, "singular H accepted"))
                except NotQHSAtP:
                    pass
    return CriterionResult(9, "Heegaard gluing-map reduction", not failures, f"{done} reductions", failures)


def criterion_catalog(ps=(3, 5)) -> CriterionResult:
    failures = []
    entries = 0
    lifts = 0
    for g in (1, 2, 3):
        cat = catalog(g)
        for name, e in cat.items():
            entries += 1
            try:
                validate(e.automorphism, e.curve if e.kind.startswith("Twist") and e.kind != "TwistSeparating" else None,
                         torelli=e.kind in ("TwistSeparating", "BoundingPair"))
            except Exception as exc:  # report, don't stop the sweep
                failures.append((g, name, str(exc)))
        for p in ps:
            for i, j in itertools.product(range(1, g + 1), repeat=2):
                r = lift_generator_check(i, j, p, g)
                lifts += 1
                if not r.ok:
                    failures.append((g, p, i, j, r.mismatches))
    return CriterionResult(10, "catalog integrity and generator lifts", not failures,
                           f"{entries} entries, {lifts} lift checks", failures)


CRITERIA: dict[str, Callable[..., CriterionResult]] = {
    "bridge": criterion_bridge,
    "powers": criterion_power_signature,
    "cofinality": criterion_cofinality,
    "perron": criterion_perron,
    "tau1z": criterion_tau1_z,
    "tau1s": criterion_tau1_s,
    "homomorphy": criterion_homomorphy,
    "range": criterion_johnson_range,
    "heegaard": criterion_heegaard,
    "catalog": criterion_catalog,
}

SEEDED = {"bridge", "cofinality", "homomorphy", "range", "heegaard"}


def run(suite: str = "all", seed: int = 7) -> list[CriterionResult]:
    names = list(CRITERIA) if suite == "all" else [suite]
    out = []
    for name in names:
        fn = CRITERIA[name]
        out.append(fn(seed=seed) if name in SEEDED else fn())
    return out
