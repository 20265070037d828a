"""Command-line front end. Every command prints one JSON report on stdout."""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import acceptance
from .errors import InvalidGenerator, JohnsonLabError, NotInFiltration, NotQHSAtP, ParseError
from .filtrations import SeriesKind, cofinality_check, l2s_image, member_report
from .freegroup import Series, format_word, parse_word, sample_series
from .groupring import INTEGERS, PrimeField, augmentation, higher_fox_derivative
from .johnson import filtration_member, perron_member, tau, tau1_s, wedge3_membership
from .magnus import coefficient, magnus_embed, valuation
from .mapclass import FreeAutomorphism, catalog, congruence_level, evaluate, symplectic_rep
from .symplectic import as_int_matrix, heegaard_reduce, lift_generator_check, sp_abel

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_FILTRATION, EXIT_QHS = 0, 1, 2, 3, 4


class Failure(Exception):
    def __init__(self, message: str, code: int = EXIT_FAIL, data=None):
        super().__init__(message)
        self.code = code
        self.data = data


def _stringify(x):
    """Decimal strings for every number so arbitrary-precision values survive."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, dict):
        return {k: _stringify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    if isinstance(x, np.ndarray):
        return _stringify(x.tolist())
    return x


def _matrix(M) -> list:
    return [[str(int(v)) for v in row] for row in M]


def _read_text(args) -> str:
    if getattr(args, "stdin", False):
        return sys.stdin.read()
    if args.word is None:
        raise ParseError("give --word or --stdin")
    return args.word


def _load_map(text: str, g: int) -> FreeAutomorphism:
    text = text.strip()
    if text.endswith(".json") and os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read().strip()
    if text.startswith("{"):
        try:
            return FreeAutomorphism.from_json(json.loads(text))
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad mapping class JSON: {exc}") from exc
    return evaluate(text, catalog(g))


def _series(name: str, p: int | None) -> SeriesKind:
    kind = Series(name)
    return SeriesKind(kind, None if kind is Series.LCS else p)


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad index list {text!r}") from exc


# --- commands -------------------------------------------------------------------


def cmd_member(args) -> dict:
    n = 2 * args.g
    u = parse_word(_read_text(args), n)
    series = _series(args.series, args.p)
    report = member_report(series, u, args.depth, n).to_json()
    if series.kind is Series.STALLINGS and report["verdict"] is not True and args.depth == 3:
        try:
            report["l2s_image"] = l2s_image(u, args.p, n).to_json()
        except JohnsonLabError:
            pass
    return report


def cmd_tau(args) -> dict:
    if args.variant != "integral" and args.p is None:
        raise ParseError("--p is required for the z and s variants")
    f = _load_map(args.map, args.g)
    if args.variant == "s":
        if args.level != 1:
            raise Failure("the Stallings variant is offered at level 1 only", EXIT_PARSE)
        v = tau1_s(f, args.p)
        out = v.to_json()
        out["wedge3"] = None if np.any(v.sp_part) else wedge3_membership(v).to_json()
        return out
    series = SeriesKind(Series.LCS) if args.variant == "integral" else SeriesKind(Series.ZASSENHAUS, args.p)
    v = tau(f, args.level, series)
    out = v.to_json()
    if args.level == 1 and (args.variant == "z" or args.p is not None):
        out["wedge3"] = wedge3_membership(v, args.p).to_json()
    return out


def cmd_fox(args) -> dict:
    n = 2 * args.g
    u = parse_word(_read_text(args), n)
    m = _indices(args.index)
    d = higher_fox_derivative(u, m, n)
    if args.p is not None:
        d = d.reduce_mod(args.p)
    return {"word": format_word(u), "multi_index": list(m), "derivative": d.to_json(), "augmentation": augmentation(d)}


def cmd_magnus(args) -> dict:
    n = 2 * args.g
    u = parse_word(_read_text(args), n)
    ring = INTEGERS if args.p is None else PrimeField(args.p)
    s = magnus_embed(u, args.degree, ring, n)
    out = {"word": format_word(u), "valuation": str(valuation(u, ring, args.degree, n))}
    if args.monomial is not None:
        m = _indices(args.monomial)
        out["monomial"] = list(m)
        out["coefficient"] = coefficient(s, m)
    else:
        out["series"] = s.to_json()
    return out


def cmd_heegaard(args) -> dict:
    src = sys.stdin if args.matrix in (None, "-") else open(args.matrix, encoding="utf-8")
    with src:
        try:
            data = json.load(src)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad matrix JSON: {exc}") from exc
    entries = data["entries"] if isinstance(data, dict) else data
    M = as_int_matrix([[int(x) for x in row] for row in entries])
    return heegaard_reduce(M, args.p).to_json()


def cmd_sample(args) -> dict:
    words = sample_series(args.series, args.depth, args.budget, args.seed, g=args.g, p=args.p, max_len=args.max_len)
    return {"series": args.series, "depth": args.depth, "p": args.p, "words": [format_word(w) for w in words]}


def cmd_perron(args) -> dict:
    f = _load_map(args.map, args.g)
    return {
        "map": f.label,
        "k": args.k,
        "p": args.p,
        "perron": perron_member(f, args.k, args.p),
        "zassenhaus": filtration_member(f, SeriesKind(Series.ZASSENHAUS, args.p), args.k),
    }


def cmd_mapclass(args) -> dict:
    f = _load_map(args.map, args.g)
    M = symplectic_rep(f)
    out = {"automorphism": f.to_json(), "psi": _matrix(M)}
    if args.p is not None:
        lvl = congruence_level(f, args.p)
        out["congruence_level"] = lvl
        if lvl >= 1:
            out["sp_abel"] = _matrix(sp_abel(M, args.p))
    if args.member:
        series, k = args.member.split(":")
        v = filtration_member(f, _series(series, args.p), int(k))
        out["filtration_member"] = "unknown" if v is None else v
    return out


def cmd_catalog(args) -> dict:
    cat = catalog(args.g)
    return {"g": args.g, "entries": [{"name": k, "kind": e.kind, "detail": e.detail} for k, e in cat.items()]}


def cmd_lift(args) -> dict:
    return lift_generator_check(args.i, args.j, args.p, args.g).to_json()


def cmd_cofinality(args) -> dict:
    return cofinality_check(args.direction, args.depth, args.p, args.budget, args.seed, g=args.g).to_json()


def cmd_selftest(args) -> dict:
    results = acceptance.run(args.suite, args.seed)
    out = {"results": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    for r in results:
        print(r.line(), file=sys.stderr)
    if not out["passed"]:
        raise Failure("acceptance failures", EXIT_FAIL, out)
    return out


# --- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="johnsonlab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def word_args(sp):
        sp.add_argument("--word", help='word such as "x1 x2 X1 X2"')
        sp.add_argument("--stdin", action="store_true", help="read the word from stdin")
        sp.add_argument("--g", type=int, default=2, help="genus (rank 2g)")

    sp = sub.add_parser("member", help="series membership of a word")
    sp.add_argument("--series", choices=[s.value for s in Series], required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--p", type=int, default=3)
    word_args(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("tau", help="Johnson homomorphism of a mapping class")
    sp.add_argument("--map", required=True, help="catalog expression or mapping-class JSON")
    sp.add_argument("--level", type=int, default=1)
    sp.add_argument("--variant", choices=["integral", "z", "s"], default="z")
    sp.add_argument("--p", type=int)
    sp.add_argument("--g", type=int, default=3)
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("fox", help="higher Fox derivative of a word")
    sp.add_argument("--index", required=True, help='multi-index, first applied first, e.g. "1 2"')
    sp.add_argument("--p", type=int)
    word_args(sp)
    sp.set_defaults(func=cmd_fox)

    sp = sub.add_parser("magnus", help="Magnus expansion, coefficient and valuation")
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--monomial", help='variable indices, e.g. "1 2" for w1 w2')
    sp.add_argument("--p", type=int)
    word_args(sp)
    sp.set_defaults(func=cmd_magnus)

    sp = sub.add_parser("heegaard", help="normalize a gluing matrix mod p")
    sp.add_argument("--matrix", help="JSON file ({g, ring, entries} or a bare array); '-' for stdin")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_heegaard)

    sp = sub.add_parser("sample", help="sample words from a series term")
    sp.add_argument("--series", choices=[s.value for s in Series], required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--budget", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--g", type=int, default=2)
    sp.add_argument("--max-len", type=int, default=6)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("perron", help="Fox-matrix filtration membership")
    sp.add_argument("--map", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, default=3)
    sp.set_defaults(func=cmd_perron)

    sp = sub.add_parser("mapclass", help="images, symplectic matrix and levels of a mapping class")
    sp.add_argument("--map", required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--member", help='filtration query "series:k", e.g. "zassenhaus:1"')
    sp.add_argument("--g", type=int, default=3)
    sp.set_defaults(func=cmd_mapclass)

    sp = sub.add_parser("catalog", help="list catalog entries")
    sp.add_argument("--g", type=int, default=3)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("lift", help="compare twist-power products with M_ij / N_ij")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--g", type=int, default=3)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("cofinality", help="sampled inclusion checks between the mod-p series")
    sp.add_argument("--direction", choices=["StoZ", "ZtoS"], required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--p", type=int, default=3)
    sp.add_argument("--budget", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--g", type=int, default=2)
    sp.set_defaults(func=cmd_cofinality)

    sp = sub.add_parser("selftest", help="run the acceptance suites")
    sp.add_argument("--suite", choices=["all", *acceptance.CRITERIA], default="all")
    sp.add_argument("--seed", type=int, default=7)
    sp.set_defaults(func=cmd_selftest)
    return ap


def _emit(status: str, data=None, diagnostics=None) -> None:
    report = {"status": status, "data": _stringify(data), "diagnostics": diagnostics or []}
    sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data = args.func(args)
    except Failure as exc:
        _emit("error", exc.data, [str(exc)])
        return exc.code
    except (ParseError, InvalidGenerator) as exc:
        _emit("error", None, [f"parse error: {exc}"])
        return EXIT_PARSE
    except NotInFiltration as exc:
        _emit("error", None, [f"not in filtration: {exc}"])
        return EXIT_FILTRATION
    except NotQHSAtP as exc:
        _emit("error", None, [f"not a rational homology sphere at p: {exc}"])
        return EXIT_QHS
    except (JohnsonLabError, ValueError, KeyError, OSError) as exc:
        _emit("error", None, [f"{type(exc).__name__}: {exc}"])
        return EXIT_FAIL
    _emit("ok", data)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
