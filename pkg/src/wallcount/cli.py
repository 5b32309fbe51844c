"""Command-line front end.

    wallcount sequence   --family fbar -m 3 --n-max 10 --method determinant
    wallcount crosscheck --family fbar --m-max 3 --n-max 3
    wallcount identities --only tutte --max-len 8
    wallcount tableaux   -m 2 -n 1
    wallcount tutte      --path N2E2
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import counting, genfun, paths, tableaux, tutte
from .genfun import CheckResult

FAMILIES = ("fbar", "fr", "q")


class NotApplicable(Exception):
    """The method does not cover these parameters."""


def _per_n(fn: Callable[[int], int]) -> Callable[[dict, int], list[int]]:
    return lambda p, n_max: [fn(p, n) for n in range(n_max + 1)]


def _fbar_tableaux(p, n):
    if n == 0:
        return 1
    return len(tableaux.enumerate_tableaux(tableaux.periodic_building(p["m"], n)))


def _fbar_recursion(p, n):
    if p["m"] < 2:
        raise NotApplicable("the recursion needs m >= 2")
    return 1 if n == 0 else counting.recursion_fbar(p["m"], n)


def _q_tutte(p, n):
    boundary = paths.staircase_boundary(p["k"], p["l"], n)
    return tutte.tutte_polynomial(boundary).evaluate(1, 1)


# family -> method -> (params, n_max) -> [a(0), ..., a(n_max)]
METHODS: dict[str, dict[str, Callable[[dict, int], list[int]]]] = {
    "fbar": {
        "tableaux": _per_n(_fbar_tableaux),
        "dp": _per_n(lambda p, n: paths.fbar_count(p["m"], n)),
        "determinant": _per_n(lambda p, n: counting.fbar_determinant(p["m"], n)),
        "recursion": _per_n(_fbar_recursion),
        "genfun": lambda p, n: genfun.fbar_series_exp(p["m"], n).integers(),
        "multisection": lambda p, n: genfun.fbar_series_multisection(p["m"], n).integers(),
        "kernel": lambda p, n: genfun.fr_series(p["m"], p["m"], 1, n).integers(),
    },
    "fr": {
        "dp": _per_n(lambda p, n: paths.f_r_count(p["k"], p["l"], p["r"], n)),
        "genfun": lambda p, n: genfun.fr_series(p["k"], p["l"], p["r"], n).integers(),
    },
    "q": {
        "dp": _per_n(lambda p, n: paths.q_count(p["k"], p["l"], n)),
        "genfun": lambda p, n: genfun.q_series_exp(p["k"], p["l"], n).integers(),
        "kernel": lambda p, n: genfun.q_series_roots(p["k"], p["l"], n).integers(),
        "tutte": _per_n(_q_tutte),
    },
}


def compute(family: str, params: dict, method: str, n_max: int) -> list[int]:
    try:
        fn = METHODS[family][method]
    except KeyError:
        raise NotApplicable(f"method {method!r} is not available for family {family!r}")
    return fn(params, n_max)


def _params(args, family: str) -> dict:
    if family == "fbar":
        if args.m is None or args.m < 1:
            raise ValueError("family fbar needs -m >= 1")
        return {"m": args.m}
    if args.k is None or args.l is None or args.k < 1 or args.l < 1:
        raise ValueError(f"family {family} needs -k >= 1 and -l >= 1")
    if family == "q":
        return {"k": args.k, "l": args.l}
    r = 1 if args.r is None else args.r
    if not 1 <= r <= args.l:
        raise ValueError(f"-r must lie in 1..{args.l}")
    return {"k": args.k, "l": args.l, "r": r}


def format_values(values: list[int], fmt: str, offset: int, meta: dict) -> str:
    if fmt == "json":
        return json.dumps({**meta, "values": [str(v) for v in values]})
    if fmt == "table":
        w = len(str(len(values) - 1 + offset))
        return "\n".join(f"{n + offset:>{w}} | {v}" for n, v in enumerate(values))
    return "\n".join(f"{n + offset} {v}" for n, v in enumerate(values))


def cmd_sequence(args) -> int:
    params = _params(args, args.family)
    if args.n_max < 0:
        raise ValueError("--n-max must be >= 0")
    values = compute(args.family, params, args.method, args.n_max)
    meta = {"family": args.family, "params": params, "method": args.method}
    print(format_values(values, args.format, args.offset, meta))
    return 0


@dataclass
class GridCell:
    params: dict
    values: dict = field(default_factory=dict)  # method -> list or None


def _grid(args) -> list[dict]:
    if args.family == "fbar":
        cells = [{"m": m} for m in range(1, args.m_max + 1)]
        return cells
    out = []
    for k in range(1, args.k_max + 1):
        for ell in range(1, args.l_max + 1):
            if args.family == "q":
                out.append({"k": k, "l": ell})
            else:
                out.extend({"k": k, "l": ell, "r": r} for r in range(1, ell + 1))
    return out


def _methods(args) -> list[str]:
    available = list(METHODS[args.family])
    if args.methods in (None, "all"):
        return available
    chosen = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in chosen if m not in available]
    if unknown:
        raise ValueError(f"unknown methods for {args.family}: {', '.join(unknown)}")
    return chosen


def _parse_extra(text: Optional[str]) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for item in text.split(","):
        m, n = item.split(":")
        out.append((int(m), int(n)))
    return out


def cmd_crosscheck(args) -> int:
    methods = _methods(args)
    jobs = [(cell, args.n_max) for cell in _grid(args)]
    if args.family == "fbar":
        jobs += [({"m": m}, n) for m, n in _parse_extra(args.extra)]

    header = "params".ljust(22) + " n  " + " ".join(f"{m:>12}" for m in methods)
    print(header)
    first_bad = None
    for params, n_max in jobs:
        results = {}
        for method in methods:
            try:
                results[method] = compute(args.family, params, method, n_max)
            except NotApplicable:
                results[method] = None
        ref_method = next((m for m in methods if results[m] is not None), None)
        ps = ",".join(f"{k}={v}" for k, v in params.items())
        for n in range(n_max + 1):
            if args.family == "fbar" and n_max != args.n_max and n != n_max:
                continue
            ref = results[ref_method][n] if ref_method else None
            marks = []
            for method in methods:
                vals = results[method]
                if vals is None:
                    marks.append("-")
                elif vals[n] == ref:
                    marks.append("ok")
                else:
                    marks.append("MISMATCH")
                    if first_bad is None:
                        first_bad = (params, n, method, vals[n], ref_method, ref)
            print(f"{ps:22} {n:>2}  " + " ".join(f"{mk:>12}" for mk in marks) + f"   {ref}")
    if first_bad:
        params, n, method, got, ref_method, ref = first_bad
        ps = ",".join(f"{k}={v}" for k, v in params.items())
        print(
            f"first mismatch: family={args.family} {ps} n={n}: "
            f"{method}={got} but {ref_method}={ref}"
        )
        return 1
    print("all methods agree")
    return 0


def _tutte_checks(max_len: int) -> list[CheckResult]:
    words = [p for length in range(max_len + 1) for p in paths.all_words(length)]
    bad = next((p for p in words if not tutte.verify_append_recursion(p)), None)
    out = [
        CheckResult(
            "tutte-append-recursion",
            {"max_len": max_len},
            "pass" if bad is None else "fail",
            detail=f"{len(words)} paths" if bad is None else f"fails at {bad.steps or '(empty)'}",
        )
    ]
    bad = next(
        (
            p
            for p in words
            if tutte.tutte_polynomial(p).evaluate(1, 1)
            != paths.count_weakly_below(p, p.endpoint)
        ),
        None,
    )
    out.append(
        CheckResult(
            "tutte-count",
            {"max_len": max_len},
            "pass" if bad is None else "fail",
            detail=f"{len(words)} paths" if bad is None else f"fails at {bad.steps or '(empty)'}",
        )
    )
    return out


def _bijection_checks(m_max: int, samples: int, seed: int) -> list[CheckResult]:
    out = []
    for m in range(1, m_max + 1):
        if m <= 6:
            wall_sets = tableaux.all_wall_sets(m)
        else:
            wall_sets = tableaux.random_wall_sets(m, samples, seed)
        bad = None
        for walls in wall_sets:
            rep = tableaux.bijection_counts(tableaux.YoungBuilding(m, walls))
            if not rep.ok:
                bad = rep
                break
        detail = (
            f"{len(wall_sets)} wall sets"
            if bad is None
            else f"S={sorted(bad.building.walls)}: {bad.tableaux}/{bad.paths}/{bad.partitions}"
        )
        out.append(CheckResult("bijection", {"m": m}, "pass" if bad is None else "fail", detail=detail))
    return out


def cmd_identities(args) -> int:
    groups = [args.only] if args.only else ["genfun", "lemmas", "tutte", "bijection"]
    results: list[CheckResult] = []
    for group in groups:
        if group == "genfun":
            for k in range(1, args.k_max + 1):
                for ell in range(1, args.l_max + 1):
                    results.extend(genfun.identity_suite(k, ell, args.order))
        elif group == "lemmas":
            results.extend(genfun.binomial_lemma_checks(args.bound))
        elif group == "tutte":
            results.extend(_tutte_checks(args.max_len))
        elif group == "bijection":
            results.extend(_bijection_checks(args.m, args.samples, args.seed))
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)} passed/skipped, {len(failed)} failed")
    return 1 if failed else 0


def cmd_tableaux(args) -> int:
    if args.walls is not None:
        walls = {int(w) for w in args.walls.split(",") if w.strip()}
        building = tableaux.YoungBuilding(args.m, frozenset(walls))
    else:
        building = tableaux.periodic_building(args.m, args.n)
    found = tableaux.enumerate_tableaux(building)
    for t in found:
        print(tableaux.render(t))
        print(f"path {tableaux.tableau_path(t).compact()}  mu {reverse_str(t)}")
        print()
    print(f"{len(found)} tableaux")
    return 0


def reverse_str(t) -> str:
    return "(" + ",".join(map(str, tableaux.reverse_partition(t))) + ")"


def cmd_tutte(args) -> int:
    p = paths.LatticePath.parse(args.path)
    print(tutte.tutte_polynomial(p))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wallcount",
        description="Exact counts of Young tableaux with walls and staircase lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--family", choices=FAMILIES, required=True)
        p.add_argument("-m", type=int)
        p.add_argument("-k", type=int)
        p.add_argument("-l", type=int)
        p.add_argument("-r", type=int)

    seq = sub.add_parser("sequence", help="print a(0..n_max) for one family and method")
    family_args(seq)
    seq.add_argument("--n-max", type=int, required=True)
    seq.add_argument("--method", default="genfun")
    seq.add_argument("--format", choices=("bfile", "json", "table"), default="bfile")
    seq.add_argument("--offset", type=int, default=0, help="index of the first term (default 0)")
    seq.set_defaults(func=cmd_sequence)

    cc = sub.add_parser("crosscheck", help="compare every method over a parameter grid")
    cc.add_argument("--family", choices=FAMILIES, required=True)
    cc.add_argument("--m-max", type=int, default=3)
    cc.add_argument("--k-max", type=int, default=3)
    cc.add_argument("--l-max", type=int, default=3)
    cc.add_argument("--n-max", type=int, default=3)
    cc.add_argument("--methods", default="all", help="comma list or 'all'")
    cc.add_argument("--extra", help="extra fbar cells as m:n pairs, e.g. 4:2")
    cc.set_defaults(func=cmd_crosscheck)

    ids = sub.add_parser("identities", help="run the identity checks")
    ids.add_argument("--only", choices=("genfun", "lemmas", "tutte", "bijection"))
    ids.add_argument("--k-max", type=int, default=3)
    ids.add_argument("--l-max", type=int, default=3)
    ids.add_argument("--order", type=int, default=6)
    ids.add_argument("--bound", type=int, default=8)
    ids.add_argument("--max-len", type=int, default=8)
    ids.add_argument("-m", type=int, default=5, help="largest tableau width for bijection checks")
    ids.add_argument("--samples", type=int, default=20, help="random wall sets per width above 6")
    ids.add_argument("--seed", type=int, default=0)
    ids.set_defaults(func=cmd_identities)

    tab = sub.add_parser("tableaux", help="list the tableaux of a building")
    tab.add_argument("-m", type=int, required=True)
    tab.add_argument("-n", type=int, default=1, help="number of periodic blocks")
    tab.add_argument("--walls", help="explicit wall columns, e.g. 2,3 (overrides -n)")
    tab.set_defaults(func=cmd_tableaux)

    tp = sub.add_parser("tutte", help="Tutte polynomial of a boundary path")
    tp.add_argument("--path", required=True, help="path literal such as N3E2N")
    tp.set_defaults(func=cmd_tutte)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
