"""Command-line interface: generate, verify, kappa, landau, draw, tracks, lcf."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .. import cayley, cube, johnson, landau, perm
from ..graphs import AbelianGroup, graph_from_params, read_edge_list
from ..verify import (
    SearchBudgetExceeded,
    WordShapeError,
    balance_stats,
    cycle_compression,
    kappa_exact,
    lcf,
    track_count,
    validate_cycle,
)
from .formats import dumps_text, json_number, read_cycle, write_cycle, cycle_to_dict
from .svg import render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CONSTRUCTIONS = {
    "hypercube": ("optimal", "brgc", "t-track"),
    "johnson": ("auto", "coprime", "general"),
    "middle_levels": ("search", "m7"),
    "permutahedron": ("best", "sjt", "pin"),
    "permutahedron_plus": ("one-track",),
    "cayley": ("auto", "boustrophedon", "comp2", "odd"),
}


class UsageError(Exception):
    pass


def _paint(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _ints(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _parse_gens(text: str) -> list:
    """'(1,0),(0,1)' or '1,0;0,1' -> [(1,0),(0,1)]."""
    t = text.replace(" ", "")
    if "(" in t:
        chunks = [c.strip("(),") for c in t.split(")") if c.strip("(),")]
    else:
        chunks = [c for c in t.split(";") if c]
    if not chunks:
        raise UsageError("no generators given")
    return [tuple(_ints(c)) for c in chunks]


def _need(params, count, family):
    if len(params) != count:
        raise UsageError(f"{family} takes {count} integer parameter(s), got {len(params)}")
    return params


def _build(args):
    fam = args.family
    if fam not in CONSTRUCTIONS:
        raise UsageError(f"unknown family {fam!r}; choose from {', '.join(CONSTRUCTIONS)}")
    con = args.construction or CONSTRUCTIONS[fam][0]
    if con not in CONSTRUCTIONS[fam]:
        raise UsageError(f"unknown construction {con!r} for {fam}; choose from {', '.join(CONSTRUCTIONS[fam])}")
    p = args.params
    if fam == "hypercube":
        if con == "t-track":
            (n,) = _need(p, 1, fam)
            if not args.parts:
                raise UsageError("t-track needs --parts, e.g. --parts 2,1")
            return cube.t_track_cycle(n, _ints(args.parts))
        (n,) = _need(p, 1, fam)
        return cube.brgc(n) if con == "brgc" else cube.optimal_cube_cycle(n)
    if fam == "johnson":
        n, k = _need(p, 2, fam)
        if con == "coprime" or (con == "auto" and math.gcd(n, k) == 1):
            return johnson.coprime_cycle(n, k)
        return johnson.general_cycle(n, k)
    if fam == "middle_levels":
        (n,) = _need(p, 1, fam)
        if con == "m7":
            if n != 3:
                raise UsageError("the m7 construction is for n = 3 (M_7)")
            return johnson.middle_levels_cycle(3, johnson.m7_automorphism())
        return johnson.middle_levels_cycle(n)
    if fam == "permutahedron":
        if con == "pin":
            if not args.parts:
                raise UsageError("pin needs --parts, e.g. --parts 5,3,1")
            parts = _ints(args.parts)
            if p and p != [sum(parts)]:
                raise UsageError("parts must sum to n")
            return perm.pin_cycle(parts)
        (n,) = _need(p, 1, fam)
        return perm.sjt(n) if con == "sjt" else perm.best_perm_cycle(n)
    if fam == "permutahedron_plus":
        (n,) = _need(p, 1, fam)
        return perm.plus_one_track(n)
    if fam == "cayley":
        if not args.group or not args.gens:
            raise UsageError("cayley needs --group (e.g. Z3xZ5) and --gens (e.g. '(1,0),(0,1)')")
        G = AbelianGroup.parse(args.group)
        S = _parse_gens(args.gens)
        if con == "boustrophedon":
            return cayley.abelian_ham_cycle(G, S)
        if con == "comp2" or (con == "auto" and G.size % 2 == 0):
            return cayley.comp2_cycle(G, S)
        res = cayley.odd_order_classify(G, S)
        print(f"odd-order status: {res.status} (bound {res.bound})", file=sys.stderr)
        return res.cycle
    raise UsageError(f"unknown family {fam!r}")


def _report(c, fmt: str) -> dict:
    rep = validate_cycle(c)
    out = {"valid": rep.ok, "vertices": len(c), "construction": c.construction, "claimed_k": c.claimed_k}
    if not rep.ok:
        out.update({"break_index": rep.index, "reason": rep.reason})
        return out
    out["compression"] = cycle_compression(c)
    out["claim_ok"] = c.claimed_k is None or out["compression"] >= c.claimed_k
    return out


def _emit(data, fmt: str):
    if fmt == "json":
        print(json.dumps(data, default=str))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")


def cmd_generate(args) -> int:
    c = _build(args)
    if args.output:
        write_cycle(c, args.output, args.format)
        rep = _report(c, args.format)
        _emit(rep, "text" if args.format == "text" else "json")
        return EXIT_OK if rep["valid"] and rep.get("claim_ok", False) else EXIT_FAIL
    if args.format == "text":
        sys.stdout.write(dumps_text(c))
    else:
        print(json.dumps(cycle_to_dict(c)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        c = read_cycle(args.file)
    except WordShapeError as exc:
        _emit({"valid": False, "break_index": exc.index, "reason": str(exc)}, args.format)
        if args.format == "text":
            print(_paint("FAIL", "31"))
        return EXIT_FAIL
    rep = _report(c, args.format)
    _emit(rep, args.format)
    ok = rep["valid"] and rep.get("claim_ok", False)
    if args.format == "text":
        print(_paint("PASS", "32") if ok else _paint("FAIL", "31"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_kappa(args) -> int:
    if args.graph_file:
        g = read_edge_list(args.graph_file)
    else:
        if not args.family:
            raise UsageError("kappa needs a family with parameters or --graph-file")
        fam, p = args.family, args.params
        names = {"hypercube": ["n"], "johnson": ["n", "k"], "middle_levels": ["n"], "permutahedron": ["n"],
                 "permutahedron_plus": ["n"]}
        if fam == "cayley":
            if not args.group or not args.gens:
                raise UsageError("cayley needs --group and --gens")
            G = AbelianGroup.parse(args.group)
            g = graph_from_params("cayley", {"orders": list(G.orders), "gens": _parse_gens(args.gens)})
        elif fam in names:
            g = graph_from_params(fam, dict(zip(names[fam], _need(p, len(names[fam]), fam))))
        else:
            raise UsageError(f"unknown family {fam!r}")
    r = kappa_exact(g, budget=args.budget, seconds=args.seconds)
    data = {"graph": repr(g), "kappa": r.kappa, "upper": r.upper, "exact": r.exact,
            "log": [f"{k}: {msg}" for k, msg in r.log]}
    _emit(data, args.format)
    return EXIT_OK


def cmd_landau(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be positive")
    rows = []
    for n in range(1, args.max + 1):
        a, b, c = landau.landau(n), landau.landau0(n), landau.landau2(n)
        rows.append({"n": n, "lambda": json_number(a.value), "lambda_witness": str(a.witness),
                     "lambda0": json_number(b.value), "lambda0_witness": str(b.witness),
                     "lambda2": json_number(c.value) if c.defined else None,
                     "lambda2_witness": str(c.witness) if c.defined else None})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("n\tlambda\tlambda0\tlambda2\tlcm(lambda)\tlcm(lambda0)\tlcm(lambda2)")
        for r in rows:
            l2 = "-" if r["lambda2"] is None else r["lambda2"]
            w2 = "-" if r["lambda2_witness"] is None else r["lambda2_witness"]
            print(f"{r['n']}\t{r['lambda']}\t{r['lambda0']}\t{l2}\t{r['lambda_witness']}\t{r['lambda0_witness']}\t{w2}")
    return EXIT_OK


def cmd_draw(args) -> int:
    c = read_cycle(args.file)
    rep = validate_cycle(c)
    if not rep.ok:
        print(f"invalid cycle: {rep.reason} at index {rep.index}", file=sys.stderr)
        return EXIT_FAIL
    mode = "graph" if args.graph else "rings"
    with open(args.output, "w") as fh:
        fh.write(render(c, mode))
    return EXIT_OK


def cmd_tracks(args) -> int:
    c = read_cycle(args.file)
    rep = validate_cycle(c)
    if not rep.ok:
        print(f"invalid cycle: {rep.reason} at index {rep.index}", file=sys.stderr)
        return EXIT_FAIL
    t = track_count(c)
    b = balance_stats(c)
    _emit({"tracks": t.count, "classes": t.classes, "balance": b.kind, "counts": b.counts,
           "balanced": b.balanced}, args.format)
    return EXIT_OK


def cmd_lcf(args) -> int:
    c = read_cycle(args.file)
    rep = validate_cycle(c)
    if not rep.ok:
        print(f"invalid cycle: {rep.reason} at index {rep.index}", file=sys.stderr)
        return EXIT_FAIL
    a = lcf(c)
    _emit({"period": a.period, "lcf": a.compact(), "cubic": a.cubic}, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamcomp", description="Symmetric Hamilton cycles and Hamilton compression.")
    ap.add_argument("--seed", type=int, default=None, help="accepted for compatibility; constructions are deterministic")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("generate", help="build a symmetric Hamilton cycle")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--construction")
    p.add_argument("--parts", help="block sizes for t-track or pin, e.g. 5,3,1")
    p.add_argument("--group")
    p.add_argument("--gens")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="validate a cycle file and compute its compression")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kappa", help="Hamilton compression by exhaustive lifted search")
    p.add_argument("family", nargs="?")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--graph-file")
    p.add_argument("--group")
    p.add_argument("--gens")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--seconds", type=float, default=None)
    common(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("landau", help="Landau function tables")
    p.add_argument("--max", type=int, default=20)
    common(p)
    p.set_defaults(func=cmd_landau)

    p = sub.add_parser("draw", help="SVG drawing of a cycle")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--rings", action="store_true")
    mode.add_argument("--graph", action="store_true")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("tracks", help="track count and balance of a cycle")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_tracks)

    p = sub.add_parser("lcf", help="LCF distance sets of a cycle")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_lcf)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchBudgetExceeded, RuntimeError) as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
