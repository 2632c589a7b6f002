"""Command-line front end.

Every subcommand writes deterministic bytes for a fixed argv and seed; CSV
outputs start with '#' manifest comment lines recording the tool version,
the command line and input digests, so a result file can be replayed.
Exit codes: 0 success (or all bounds consistent), 2 a violation was found,
1 usage or runtime error.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .bounds import (
    BOUNDS,
    CONJECTURES,
    VIOLATION,
    hunt,
    run_suite,
    verify_bound,
)
from .chromatic import chromatic_polynomial, chromatic_roots, explore_roots
from .counting import class_count_series, class_spec
from .flowcut import cut_pair, cut_tree, maxmaxflow
from .graph import GraphFormatError, WeightedMultigraph, generate
from .invariants import inequality_chain


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}")


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}")


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _load_graph(path: str) -> tuple[WeightedMultigraph, str]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return WeightedMultigraph.parse(text), text


def _manifest(args, extra: Optional[dict] = None) -> list[str]:
    lines = [f"# maxmaxflow {__version__}", f"# command: {' '.join(sys.argv[1:])}"]
    for key, val in (extra or {}).items():
        lines.append(f"# {key}: {val}")
    return lines


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _emit(lines: list[str], out: Optional[str]):
    data = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(data)
    else:
        sys.stdout.write(data)


def build_parser() -> _Parser:
    p = _Parser(prog="maxmaxflow", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def graph_arg(sp):
        sp.add_argument("graph", help="graph file in the text format, or - for stdin")

    sp = sub.add_parser("invariants", help="degree/peeling invariants and the comparison chain")
    graph_arg(sp)
    sp.add_argument("--cap", type=int, default=10, help="brute-force cap for LambdaTilde and D_2")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("lambda", help="maxmaxflow of the graph")
    graph_arg(sp)

    sp = sub.add_parser("ghtree", help="cut tree with min-cut edge weights")
    graph_arg(sp)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("cutpair", help="two disjoint bounded cuts separating members of a set")
    graph_arg(sp)
    sp.add_argument("--set", dest="xset", type=_vertex_list, required=True)

    sp = sub.add_parser("count", help="series of a walk family or subgraph class")
    graph_arg(sp)
    sp.add_argument("--class", dest="kind", required=True,
                    help="W|FPW|SAW|FPSAW|T|F|H|C|BT|BF|BFSTAR|B|BLOCKPATH")
    sp.add_argument("--x", type=_vertex_list, default=None)
    sp.add_argument("--y", type=_vertex_list, default=None)
    sp.add_argument("-m", "--m", dest="M", type=int, required=True)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--cap", type=int, default=None, help="work cap override")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("verify", help="check one series bound")
    graph_arg(sp)
    sp.add_argument("--bound", required=True, help=f"one of {', '.join(sorted(BOUNDS))}")
    sp.add_argument("--x", type=_vertex_list, default=None)
    sp.add_argument("--y", type=_vertex_list, default=None)
    sp.add_argument("--edge", type=int, default=None, help="edge id for through-edge bounds")
    sp.add_argument("-m", "--m", dest="M", type=int, required=True)
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--alpha", type=_frac, default=Fraction(2))
    sp.add_argument("--cap", type=int, default=None)

    sp = sub.add_parser("suite", help="run every applicable bound")
    graph_arg(sp)
    sp.add_argument("--x", type=_vertex_list, default=None)
    sp.add_argument("--y", type=_vertex_list, default=None)
    sp.add_argument("--edge", type=int, default=None)
    sp.add_argument("-m", "--m", dest="M", type=int, required=True)
    sp.add_argument("--alpha", type=_frac, default=Fraction(2))
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("hunt", help="seeded random search for conjecture violations")
    sp.add_argument("--conjecture", required=True, help=f"one of {', '.join(CONJECTURES)}")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-m", "--m", dest="M", type=int, default=4)
    sp.add_argument("--jobs", type=int, default=1, help="accepted for interface parity; runs serial")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("chromatic", help="chromatic polynomial and roots")
    graph_arg(sp)
    sp.add_argument("--cap", type=int, default=14)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("explore8", help="chromatic roots vs maxmaxflow on random graphs")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--nmax", type=int, default=12)
    sp.add_argument("--jobs", type=int, default=1, help="accepted for interface parity; runs serial")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("generate", help="write a member of a named graph family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--p", type=float)
    sp.add_argument("--weight", type=_frac)
    sp.add_argument("--total", type=_frac)
    sp.add_argument("--seed", type=int)
    sp.add_argument("-o", "--output")
    return p


def _cmd_invariants(args) -> int:
    g, text = _load_graph(args.graph)
    rep = inequality_chain(g, brute_cap=args.cap)
    lines = _manifest(args, {"input-sha256": _digest(text)})
    lines.append("name,value")
    lines.append(f"n,{rep.n}")
    lines.append(f"m,{rep.m}")
    for name, val in [
        ("Delta", rep.Delta), ("Delta2", rep.Delta2),
        ("Delta_{n-1}", rep.Delta_n_minus_1), ("D", rep.D), ("D2", rep.D2),
        ("Lambda", rep.Lambda), ("LambdaTilde", rep.LambdaTilde),
    ]:
        lines.append(f"{name},{_fmt(val) if val is not None else 'n/a'}")
    for c in rep.checks:
        lines.append(f"check:{c.name},{'ok' if c.holds else 'FAIL'}")
    _emit(lines, args.output)
    return 0 if rep.all_hold else 2


def _cmd_lambda(args) -> int:
    g, _ = _load_graph(args.graph)
    print(_fmt(maxmaxflow(g)))
    return 0


def _cmd_ghtree(args) -> int:
    g, text = _load_graph(args.graph)
    tree = cut_tree(g)
    lines = _manifest(args, {"input-sha256": _digest(text)})
    lines.append(f"v {g.n}")
    for u, v, w in sorted(tree.edges):
        lines.append(f"e {u} {v} {_fmt(w)}")
    _emit(lines, args.output)
    return 0


def _cmd_cutpair(args) -> int:
    g, _ = _load_graph(args.graph)
    cp = cut_pair(g, args.xset)
    lam = maxmaxflow(g)
    for xi, side, w in [(cp.x1, cp.side1, cp.weight1), (cp.x2, cp.side2, cp.weight2)]:
        vs = ",".join(str(v) for v in sorted(side))
        print(f"x={xi} side={{{vs}}} cutweight={_fmt(w)} Lambda={_fmt(lam)}")
    return 0


def _cmd_count(args) -> int:
    g, text = _load_graph(args.graph)
    kind = args.kind.upper()
    kw: dict = {}
    if kind in ("W", "SAW"):
        kw = {"x": args.x[0], "y": args.y[0]}
    elif kind in ("FPW", "FPSAW"):
        kw = {"x": args.x[0], "Y": frozenset(args.y)}
    elif kind == "BLOCKPATH":
        kw = {"x": args.x[0], "y": args.y[0]}
    else:
        if args.x:
            kw["X"] = frozenset(args.x)
        if args.y:
            kw["Y"] = frozenset(args.y)
        if args.p is not None:
            kw["p"] = args.p
        if args.r is not None:
            kw["r"] = args.r
    series = class_count_series(g, class_spec(kind, **kw), args.M, args.cap)
    lines = _manifest(args, {"input-sha256": _digest(text)})
    lines.append("m,value")
    for m, val in enumerate(series.values):
        lines.append(f"{m},{_fmt(val)}")
    _emit(lines, args.output)
    return 0


def _result_row(res) -> str:
    return ",".join([
        res.bound_id, res.verdict, str(res.M),
        _fmt(res.lhs_lo), _fmt(res.lhs_hi), _fmt(res.rhs_lo), _fmt(res.rhs_hi),
        res.note.replace(",", ";"),
    ])


def _cmd_verify(args) -> int:
    g, _ = _load_graph(args.graph)
    res = verify_bound(
        g, args.bound, args.M,
        X=args.x, Y=args.y,
        x=args.x[0] if args.x else None,
        y=args.y[0] if args.y else None,
        eid=args.edge, p=args.p, r=args.r, alpha=args.alpha, cap=args.cap,
    )
    print("bound,verdict,M,lhs_lo,lhs_hi,rhs_lo,rhs_hi,note")
    print(_result_row(res))
    return 2 if res.verdict == VIOLATION else 0


def _cmd_suite(args) -> int:
    g, text = _load_graph(args.graph)
    results = run_suite(
        g, args.M, X=args.x, Y=args.y,
        x=args.x[0] if args.x else None,
        y=args.y[0] if args.y else None,
        eid=args.edge, alpha=args.alpha, cap=args.cap,
    )
    lines = _manifest(args, {"input-sha256": _digest(text)})
    lines.append("bound,verdict,M,lhs_lo,lhs_hi,rhs_lo,rhs_hi,note")
    for res in results:
        lines.append(_result_row(res))
    _emit(lines, args.output)
    return 2 if any(r.verdict == VIOLATION for r in results) else 0


def _cmd_hunt(args) -> int:
    findings = hunt(
        args.conjecture, args.trials, M=args.M, seed=args.seed, cap=args.cap
    )
    lines = _manifest(args, {"seed": args.seed, "trials": args.trials})
    lines.append("conjecture,trial,family,verdict,ratio,lhs_hi,rhs_lo,X,Y,graph")
    for f in findings:
        graph_inline = f.graph_text.replace("\n", ";")
        xs = " ".join(map(str, f.X))
        ys = " ".join(map(str, f.Y))
        lines.append(
            f"{f.conjecture},{f.trial},{f.family},{f.verdict},"
            f"{_fmt(f.ratio)},{_fmt(f.lhs_hi)},{_fmt(f.rhs_lo)},{xs},{ys},{graph_inline}"
        )
    _emit(lines, args.output)
    return 2 if any(f.verdict == VIOLATION for f in findings) else 0


def _cmd_chromatic(args) -> int:
    g, text = _load_graph(args.graph)
    poly = chromatic_polynomial(g, cap=args.cap)
    roots = chromatic_roots(poly)
    lines = _manifest(args, {"input-sha256": _digest(text)})
    lines.append("coefficients," + " ".join(str(c) for c in poly))
    for z in roots:
        lines.append(f"root,{z.real:.12g},{z.imag:.12g}")
    _emit(lines, args.output)
    return 0


def _cmd_explore8(args) -> int:
    records = explore_roots(args.trials, seed=args.seed, n_max=args.nmax)
    lines = _manifest(args, {"seed": args.seed, "trials": args.trials})
    lines.append("trial,n,m,Lambda,Delta,Delta2,max_root_abs,max_root_re,max_root_im")
    for rec in records:
        lines.append(
            f"{rec.trial},{rec.n},{rec.m},{_fmt(rec.Lambda)},{_fmt(rec.Delta)},"
            f"{_fmt(rec.Delta2)},{rec.max_root_abs:.10g},"
            f"{rec.max_root.real:.10g},{rec.max_root.imag:.10g}"
        )
    _emit(lines, args.output)
    return 0


def _cmd_generate(args) -> int:
    params = {
        k: v
        for k, v in vars(args).items()
        if k in ("n", "r", "s", "depth", "p", "weight", "total", "seed") and v is not None
    }
    g = generate(args.family, **params)
    data = g.serialize()
    if args.output:
        Path(args.output).write_text(data)
    else:
        sys.stdout.write(data)
    return 0


_DISPATCH = {
    "invariants": _cmd_invariants,
    "lambda": _cmd_lambda,
    "ghtree": _cmd_ghtree,
    "cutpair": _cmd_cutpair,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "suite": _cmd_suite,
    "hunt": _cmd_hunt,
    "chromatic": _cmd_chromatic,
    "explore8": _cmd_explore8,
    "generate": _cmd_generate,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
