"""``maxline`` command line.

Exit codes: 0 success or true verdict, 1 false verdict (``check``/``iso``),
2 usage or input error, 3 verification result contradicting the closed form.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import digraph, extremal, io, line, recognition
from .enumeration import Mode, verify_max
from .errors import BoundViolated, MaxlineError, NotLineDigraph
from .iso import are_isomorphic

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3

_MODES = {"exhaustive": Mode.EXHAUSTIVE, "bnb": Mode.BRANCH_AND_BOUND,
          "branch_and_bound": Mode.BRANCH_AND_BOUND}


def _read(path: str) -> digraph.Digraph:
    if path == "-":
        return io.parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return io.parse_edge_list(fh.read())


def _cmd_gen(args):
    if args.family == "o":
        G = extremal.gen_o(args.m)
        if args.transpose:
            G = digraph.transpose(G)
    elif args.family == "extremal-line":
        G = extremal.gen_max_line(args.m)
    else:
        G = extremal.gen_star(extremal.StarSpec(args.x, args.y, args.c))
    sys.stdout.write(io.emit(G, args.format))
    return EXIT_OK


def _cmd_line(args):
    L = line.line_digraph(_read(args.file))
    table = [f"# {i} = {t} {h}" for i, (t, h) in enumerate(L.labels)]
    sys.stdout.write("\n".join(["# line vertex = root arc"] + table) + "\n")
    sys.stdout.write(io.emit(L.graph, args.format))
    return EXIT_OK


def _cmd_phi(args):
    print(line.phi(_read(args.file)))
    return EXIT_OK


def _cmd_max_arcs(args):
    print(line.max_arcs(args.m))
    return EXIT_OK


def _cmd_check(args):
    verdict = recognition.is_line_digraph(_read(args.file))
    print("line digraph" if verdict.is_line else "not a line digraph")
    if args.witness and verdict.witness is not None:
        print(verdict.witness)
    return EXIT_OK if verdict.is_line else EXIT_FALSE


def _cmd_root(args):
    G = recognition.reconstruct_root(_read(args.file))
    sys.stdout.write(io.emit(G, args.format))
    return EXIT_OK


def _cmd_iso(args):
    same = are_isomorphic(_read(args.file_a), _read(args.file_b))
    print("isomorphic" if same else "not isomorphic")
    return EXIT_OK if same else EXIT_FALSE


def _cmd_verify(args):
    report = verify_max(args.m, _MODES[args.mode], jobs=args.jobs)
    data = report.to_dict()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(data, indent=2) + "\n")
    # wall time varies run to run, so keep it off stdout
    elapsed = data.pop("elapsed_seconds")
    sys.stdout.write(json.dumps(data, indent=2) + "\n")
    print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    if not report.success:
        print(f"verification mismatch at m={args.m}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("edges", "dot"), default="edges")
        return p

    gen = sub.add_parser("gen", help="emit a generated digraph")
    families = gen.add_subparsers(dest="family", required=True)
    o = with_format(families.add_parser("o", help="extremal root with m arcs"))
    o.add_argument("m", type=int)
    o.add_argument("--transpose", action="store_true")
    ext = with_format(families.add_parser("extremal-line", help="maximum line digraph on m vertices"))
    ext.add_argument("m", type=int)
    star = with_format(families.add_parser("star", help="star with x in-arcs, y out-arcs, c 2-circuits"))
    for name in ("x", "y", "c"):
        star.add_argument(name, type=int)
    gen.set_defaults(func=_cmd_gen)

    p = with_format(sub.add_parser("line", help="line digraph with its label table"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_line)

    p = sub.add_parser("phi", help="number of arcs of the line digraph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("max-arcs", help="maximum arc count of a line digraph on m vertices")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_max_arcs)

    p = sub.add_parser("check", help="line digraph recognition")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = with_format(sub.add_parser("root", help="reconstruct a root digraph"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_root)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_iso)

    verify = sub.add_parser("verify", help="machine verification")
    what = verify.add_subparsers(dest="what", required=True)
    p = what.add_parser("max", help="maximum phi and optimal classes for m arcs")
    p.add_argument("m", type=int)
    p.add_argument("--mode", choices=sorted(_MODES), default="exhaustive")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BoundViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except NotLineDigraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MaxlineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
