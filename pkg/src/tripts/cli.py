"""``tripts`` command line.

Exit codes: 0 success, 1 an asserted check failed, 2 usage error,
3 unreadable or invalid input (bad file, duplicate or non-general-position points).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis
from .augment import augment, transfer_matching, verify_augmented
from .generators import GeneratorError, random_general_position, three_connected_family, tight_family
from .geometry import GeneralPositionError
from .graphs import FLAVORS, build
from .io import FormatError, format_graph, format_kv, format_points, read_points
from .matching import check_nishizeki, max_matching
from .render import render_svg

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.random:
        if args.n is None:
            raise _Usage("--random needs -n")
        ps = random_general_position(args.n, args.seed, args.resolution)
    else:
        if args.m is None:
            raise _Usage("--tight/--three-connected need -m")
        ps = tight_family(args.m) if args.tight else three_connected_family(args.m)
    _emit(format_points(ps), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    ps = read_points(args.points)
    rep = analysis.analyze(ps, checks=args.checks, oracle=args.oracle, generator=Path(args.points).name)
    g = build(ps, args.flavor)
    text = rep.to_text() + f"{args.flavor}: edges={len(g.edges)} matching={max_matching(g).size}\n"
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(rep.to_kv())
    return EXIT_OK if rep.ok else EXIT_CHECK


def cmd_match(args) -> int:
    ps = read_points(args.points)
    g = build(ps, args.flavor)
    m = max_matching(g)
    lines = [("flavor", args.flavor), ("n", len(ps)), ("edges", len(g.edges)), ("matching", m.size)]
    lines += [("pair", f"{u} {v}") for u, v in sorted(m.edges)]
    _emit(format_kv(lines), args.output)
    if args.graph_out:
        Path(args.graph_out).write_text(format_graph(g, args.flavor))
    return EXIT_OK


def cmd_augment(args) -> int:
    ps = read_points(args.points)
    g = build(ps, "down")
    a = augment(g)
    r = verify_augmented(a)
    mp = max_matching(a.graph)
    transferred = transfer_matching(a, mp)
    nr = check_nishizeki(a.graph, strict=False, planar=r.checks["planar"])
    ok = r.ok and nr.holds and nr.preconditions_ok and transferred.size >= mp.size - len(a.added_vertices)
    pairs = [
        ("n", a.base.n), ("k", a.k), ("added", len(a.added_vertices)), ("n_prime", a.n_prime),
        ("added_edges", len(a.added_edges)),
    ]
    pairs += [(name, int(v)) for name, v in r.checks.items()]
    pairs += [
        ("matching_prime", mp.size), ("matching_transferred", transferred.size),
        ("nishizeki_case", nr.case), ("nishizeki_bound", nr.bound), ("nishizeki_holds", int(nr.holds)),
        ("status", "PASS" if ok else "FAIL"),
    ]
    _emit(format_kv(pairs), args.output)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_conjecture(args) -> int:
    rep = analysis.conjecture_search(args.trials, args.n_min, args.n_max, args.seed, args.dump_dir)
    text = rep.to_kv() + "".join(f"counterexample=t{t} n={n} seed={s}\n" for t, n, s in rep.counterexamples)
    _emit(text, args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    ps = read_points(args.points)
    g = build(ps, args.flavor)
    m = max_matching(g).edges if not args.no_matching else ()
    tris = sorted(g.edges) if args.show_triangles else ()
    orientation = "up" if args.flavor == "up" else "down"
    _emit(render_svg(ps, g.edges, m, tris, orientation), args.output)
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tripts", description="Empty equilateral-triangle graphs and their matchings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a points file")
    which = g.add_mutually_exclusive_group(required=True)
    which.add_argument("--random", action="store_true")
    which.add_argument("--tight", action="store_true")
    which.add_argument("--three-connected", action="store_true")
    g.add_argument("-n", type=int)
    g.add_argument("-m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--resolution", type=int, default=1 << 12)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="run the structural and matching checks")
    a.add_argument("points")
    a.add_argument("--checks", default="all", help=f"comma list from: {', '.join(analysis.CHECKS)} (or 'all')")
    a.add_argument("--oracle", choices=("on", "off", "auto"), default="auto")
    a.add_argument("--flavor", choices=FLAVORS, default="down")
    a.add_argument("-o", "--output", help="write the key=value report here")
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("match", help="maximum matching of one graph flavor")
    m.add_argument("points")
    m.add_argument("--flavor", choices=FLAVORS, default="down")
    m.add_argument("--graph-out", help="also write the edge list")
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_match)

    au = sub.add_parser("augment", help="augment G_down and verify the result")
    au.add_argument("points")
    au.add_argument("-o", "--output")
    au.set_defaults(func=cmd_augment)

    c = sub.add_parser("conjecture-search", help="floor(n/2) matching sweep on the union graph")
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--n-min", type=int, default=4)
    c.add_argument("--n-max", type=int, default=40)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--dump-dir")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_conjecture)

    r = sub.add_parser("render", help="SVG drawing with the maximum matching in thick strokes")
    r.add_argument("points")
    r.add_argument("--flavor", choices=FLAVORS, default="down")
    r.add_argument("--show-triangles", action="store_true")
    r.add_argument("--no-matching", action="store_true")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "checks", None) is not None and args.command == "analyze":
            try:
                analysis._resolve_checks(args.checks)
            except ValueError as exc:
                raise _Usage(str(exc)) from exc
        return args.func(args)
    except _Usage as exc:
        print(f"tripts: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, GeneralPositionError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"tripts: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeneratorError as exc:
        print(f"tripts: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
