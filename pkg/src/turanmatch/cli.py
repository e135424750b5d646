"""Command-line entry point.

Subcommands: shift, nu, cover, count, extremal, scan, verify.  Output is a
single decimal, an edge-list graph, or CSV (comma delimiter, LF endings,
header row).  Exit codes: 0 success or verification pass, 1 verification
failure, 2 usage, I/O, or parse error (one-line diagnostic on stderr).

All randomness flows from --seed (default 0) through Python's Mersenne
Twister (random.Random), so runs replay exactly across machines.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, extremal, matching, oracle, shifting
from .errors import ParseError
from .graph import (
    BipartiteGraph,
    parse_bipartite,
    parse_graph,
    serialize_graph,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostics, exit 2
        self.exit(2, f"error: {message}\n")


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_shift(args) -> int:
    g = parse_graph(_read(args.input))
    if args.full:
        if args.i is not None or args.j is not None:
            return _fail("--full excludes --i/--j")
        result = shifting.compress(g)
    else:
        if args.i is None or args.j is None:
            return _fail("need --i and --j, or --full")
        result = shifting.shift_graph(g, args.i, args.j)
    sys.stdout.write(serialize_graph(result))
    return 0


def _cmd_nu(args) -> int:
    g = parse_graph(_read(args.input))
    print(matching.matching_number(g))
    return 0


def _cmd_cover(args) -> int:
    try:
        nx, ny = (int(p) for p in args.bipartite.split(","))
    except ValueError:
        return _fail("--bipartite expects nx,ny")
    g = parse_graph(_read(args.input))
    if g.n != nx + ny:
        return _fail(f"file has {g.n} vertices, parts declare {nx}+{ny}")
    rows = [0] * nx
    for e in g.edges():
        if e.u <= nx < e.v:
            rows[e.u - 1] |= 1 << (e.v - nx - 1)
        else:
            return _fail(f"edge ({e.u}, {e.v}) is not across the declared parts")
    xs, ys = matching.koenig_cover(BipartiteGraph(nx, ny, rows))
    out = ["vertex"]
    out.extend(str(x) for x in xs)
    out.extend(f"Y:{y}" for y in ys)
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def _cmd_count(args) -> int:
    kind, _, rest = args.pattern.partition(":")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        params = None
    if kind == "clique" and params is not None and len(params) == 1:
        g = parse_graph(_read(args.input))
        print(counting.count_cliques(g, params[0]))
    elif kind == "star" and params is not None and len(params) == 2:
        g = parse_graph(_read(args.input))
        print(counting.count_star(g, params[0], params[1]))
    elif kind == "bip" and params is not None and len(params) == 2:
        bg = parse_bipartite(_read(args.input))
        print(counting.count_bip(bg, params[0], params[1]))
    else:
        return _fail("--pattern expects clique:S, star:S,T or bip:S,T")
    return 0


def _cmd_extremal(args) -> int:
    need = {"edges": (), "clique": ("s",), "star": ("s", "t"), "bip": ("s", "t")}
    for flag in need[args.family]:
        if getattr(args, flag) is None:
            return _fail(f"extremal {args.family} requires --{flag}")
    if args.family == "edges":
        print(extremal.ex_edges(args.n, args.k))
    elif args.family == "clique":
        print(extremal.ex_clique(args.n, args.k, args.s))
    elif args.family == "star":
        print(extremal.ex_star(args.n, args.k, args.s, args.t))
    else:
        print(extremal.ex_bip(args.n, args.k, args.s, args.t))
    return 0


def _cmd_scan(args) -> int:
    rows = ["param,value"]
    if args.family == "H-clique":
        for ell in range(args.k + 1, 2 * args.k + 2):
            rows.append(f"{ell},{extremal.extremal_clique_count(args.n, args.k, ell, args.s)}")
    elif args.family == "H-star":
        if args.t is None:
            return _fail("scan --family H-star requires --t")
        for ell in range(args.k + 1, 2 * args.k + 2):
            rows.append(f"{ell},{extremal.extremal_star_count(args.n, args.k, ell, args.s, args.t)}")
    else:  # bip-f
        if args.t is None:
            return _fail("scan --family bip-f requires --t")
        for x in range(args.k + 1):
            rows.append(f"{x},{extremal.bip_split_count(args.n, args.k, x, args.s, args.t)}")
    sys.stdout.write("\n".join(rows) + "\n")
    return 0


def _require_flags(args, *flags) -> str | None:
    missing = [f for f in flags if getattr(args, f) is None]
    if missing:
        return f"verify {args.check} requires " + " ".join(f"--{f}" for f in missing)
    return None


def _cmd_verify(args) -> int:
    check = args.check
    if check in ("lemma21", "lemma22"):
        msg = _require_flags(args, "n")
        if msg:
            return _fail(msg)
        include = ("edges", "matching") if check == "lemma21" else ("edges", "cliques", "stars")
        checks = oracle.verify_shift_lemmas(
            args.n, samples=args.samples, edge_prob=args.prob, seed=args.seed, include=include
        )
    elif check == "lemma31":
        msg = _require_flags(args, "n")
        if msg:
            return _fail(msg)
        checks = oracle.verify_bondy_chvatal(args.n)
    elif check == "lemma32":
        msg = _require_flags(args, "n", "k")
        if msg:
            return _fail(msg)
        checks = oracle.verify_shifted_structure(args.n, args.k)
    elif check == "koenig":
        msg = _require_flags(args, "n", "k")
        if msg:
            return _fail(msg)
        checks = oracle.verify_koenig_gstar(args.n, args.n, args.k)
    elif check == "thm11":
        msg = _require_flags(args, "n", "k")
        if msg:
            return _fail(msg)
        witness = oracle.max_over_free(args.n, args.k, 2, jobs=args.jobs)
        expected = extremal.ex_edges(args.n, args.k)
        checks = [_agreement_check("max-edges-vs-formula", witness, expected)]
    elif check == "thm12":
        msg = _require_flags(args, "n", "k", "s")
        if msg:
            return _fail(msg)
        witness = oracle.max_over_free(args.n, args.k, args.s, jobs=args.jobs)
        expected = extremal.ex_clique(args.n, args.k, args.s)
        checks = [_agreement_check("max-cliques-vs-formula", witness, expected)]
    elif check == "thm13":
        msg = _require_flags(args, "n", "k", "s", "t")
        if msg:
            return _fail(msg)
        witness = oracle.max_over_free(args.n, args.k, args.s, args.t, jobs=args.jobs)
        expected = extremal.ex_star(args.n, args.k, args.s, args.t)
        checks = [_agreement_check("max-stars-vs-formula", witness, expected)]
    else:  # thm14
        msg = _require_flags(args, "n", "k", "s", "t")
        if msg:
            return _fail(msg)
        witness = oracle.max_over_free_bip(args.n, args.n, args.k, args.s, args.t, jobs=args.jobs)
        expected = extremal.ex_bip(args.n, args.k, args.s, args.t)
        checks = [_agreement_check("max-bicliques-vs-formula", witness, expected)]

    if args.csv:
        lines = ["check,cases,violations,seed,status"]
        for ch in checks:
            seed = "" if ch.seed is None else str(ch.seed)
            status = "pass" if ch.ok else "fail"
            lines.append(f"{ch.name},{ch.cases},{len(ch.violations)},{seed},{status}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        for ch in checks:
            status = "PASS" if ch.ok else "FAIL"
            seed = "" if ch.seed is None else f" seed={ch.seed}"
            print(f"{status} {ch.name} cases={ch.cases} violations={len(ch.violations)}{seed}")
            for v in ch.violations:
                print(f"  {v}")
    return 0 if all(ch.ok for ch in checks) else 1


def _agreement_check(name: str, witness, expected: int) -> oracle.Check:
    if witness.value == expected:
        return oracle.Check(name, 1, ())
    detail = (
        f"oracle={witness.value} formula={expected} "
        f"witness={_witness_text(witness.graph)}"
    )
    return oracle.Check(name, 1, (detail,))


def _witness_text(graph) -> str:
    if isinstance(graph, BipartiteGraph):
        return f"X={graph.nx},Y={graph.ny},E={graph.edges()}"
    return f"n={graph.n},E={[tuple(e) for e in graph.edges()]}"


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="turanmatch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("shift", help="apply one shift or compress to a fixpoint")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--i", type=int, help="shift target (smaller label)")
    p.add_argument("--j", type=int, help="shift source (larger label)")
    p.add_argument("--full", action="store_true", help="compress to a shifted fixpoint")
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("nu", help="exact matching number")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_nu)

    p = sub.add_parser("cover", help="minimum vertex cover of a bipartite graph")
    p.add_argument("--input", required=True, help="edge-list file with X then Y labels")
    p.add_argument("--bipartite", required=True, metavar="NX,NY",
                   help="part sizes; X = 1..nx, Y = nx+1..nx+ny")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("count", help="exact pattern count")
    p.add_argument("--input", required=True)
    p.add_argument("--pattern", required=True, help="clique:S | star:S,T | bip:S,T")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("extremal", help="closed-form extremal value")
    p.add_argument("family", choices=["clique", "star", "bip", "edges"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("scan", help="CSV sweep of a construction-count family")
    p.add_argument("--family", choices=["H-clique", "H-star", "bip-f"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="brute-force verification of a structural law")
    p.add_argument("check", choices=[
        "lemma21", "lemma22", "lemma31", "lemma32", "koenig",
        "thm11", "thm12", "thm13", "thm14",
    ])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="random instances instead of exhaustion")
    p.add_argument("--prob", type=float, default=0.5, help="edge probability for random mode")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for oracle scans")
    p.add_argument("--csv", action="store_true", help="machine-readable one-line-per-check output")
    p.set_defaults(func=_cmd_verify)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(f"parse: {exc}")
    except OSError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
