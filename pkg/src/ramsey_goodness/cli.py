"""Command-line front door.

Exit codes: 0 success / arrows, 1 not_arrows or a failed check, 2 undecided,
3 bad input, 4 capacity exceeded, 5 invariant failure, 64 unparsable graph.
Results go to stdout (or ``-o``); logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .arrowing import TwoColoring, arrows, default_budget, verify_certificate
from .constructions import build_extremal, validate_extremal
from .errors import CapacityError, InputError, InvariantFailure, ParseError, Undecided
from .graph_io import parse_graph, to_graph6
from .proof import extract
from .sweeps import LEMMA_SUITES, sweep_verify
from .thresholds import GoodnessParams

log = logging.getLogger("ramsey_goodness")

EXIT_OK, EXIT_NEGATIVE, EXIT_UNDECIDED = 0, 1, 2
EXIT_INPUT, EXIT_CAPACITY, EXIT_INVARIANT, EXIT_PARSE = 3, 4, 5, 64


def _read_graph_text(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source) as fh:
            return fh.read()
    return source


def _load_graph(source):
    return parse_graph(_read_graph_text(source))


def _parse_edges(text: str) -> list[tuple[int, int]]:
    """``"0-1,1-2"`` or whitespace/semicolon separated ``"0 1; 1 2"`` pairs."""
    text = text.strip()
    if not text:
        return []
    out = []
    if "-" in text:
        for item in text.replace(";", ",").split(","):
            item = item.strip()
            if item:
                u, v = item.split("-")
                out.append((int(u), int(v)))
        return out
    nums = [int(x) for x in text.replace(";", " ").replace(",", " ").split()]
    if len(nums) % 2:
        raise ParseError("edge list has an odd number of endpoints")
    return list(zip(nums[::2], nums[1::2]))


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _header(args, **extra) -> dict:
    return {"command": args.command, "seed": getattr(args, "seed", None), "budget": args.budget, **extra}


class _Out:
    def __init__(self, path: str | None):
        self.path = path
        self.chunks: list[str] = []

    def write(self, text: str):
        self.chunks.append(text if text.endswith("\n") else text + "\n")

    def json(self, obj):
        self.write(json.dumps(obj))

    def close(self):
        data = "".join(self.chunks)
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)
            sys.stdout.flush()


# -- subcommands ---------------------------------------------------------------------


def cmd_threshold(args, out: _Out) -> int:
    p = GoodnessParams.for_order(args.r, args.t, args.n)
    row = p.as_dict()
    if args.format == "json":
        out.json({"run": _header(args), **row})
    else:
        out.write(f"# seed={args.seed} budget={args.budget}")
        out.write("r t n k x M threshold window")
        lo, hi = row["window"]
        out.write(f"{p.r} {p.t} {p.n} {p.k} {p.x} {p.M} {row['threshold']} ({lo},{hi}]")
        out.write(f"k={p.k} x={p.x} M={p.M} threshold={row['threshold']}")
    return EXIT_OK


def cmd_arrows(args, out: _Out) -> int:
    g = _load_graph(args.graph)
    try:
        cert = arrows(g, args.r, args.t, budget=args.budget, threads=args.threads)
    except Undecided as exc:
        out.json({"run": _header(args), "r": args.r, "t": args.t, "graph6": to_graph6(g),
                  "verdict": "undecided", "stats": {"nodes": exc.nodes}})
        return EXIT_UNDECIDED
    body = {"run": _header(args), **cert.to_dict()}
    if args.verify:
        body["verified"] = verify_certificate(cert, budget=args.budget)
    out.json(body)
    return EXIT_OK if cert.arrows else EXIT_NEGATIVE


def cmd_construct(args, out: _Out) -> int:
    e = build_extremal(args.r, args.t, args.k)
    body = {"run": _header(args), **e.sidecar()}
    ok = True
    if args.verify:
        rep = validate_extremal(e)
        body["validation"] = rep.as_dict()
        ok = rep.passed
    if args.output:
        # -o names a prefix: <prefix>.g6 plus a JSON sidecar
        with open(args.output + ".g6", "w") as fh:
            fh.write(to_graph6(e.graph) + "\n")
        with open(args.output + ".json", "w") as fh:
            fh.write(json.dumps(body) + "\n")
        log.info("wrote %s.g6 and %s.json", args.output, args.output)
    else:
        out.json(body)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_witness(args, out: _Out) -> int:
    g = _load_graph(args.graph)
    if args.blue_file:
        with open(args.blue_file) as fh:
            blue_text = fh.read()
    else:
        blue_text = args.blue or ""
    c = TwoColoring(g, frozenset(_parse_edges(blue_text)))
    ex = extract(g, c, args.r, args.t)
    ok = ex.witness.verify(c, args.r, args.t)
    body = {"run": _header(args), **ex.witness.as_dict(), "verified": ok,
            "step": ex.step, "depth": ex.depth, "frames": [f.as_dict() for f in ex.frames]}
    out.json(body)
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_sweep(args, out: _Out) -> int:
    if args.mode == "sample" and args.seed is None:
        raise InputError("--seed is mandatory in sample mode")
    ns = _parse_range(args.n)
    out.json({"run": _header(args, r=args.r, t=args.t, k=args.k, n=args.n, mode=args.mode,
                             count=args.count if args.mode == "sample" else None)})
    all_ok = True
    undecided = False
    for n in ns:
        res = sweep_verify(args.r, args.t, args.k, n, args.mode, count=args.count, seed=args.seed,
                           threads=args.threads, budget=args.budget, timings=args.timings)
        for line in res.lines:
            out.json(line)
        out.json(res.summary)
        log.info("n=%d: %d hosts, %d counterexamples, %d undecided", n, res.summary["count"],
                 res.summary["counterexamples"], res.summary["undecided"])
        all_ok &= res.summary["counterexamples"] == 0
        undecided |= res.summary["undecided"] > 0
    if not all_ok:
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED if undecided else EXIT_OK


def cmd_lemma(args, out: _Out) -> int:
    kwargs = {}
    if args.lemma == "path-length":
        kwargs = {"n_max": args.exhaustive_n, "trials": args.trials or 0, "seed": args.seed or 0}
        if args.k is not None:
            kwargs["ks"] = (args.k,)
    elif args.lemma == "erdos-gallai":
        kwargs = {"n_max": args.exhaustive_n}
    elif args.lemma == "partition":
        kwargs = {"n_max": args.exhaustive_n}
        if args.d is not None:
            kwargs["ds"] = (args.d,)
    elif args.lemma == "brooks":
        kwargs = {"trials": 1000 if args.trials is None else args.trials,
                  "seed": 7 if args.seed is None else args.seed}
    rep = LEMMA_SUITES[args.lemma](**kwargs)
    out.json({"run": _header(args, lemma=args.lemma, **kwargs), **rep.as_dict()})
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


# -- parser --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is reserved for "undecided"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="64-bit RNG seed")
    common.add_argument("--budget", type=int, default=None,
                        help="search node cap (default: RGL_BUDGET or 2^24)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-o", "--output", default=None, help="write results here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress on stderr")

    ap = _Parser(prog="rgl", description="Ramsey goodness lab for G -> (K_r, P_t).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("threshold", parents=[common], help="print k, x, M and the degree threshold")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_threshold, default_format="text")

    p = sub.add_parser("arrows", parents=[common], help="decide G -> (K_r, P_t)")
    p.add_argument("graph", nargs="?", help="graph6 string, edge-list text, file path, or - for stdin")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="re-check the certificate")
    p.set_defaults(func=cmd_arrows)

    p = sub.add_parser("construct", parents=[common], help="build the tightness construction")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("witness", parents=[common], help="extract a red K_r or blue P_t")
    p.add_argument("graph", nargs="?")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--blue", default=None, help='blue edges, e.g. "0-1,1-2"')
    p.add_argument("--blue-file", default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sweep", parents=[common], help="check every threshold host arrows")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--n", required=True, help="order or inclusive range like 4..6")
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--timings", action="store_true", help="add per-host seconds (breaks byte identity)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemma", parents=[common], help="run a lemma property suite")
    p.add_argument("lemma", choices=sorted(LEMMA_SUITES))
    p.add_argument("--exhaustive-n", type=int, default=8)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_lemma)
    return ap


def _error(message: str) -> None:
    # errors always reach stderr, whatever the logging configuration
    print(f"rgl: error: {message}", file=sys.stderr)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    if args.budget is None:
        args.budget = default_budget()
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    out = _Out(args.output if args.command != "construct" else None)
    try:
        code = args.func(args, out)
    except ParseError as exc:
        _error(f"parse error: {exc}")
        return EXIT_PARSE
    except CapacityError as exc:
        _error(f"capacity: {exc}")
        return EXIT_CAPACITY
    except InvariantFailure as exc:
        _error(str(exc))
        print(json.dumps({"run": _header(args), "error": str(exc), "instance": exc.instance},
                         default=list), file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, ValueError) as exc:
        _error(str(exc))
        return EXIT_INPUT
    out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
