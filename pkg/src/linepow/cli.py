"""Command-line entry point: ``linepow {construct,analyze,bounds,search,verify-h33}``.

Exit codes: 0 success, 1 assertion/verification failure, 2 usage error,
3 resource cap.  Reports go to stdout, logs to stderr.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import os
import sys
import time
from fractions import Fraction

from . import __version__
from . import families
from .bounds import BOUNDS, evaluate, omega_upper_general, tree_edges
from .clique import chi_line_power_upper, omega_line_power
from .formats import FORMATS, FormatError, decode, encode
from .graph import CapExceeded, EdgeRef, GraphError, contains_cycle_length, diameter, girth
from .metrics import EdgeUniverse, line_diameter

SCHEMA = "linepow-report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("linepow")


class UsageError(Exception):
    pass


def jsonable(x):
    """Exact JSON: Fractions become ``"p/q"``, infinities ``"inf"``; no floats."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        if x.is_integer():
            return int(x)
        return str(Fraction(x).limit_denominator(10 ** 6))
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if hasattr(x, "item"):
        return jsonable(x.item())
    raise TypeError(f"cannot serialise {type(x).__name__}")


def report(subcommand, params, results, started, inputs=None) -> dict:
    return {
        "schema": SCHEMA,
        "subcommand": subcommand,
        "parameters": jsonable(params),
        "results": jsonable(results),
        "timings": {"wall_ms": int((time.perf_counter() - started) * 1000)},
        "version": __version__,
        "input_hashes": inputs or {},
    }


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _status(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return word
    return f"\033[{32 if ok else 31}m{word}\033[0m"


def read_graph(path, fmt="auto"):
    data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
    return decode(data, fmt), hashlib.sha256(data).hexdigest()


def summary(g) -> dict:
    return {"n": g.n, "m": g.num_edges, "delta": g.max_degree, "girth": girth(g)}


# construct ----------------------------------------------------------------

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.family} needs --{name.replace('_', '-')}")


def build(args):
    f = args.family
    if f == "pg2":
        _need(args, "q")
        return families.pg2_incidence(args.q)
    if f == "w-quadrangle":
        _need(args, "q")
        return families.w_incidence(args.q)
    if f == "heawood":
        return families.heawood()
    if f in ("tree", "tree1"):
        _need(args, "k", "delta")
        return (families.tree_T if f == "tree" else families.tree_T1)(args.k, args.delta)
    if f == "kdd":
        _need(args, "delta")
        return families.complete_bipartite(args.delta, args.delta)
    if f == "c5blowup":
        _need(args, "delta")
        return families.c5_blowup(args.delta)
    if f == "figure2":
        return families.figure2_graph()
    if f in ("subdivide", "multiedge-augment"):
        _need(args, "input")
        g, _ = read_graph(args.input, args.input_format)
        if f == "multiedge-augment":
            _need(args, "v")
            return families.multiedge_augment(g, args.v)
        e = None
        if args.edge:
            try:
                u, v = sorted(int(x) for x in args.edge.split(","))
            except ValueError:
                raise UsageError("--edge expects U,V") from None
            e = EdgeRef(u, v, 0)
        return families.subdivided(g, e)
    raise UsageError(f"unknown family {f}")


def cmd_construct(args) -> int:
    started = time.perf_counter()
    g = build(args)
    data = encode(g, args.format)
    if not data.endswith(b"\n"):
        data += b"\n"
    info = summary(g)
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            fh.write(data)
        if args.json:
            _emit(report("construct", vars_of(args), info, started))
        else:
            print(_summary_line(args.family, info))
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        sys.stderr.write(_summary_line(args.family, info) + "\n")
    return EXIT_OK


def _summary_line(name, info):
    gi = info["girth"]
    gi = "inf" if gi == math.inf else int(gi)
    return f"{name}: n={info['n']} m={info['m']} delta={info['delta']} girth={gi}"


# analyze ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    started = time.perf_counter()
    g, digest = read_graph(args.input, args.format)
    t = args.t
    want_all = not (args.omega or args.chi or args.diameter or args.check_thm5)
    res = summary(g)
    res["t"] = t
    ok = True
    checks = []
    uni = EdgeUniverse(g)
    if args.diameter or want_all:
        res["diameter"] = diameter(g) if g.n else 0
        res["line_diameter"] = line_diameter(uni) if uni.m else 0
    if args.omega or args.check_thm5 or want_all:
        cert = omega_line_power(uni, t, budget=args.budget)
        res["omega_t"] = cert.size
        res["omega_exact"] = cert.exact
        res["omega_witness"] = cert.trace["edges"]
        if not cert.exact:
            log.warning("clique search budget exhausted; omega is a lower bound")
        delta = g.max_degree
        if delta >= 1:
            env = omega_upper_general(t, delta)
            checks.append({"bound": "omega_upper_general", "value": env, "holds": cert.size <= env})
        if t >= 2 and delta >= 2 and g.is_simple() and not contains_cycle_length(g, 2 * t + 1):
            te = tree_edges(t, delta)
            checks.append({"bound": "tree_edges", "value": te, "holds": cert.size <= te,
                           "slack": te - cert.size})
        res["checks"] = checks
        ok = all(c["holds"] for c in checks)
        if not cert.exact:
            res["status"] = "budget"
    if args.chi:
        if uni.m:
            col = chi_line_power_upper(uni, t)
            res["chi_upper"] = col.count
    res["status"] = res.get("status", "ok" if ok else "violation")
    if args.json:
        _emit(report("analyze", vars_of(args), res, started, {args.input: digest}))
    else:
        for k in ("n", "m", "delta", "girth", "diameter", "line_diameter", "omega_t", "chi_upper"):
            if k in res:
                print(f"{k}={jsonable(res[k])}")
        for c in checks:
            extra = f" slack {c['slack']}" if "slack" in c else ""
            print(f"{c['bound']}: {res['omega_t']} <= {jsonable(c['value'])} {_status(c['holds'])}{extra}")
    if not ok:
        return EXIT_FAIL
    if res["status"] == "budget":
        return EXIT_CAP
    return EXIT_OK


# bounds -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    started = time.perf_counter()
    if args.list or not args.eval:
        rows = [{"name": k, "params": list(p), "formula": f} for k, (_, p, f) in BOUNDS.items()]
        if args.json:
            _emit(report("bounds", {"list": True}, rows, started))
        else:
            for r in rows:
                print(f"{r['name']}({', '.join(r['params'])}): {r['formula']}")
        return EXIT_OK
    name, *raw = args.eval
    try:
        values = [int(x) for x in raw]
    except ValueError:
        raise UsageError("bound arguments must be integers") from None
    try:
        rep = evaluate(name, *values)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.json:
        _emit(report("bounds", {"eval": name, "args": values},
                     {"name": rep.name, "params": rep.params, "value": rep.value, "formula": rep.notes[0]},
                     started))
    else:
        print(jsonable(rep.value))
    return EXIT_OK


# search -------------------------------------------------------------------

def cmd_search(args) -> int:
    from .search import SearchConfig, SearchError, max_edges_strong

    started = time.perf_counter()
    cfg = SearchConfig(delta=args.delta, t=args.t, vertex_cap=args.vertex_cap,
                       edge_target=args.edge_target, min_girth=args.girth_min or 0,
                       regular=args.regular, multigraph=args.multigraph,
                       threads=args.threads, checkpoint=args.checkpoint,
                       node_budget=args.node_budget)
    try:
        res = max_edges_strong(cfg)
    except SearchError as exc:
        raise UsageError(str(exc)) from None
    payload = res.payload()
    payload.pop("graphs")
    if args.json:
        _emit(report("search", cfg.result_fields(), payload, started))
    else:
        print(f"best {res.best}")
        print(f"exhaustive {str(res.exhaustive).lower()}")
        print(f"nodes {res.nodes}")
        for w in res.witnesses:
            print(f"witness n={w['n']} m={w['m']} {w['sparse6']}")
    return EXIT_OK if res.exhaustive else EXIT_CAP


def cmd_verify_h33(args) -> int:
    from .search.h33 import H33Failure, verify_h33

    started = time.perf_counter()
    try:
        res = verify_h33(extended=not args.quick, threads=args.threads, checkpoint=args.checkpoint)
    except H33Failure as exc:
        if args.json:
            _emit(report("verify-h33", {"quick": args.quick}, {"certificate": "FAIL", "step": exc.step,
                                                                "error": str(exc)}, started))
        else:
            print(f"verify-h33 {_status(False)}: {exc}")
        return EXIT_FAIL
    if args.json:
        payload = res.payload()
        payload.pop("graphs")
        payload["certificate"] = "PASS"
        _emit(report("verify-h33", {"quick": args.quick}, payload, started))
    else:
        d = res.details
        print(f"(a) subdivided Heawood: {d['a']['edges']} edges, line diameter {d['a']['line_diameter']}")
        print(f"(b) cubic girth>=6 on 16 vertices: {d['b']['graphs']} graph(s), 0 strong")
        print(f"(c) subdivisions of cubic girth>=6 on 14 vertices: {d['c']['subdivisions']} class(es), "
              f"{d['c']['strong']} strong, all isomorphic to (a)")
        print("(d) configuration bounds: " + ", ".join(f"{k}={v}" for k, v in d["d"]["bounds"].items()))
        if "e" in d:
            print("(e) residual cases: " + ", ".join(f"{k}={v}" for k, v in d["e"].items()))
        print(f"verify-h33 {_status(True)}: max edges with line diameter <= 3 at max degree 3 is 22")
    return EXIT_OK


# parser -------------------------------------------------------------------

CONSTRUCT_FAMILIES = ("pg2", "w-quadrangle", "heawood", "tree", "tree1", "kdd", "c5blowup",
                      "figure2", "subdivide", "multiedge-augment")


def vars_of(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "config", "verbose")}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linepow", description=__doc__.splitlines()[0],
                                allow_abbrev=False)
    p.add_argument("--version", action="version", version=f"linepow {__version__}")
    p.add_argument("--config", help="key=value file whose entries act as default flags")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph family")
    c.add_argument("family", choices=CONSTRUCT_FAMILIES)
    c.add_argument("--q", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--delta", type=int)
    c.add_argument("--v", "--vertex", dest="v", type=int, help="vertex for multiedge-augment")
    c.add_argument("--edge", help="U,V edge for subdivide (default: least edge)")
    c.add_argument("--input", help="input graph for subdivide/multiedge-augment ('-' for stdin)")
    c.add_argument("--input-format", default="auto", choices=("auto",) + FORMATS)
    c.add_argument("--format", default="sparse6", choices=FORMATS)
    c.add_argument("--out", help="output path (default stdout)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="line-graph power metrics of a graph file")
    a.add_argument("input", help="graph file or '-' for stdin")
    a.add_argument("--t", type=int, required=True)
    a.add_argument("--format", default="auto", choices=("auto",) + FORMATS)
    a.add_argument("--omega", action="store_true")
    a.add_argument("--chi", action="store_true")
    a.add_argument("--diameter", action="store_true")
    a.add_argument("--check-thm5", action="store_true", help="check omega against 3/2 delta^t")
    a.add_argument("--budget", type=int, default=10 ** 7)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="closed-form bounds")
    b.add_argument("--list", action="store_true")
    b.add_argument("--eval", nargs="+", metavar=("NAME", "ARG"))
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("search", help="exhaustive max-edge search with line diameter <= t")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--t", type=int, default=2)
    s.add_argument("--vertex-cap", type=int, default=12)
    s.add_argument("--edge-target", type=int)
    s.add_argument("--girth-min", type=int, default=0)
    s.add_argument("--regular", action="store_true")
    s.add_argument("--multigraph", action="store_true")
    s.add_argument("--checkpoint")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--node-budget", type=int, default=5_000_000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    h = sub.add_parser("verify-h33", help="run the max-degree-3, t=3 certificate pipeline")
    h.add_argument("--quick", action="store_true", help="skip the residual-case enumerations")
    h.add_argument("--threads", type=int, default=1)
    h.add_argument("--checkpoint")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_verify_h33)
    return p


def read_config(path) -> list:
    """``key = value`` lines (``#`` comments) turned into ``--key value`` flags."""
    flags = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            flag = "--" + key.replace("_", "-")
            low = value.lower().strip('"')
            if low in ("true", "yes", "on"):
                flags.append(flag)
            elif low in ("false", "no", "off"):
                continue
            else:
                flags += [flag, value.strip('"')]
    return flags


def _merge_config(argv):
    """Splice config-file flags ahead of the command line so explicit flags win."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return argv
    extra = read_config(known.config)
    cmd_at = next((i for i, a in enumerate(argv) if a in _COMMANDS), None)
    if cmd_at is None:
        return argv
    return argv[:cmd_at + 1] + _positionals_first(argv[cmd_at + 1:]) + extra + _flags_after(argv[cmd_at + 1:])


_COMMANDS = ("construct", "analyze", "bounds", "search", "verify-h33")


def _positionals_first(rest):
    out = []
    for a in rest:
        if a.startswith("-") and a != "-":
            break
        out.append(a)
    return out


def _flags_after(rest):
    return rest[len(_positionals_first(rest)):]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _merge_config(argv)
    except (OSError, UsageError) as exc:
        sys.stderr.write(f"linepow: {exc}\n")
        return EXIT_USAGE
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CapExceeded as exc:
        sys.stderr.write(f"linepow: resource cap: {exc}\n")
        return EXIT_CAP
    except AssertionError as exc:
        sys.stderr.write(f"linepow: assertion failed: {exc}\n")
        return EXIT_FAIL
    except (UsageError, FormatError, GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"linepow: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
