"""Command-line front end.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error,
3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import config
from .canon import canonical_form
from .constructions import (
    AttachmentSpec,
    build_family_member,
    csat_family,
    ehm_graph,
    k24_extremal_family,
    k33_extremal,
    parse_base,
    theorem4_construction,
)
from .errors import CapacityError, SatlabError
from .formulas import FAMILIES, evaluate
from .graph import Graph
from .graph6 import decode, encode, read_graph6
from .saturation import ALL, CONNECTED, check_saturation, saturation_search
from .structure import K2T_CONNECTED, K2T_DISCONNECTED, K33_CONNECTED, K33_DISCONNECTED, structural_audit
from .verification import FAIL, THEOREMS, run_task
from .virus import VirusPattern

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(SatlabError):
    pass


def parse_range(text: str) -> list[int]:
    """``"7"``, ``"6..8"`` or ``"6,8,10"``."""
    text = text.strip()
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if lo > hi:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",") if x]


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x != "")


# -- DOT ----------------------------------------------------------------------

_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def parse_dot(text: str) -> list[Graph]:
    """Read undirected graphs in the plain ``u -- v;`` form written by ``Graph.to_dot``."""
    graphs = []
    edges, top, inside = [], -1, False
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if not inside:
            if s.startswith("graph") and s.endswith("{"):
                edges, top, inside = [], -1, True
                continue
            raise UsageError(f"unexpected DOT line {line!r}")
        if s == "}":
            graphs.append(Graph(top + 1, edges))
            inside = False
            continue
        m = _DOT_EDGE.match(s)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            edges.append((u, v))
            top = max(top, u, v)
            continue
        m = _DOT_NODE.match(s)
        if m:
            top = max(top, int(m.group(1)))
            continue
        raise UsageError(f"unsupported DOT line {line!r}")
    if inside:
        raise UsageError("unterminated DOT graph")
    return graphs


def _emit(graphs: Sequence[Graph], fmt: str, out) -> None:
    for g in graphs:
        if fmt == "dot":
            out.write(g.to_dot())
            if not g.to_dot().endswith("\n"):
                out.write("\n")
        else:
            out.write(encode(g) + "\n")


def _open_input(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


# -- commands -------------------------------------------------------------------

def cmd_build(args) -> int:
    fam = args.family
    require_connected = False
    if fam == "ehm":
        graphs, pattern = [ehm_graph(args.n, args.alpha)], VirusPattern(0, args.alpha)
    elif fam == "member":
        base = parse_base(args.base)
        p = _ints(args.p) if args.p else (0,) * base.n
        q = _ints(args.q) if args.q else (0,) * base.n
        graphs = [build_family_member(AttachmentSpec(base, args.t, p, q))]
        pattern = VirusPattern(2, args.t)
    elif fam == "thm4":
        graphs, pattern = [theorem4_construction(args.n, args.t)], VirusPattern(2, args.t)
    elif fam == "k33":
        graphs, pattern = [k33_extremal(args.n, args.variant)], VirusPattern(3, 3)
    elif fam == "thm2":
        graphs, pattern = list(k24_extremal_family(args.n).values()), VirusPattern(2, 4)
    elif fam == "csat":
        graphs, pattern = csat_family(args.n, args.t), VirusPattern(2, args.t)
        require_connected = True
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam!r}")
    _emit(graphs, args.format, sys.stdout)
    if args.check:
        for g in graphs:
            verdict = check_saturation(g, pattern, require_connected)
            if not verdict.is_saturated:
                print(f"check failed: {encode(g)} is not {pattern}-saturated", file=sys.stderr)
                return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    pattern = VirusPattern.parse(args.virus)
    ns = parse_range(args.n)
    graphs = None
    if args.input:
        with _open_input(args.input) as fh:
            graphs = list(read_graph6(fh))
    status = EXIT_OK
    for n in ns:
        report = saturation_search(n, pattern, mode=args.mode, jobs=args.jobs, graphs=graphs)
        print(report.to_json(stable=args.stable))
        if args.expect is not None and report.sat_value != args.expect:
            print(f"sat_value {report.sat_value} != expected {args.expect} at n={n}", file=sys.stderr)
            status = EXIT_FAIL
    return status


def cmd_verify(args) -> int:
    ns = parse_range(args.n) if args.n else None
    status = EXIT_OK
    for theorem in args.theorem:
        report = run_task(theorem, ns, args.t, jobs=args.jobs)
        print(report.to_json(stable=args.stable))
        if report.status == FAIL:
            status = EXIT_FAIL
    return status


def cmd_formula(args) -> int:
    params = {k: v for k, v in (("n", args.n), ("t", args.t), ("alpha", args.alpha)) if v is not None}
    try:
        result = evaluate(args.family, **params)
    except KeyError as exc:
        raise UsageError(f"{args.family} needs --{exc.args[0]}") from None
    if args.json:
        print(json.dumps(result.to_dict()))
    else:
        print(result.value)
    return EXIT_OK


def cmd_convert(args) -> int:
    with _open_input(args.input) as fh:
        text = fh.read()
    if args.source == "graph6":
        graphs = [decode(line) for line in text.splitlines() if line.strip() and not line.startswith(">>")]
    else:
        graphs = parse_dot(text)
    if args.to == "canonical":
        for g in graphs:
            print(canonical_form(g))
    else:
        _emit(graphs, args.to, sys.stdout)
    return EXIT_OK


_CONTEXTS = {
    "K33_CONNECTED": lambda t: K33_CONNECTED,
    "K33_DISCONNECTED": lambda t: K33_DISCONNECTED,
    "K2T_CONNECTED": K2T_CONNECTED,
    "K2T_DISCONNECTED": K2T_DISCONNECTED,
}


def cmd_audit(args) -> int:
    ctx = _CONTEXTS[args.context](args.t)
    status = EXIT_OK
    with _open_input(args.input) as fh:
        for g in read_graph6(fh):
            audit = structural_audit(g, ctx)
            record = {"graph": encode(g), **audit.to_dict()}
            print(json.dumps(record))
            if not audit.passed:
                status = EXIT_FAIL
    return status


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="satlab", description="Saturation numbers of virus graphs K^s_t.")
    ap.add_argument("--max-n", type=int, default=None, help="exhaustive enumeration limit (default 9)")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="print an extremal construction")
    b.add_argument("family", choices=["ehm", "member", "thm4", "k33", "thm2", "csat"])
    b.add_argument("--n", type=int)
    b.add_argument("--t", type=int, default=4)
    b.add_argument("--alpha", type=int)
    b.add_argument("--base", default="K2", help="base identifier, K<r> or K<a>vK1x<b>")
    b.add_argument("--p", help="comma-separated K_{t-1} counts per base vertex")
    b.add_argument("--q", help="comma-separated K_t counts per base vertex")
    b.add_argument("--variant", choices=["odd", "even", "pendant"])
    b.add_argument("--format", choices=["graph6", "dot"], default="graph6")
    b.add_argument("--check", action="store_true", help="also verify saturation")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("search", help="exhaustive minimum saturation search")
    s.add_argument("--n", required=True, help="order, or a range a..b (one JSON line per order)")
    s.add_argument("--virus", required=True, help="pattern as s,t")
    s.add_argument("--mode", choices=[ALL, CONNECTED], default=ALL)
    s.add_argument("--input", help="graph6 file to scan instead of enumerating ('-' for stdin)")
    s.add_argument("--expect", type=int, help="exit 1 unless sat_value equals this")
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--stable", action="store_true", help="omit timings from the JSON")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="run a theorem verification task")
    v.add_argument("--theorem", required=True, action="append", choices=THEOREMS)
    v.add_argument("--n", help="order range a..b")
    v.add_argument("--t", type=int)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--stable", action="store_true")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formula", help="evaluate a closed-form saturation number")
    f.add_argument("family", choices=FAMILIES)
    f.add_argument("--n", type=int)
    f.add_argument("--t", type=int)
    f.add_argument("--alpha", type=int)
    f.add_argument("--json", action="store_true", help="print the value with its branch")
    f.set_defaults(func=cmd_formula)

    c = sub.add_parser("convert", help="convert between graph6 and DOT")
    c.add_argument("--from", dest="source", choices=["graph6", "dot"], default="graph6")
    c.add_argument("--to", choices=["graph6", "dot", "canonical"], default="dot")
    c.add_argument("--input", help="input file ('-' or omitted for stdin)")
    c.set_defaults(func=cmd_convert)

    a = sub.add_parser("audit", help="structural audit of saturated graphs read as graph6")
    a.add_argument("--context", choices=sorted(_CONTEXTS), required=True)
    a.add_argument("--t", type=int, default=4)
    a.add_argument("--input", help="graph6 file ('-' or omitted for stdin)")
    a.set_defaults(func=cmd_audit)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config.override(max_n=args.max_n)
    if getattr(args, "jobs", 0) is None:
        args.jobs = config.setting("jobs")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SatlabError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        config.clear_overrides()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
