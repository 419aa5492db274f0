"""Command-line front end: parameter solvers, constructors, lemma checks,
and the report path with figures.

Exit codes: 0 success, 1 failed verification, 2 input error, 3 resource
limit.  Reports are single JSON documents with sorted keys; identical
invocations differ only in the timing field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .caps import Caps
from .cutrank import cut_rank
from .decomposition import decomposition_width
from .errors import InputError, ResourceLimitError
from .graph6 import decode, encode
from .graphs import (Graph, LinkMatrix, ProductKind, from_edgelist_text,
                     make_family, product, blown_product)
from .solvers import (beta_rho_k, layout_width, lrw_exact, rank_depth_exact,
                      rbrit_exact)
from .verify import LEMMA_CHECKS, run_lemma

_FAMILY_ALIASES = {
    "path": "path",
    "complete": "complete",
    "edgeless": "edgeless",
    "star": "star",
    "subdiv_star": "subdivided_star",
    "subdivided_star": "subdivided_star",
}

_KIND_NAMES = {
    "match": ProductKind.MATCH,
    "antimatch": ProductKind.ANTIMATCH,
    "half": ProductKind.HALF,
}


def _split_args(text: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError("unbalanced parentheses in spec")
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}")


def parse_construct_spec(text: str) -> Graph:
    """Grammar: family:k | copies(t, spec) | prod(kind, spec, spec)
    | blown(kind, spec, spec, t, a, b, c, d)."""
    text = text.strip()
    for head in ("prod", "blown", "copies"):
        if text.startswith(head + "("):
            if not text.endswith(")"):
                raise InputError(f"missing closing parenthesis in {text!r}")
            args = _split_args(text[len(head) + 1:-1])
            if head == "copies":
                if len(args) != 2:
                    raise InputError("copies expects (count, spec)")
                return make_family("copies", _parse_int(args[0], "count"),
                                   parse_construct_spec(args[1]))
            kind = _KIND_NAMES.get(args[0])
            if kind is None:
                raise InputError(f"unknown product kind {args[0]!r}")
            if head == "prod":
                if len(args) != 3:
                    raise InputError("prod expects (kind, spec, spec)")
                return product(parse_construct_spec(args[1]),
                               parse_construct_spec(args[2]), kind)
            if len(args) != 8:
                raise InputError("blown expects (kind, spec, spec, t, a, b, c, d)")
            t = _parse_int(args[3], "copy count")
            a, b, c, d = (_parse_int(x, "link bit") for x in args[4:])
            return blown_product(parse_construct_spec(args[1]),
                                 parse_construct_spec(args[2]), kind, t,
                                 LinkMatrix(a, b, c, d))
    name, sep, params = text.partition(":")
    if not sep:
        raise InputError(f"bad construct spec {text!r}")
    family = _FAMILY_ALIASES.get(name.strip())
    if family is None:
        raise InputError(f"unknown family {name.strip()!r}")
    return make_family(family, _parse_int(params, "family parameter"))


def _resolve_graph(args) -> tuple[Graph, dict]:
    if args.family and args.graph:
        raise InputError("give either a graph argument or --family, not both")
    if args.family:
        g = parse_construct_spec(args.family)
        return g, {"family": args.family, "n": g.n}
    if not args.graph:
        raise InputError("no graph given; pass a graph6 literal, @file, or --family")
    text = args.graph
    # a bare "@" is the one-vertex graph6 string, not a file marker
    if text.startswith("@") and len(text) > 1:
        content = Path(text[1:]).read_text()
        stripped = content.strip()
        first = stripped.splitlines()[0].strip() if stripped else ""
        if first.isdigit():
            g = from_edgelist_text(stripped)
        else:
            g = decode(stripped.splitlines()[0])
        return g, {"file": text[1:], "n": g.n}
    g = decode(text)
    return g, {"graph6": text, "n": g.n}


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "table":
        for key, value in sorted(doc.items()):
            if key == "checks" and isinstance(value, list):
                for chk in value:
                    mark = "PASS" if chk.get("pass") else "FAIL"
                    print(f"  [{mark}] {chk.get('name')}")
            else:
                print(f"{key}: {json.dumps(value, sort_keys=True)}")
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))


def _cmd_param(args) -> int:
    caps = Caps.from_env()
    g, inputs = _resolve_graph(args)
    started = time.perf_counter()
    outputs: dict = {}
    if args.which == "cutrank":
        if args.set is None:
            raise InputError("cutrank requires --set")
        side = [_parse_int(x, "vertex") for x in args.set.split(",") if x != ""]
        outputs["value"] = cut_rank(g, side)
        outputs["witness"] = {"side": sorted(set(side))}
    elif args.which == "rbrit":
        if args.depth is None:
            raise InputError("rbrit requires --depth")
        value, dec = rbrit_exact(g, args.depth, caps)
        outputs["value"] = value
        if dec is not None:
            outputs["witness"] = json.loads(dec.to_json())
            outputs["witness_value"] = decomposition_width(g, dec)
    elif args.which == "rankdepth":
        value, dec = rank_depth_exact(g, caps)
        outputs["value"] = value
        if dec is not None:
            outputs["witness"] = json.loads(dec.to_json())
            outputs["witness_value"] = max(decomposition_width(g, dec),
                                           dec.depth())
    elif args.which == "lrw":
        value, layout = lrw_exact(g, caps)
        outputs["value"] = value
        outputs["witness"] = {"order": list(layout.order),
                              "width": layout.width}
        outputs["witness_value"] = layout_width(g, layout.order)
    elif args.which == "betark":
        if args.k is None:
            raise InputError("betark requires --k")
        value, parts = beta_rho_k(g, args.k, caps)
        outputs["value"] = value
        if parts is not None:
            from .cutrank import rho_width
            outputs["witness"] = [list(p) for p in parts]
            outputs["witness_value"] = rho_width(g, parts)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown parameter {args.which!r}")
    doc = {
        "command": "param " + args.which,
        "inputs": inputs,
        "outputs": outputs,
        "caps_hit": False,
        "timing_ms": round(1000 * (time.perf_counter() - started), 3),
    }
    _emit(doc, args.format)
    return 0


def _cmd_construct(args) -> int:
    g = parse_construct_spec(args.spec)
    print(encode(g))
    return 0


def _cmd_verify(args) -> int:
    caps = Caps.from_env()
    started = time.perf_counter()
    report = run_lemma(args.lemma, n=args.n, samples=args.samples,
                       seed=args.seed, caps=caps)
    report["timing_ms"] = round(1000 * (time.perf_counter() - started), 3)
    _emit(report, args.format)
    return 0 if report["pass"] else 1


def _cmd_report(args) -> int:
    from .report import run_report
    manifest = run_report(Path(args.out), seed=args.seed,
                          samples=args.samples, max_n=args.max_n)
    print(json.dumps(manifest, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankbrittle",
        description="Exact cut-rank width parameters and lemma verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("param", help="compute a width parameter")
    p.add_argument("which",
                   choices=["cutrank", "rbrit", "rankdepth", "lrw", "betark"])
    p.add_argument("graph", nargs="?",
                   help="graph6 literal or @file (graph6 or edge list)")
    p.add_argument("--family", help="construct spec, e.g. path:4")
    p.add_argument("--set", help="comma-separated vertex set (cutrank)")
    p.add_argument("--depth", type=int, help="radius bound (rbrit)")
    p.add_argument("--k", type=int, help="part size bound (betark)")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; results never depend on it")
    p.set_defaults(func=_cmd_param)

    c = sub.add_parser("construct", help="emit a graph6 string")
    c.add_argument("spec", help="family:k, prod(...), blown(...), copies(...)")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="run one lemma check")
    v.add_argument("lemma", choices=sorted(LEMMA_CHECKS),
                   metavar="LEMMA",
                   help="one of: " + ", ".join(sorted(LEMMA_CHECKS)))
    v.add_argument("--n", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--format", choices=["json", "table"], default="json")
    v.add_argument("--threads", type=int, default=1,
                   help="reserved; results never depend on it")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("report",
                       help="write CSV tables and figures to a directory")
    r.add_argument("--out", required=True)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--samples", type=int, default=40)
    r.add_argument("--max-n", type=int, default=7, dest="max_n")
    r.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
