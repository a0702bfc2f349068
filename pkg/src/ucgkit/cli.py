"""Command-line front end: parse graphs, run the solvers, emit JSON.

Every invocation produces one schema-versioned JSON report carrying the
certificates needed to re-verify its claim offline (coverings, witness
graphs in graph6).  Identical invocations produce identical reports up
to the timing field.  Exit codes: 0 success, 1 domain infeasibility
(an infinite or impossible answer), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .analysis import ucg_analysis
from .appendage import (appendage_center_only, appendage_number,
                        appendage_periphery_only, brute_force_appendage,
                        DEFAULT_ORACLE_BOUND)
from .codecs import encode_graph6, load_graph_text, to_dot
from .coverings import (INFEASIBLE, cov_A, cov_profile, decide_cover_k)
from .errors import BoundExceededError, DomainError, MalformedInputError, UcgError
from .families import fixture_manifest, named_graph
from .graphs import INF, Graph
from .scaffolds import build_refined_scaffold, build_scaffold, verify_construction

SCHEMA = "ucg-report/1"

_COND_TOKENS = {"a": "A", "b": "B", "a1": "A'", "b1": "B'", "a2": "A''", "b2": "B''"}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ucgkit",
        description="Exact computations on uniform central graphs.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, center=False, periphery=False):
        if center:
            sp.add_argument("--center", metavar="FILE_OR_TOKEN")
        if periphery:
            sp.add_argument("--periphery", metavar="FILE_OR_TOKEN")
        sp.add_argument("--json", metavar="PATH", dest="json_path")
        sp.add_argument("--bound", type=int, default=None)

    sp = sub.add_parser("analyze", help="center / centered periphery / UCG test")
    common(sp, periphery=True)
    sp.add_argument("--dot", metavar="PATH")

    sp = sub.add_parser("cover", help="minimum covering sizes")
    common(sp, periphery=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--conditions", metavar="LIST",
                    help="comma list from a,b,a1,b1,a2,b2")

    sp = sub.add_parser("append", help="appendage numbers")
    common(sp, center=True, periphery=True)

    sp = sub.add_parser("construct", help="build and verify a witness graph")
    common(sp, center=True, periphery=True)
    sp.add_argument("--rho", type=int, default=None)
    sp.add_argument("--drop", metavar="LIST", default="")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--conditions", metavar="LIST")
    sp.add_argument("--dot", metavar="PATH")

    sp = sub.add_parser("oracle", help="brute-force appendage search")
    common(sp, center=True, periphery=True)
    sp.add_argument("--tmax", type=int, default=2)

    sp = sub.add_parser("families", help="emit the fixture corpus")
    common(sp)
    sp.add_argument("--out", metavar="DIR", default="fixtures")

    return top


def _load_graph(spec: str) -> Graph:
    path = Path(spec)
    if path.exists():
        return load_graph_text(path.read_text())
    return named_graph(spec)


def _digest(g: Graph) -> dict:
    g6 = encode_graph6(g)
    return {"n": g.n, "m": g.m, "graph6": g6,
            "sha256": hashlib.sha256(g6.encode()).hexdigest()}


def _jnum(x):
    if isinstance(x, float) and x == INF:
        return "inf"
    return x


def _vertices(g: Graph, vs) -> dict:
    out = {"ids": sorted(vs)}
    if g.labels:
        out["labels"] = [g.label_of(v) for v in sorted(vs)]
    return out


def _parse_conditions(text: str) -> frozenset[str]:
    toks = [t.strip().lower() for t in text.split(",") if t.strip()]
    bad = [t for t in toks if t not in _COND_TOKENS]
    if bad:
        raise MalformedInputError(f"unknown condition tokens: {bad}")
    return frozenset(_COND_TOKENS[t] for t in toks)


def run_command(argv: list[str]) -> tuple[dict, int]:
    """Execute one CLI invocation; returns (report, exit_code).

    Raises the package's error types for malformed input; ``main`` maps
    those to exit code 2.
    """
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    inputs: dict = {}
    handler = globals()[f"_cmd_{args.command}"]
    result, code, extra = handler(args, inputs)
    report = {
        "schema": SCHEMA,
        "command": list(argv),
        "inputs": inputs,
        "result": result,
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }
    report.update(extra)
    return report, code


def _cmd_analyze(args, inputs):
    if not args.periphery:
        raise MalformedInputError("analyze needs --periphery")
    g = _load_graph(args.periphery)
    inputs["periphery"] = _digest(g)
    a = ucg_analysis(g)
    periphery = [v for v in range(g.n) if g.ecc[v] == a.diameter]
    result = {
        "n": g.n,
        "radius": _jnum(a.radius),
        "diameter": _jnum(a.diameter),
        "is_ucg": a.is_ucg,
        "center": _vertices(g, a.center),
        "centered_periphery": _vertices(g, a.centered_periphery),
        "periphery": _vertices(g, periphery),
        "intermediate": _vertices(g, a.intermediate),
        "strata": [sorted(s) for s in a.strata],
        "ec_map": {str(z): sorted(ec) for z, ec in a.ec_map.items()},
    }
    extra = {}
    if args.dot:
        roles = tuple(
            "center" if v in a.center else
            "periphery" if v in a.centered_periphery else "other"
            for v in range(g.n))
        Path(args.dot).write_text(to_dot(g, roles))
        extra["dot"] = args.dot
    return result, 0, extra


def _cmd_cover(args, inputs):
    if not args.periphery:
        raise MalformedInputError("cover needs --periphery")
    g = _load_graph(args.periphery)
    inputs["periphery"] = _digest(g)
    if args.conditions:
        conds = _parse_conditions(args.conditions)
        refine = bool(conds & {"A''", "B''"})
        k = args.k if args.k is not None else 2
        dec = decide_cover_k(g, k, conds, refine=refine, bound=args.bound)
        return {"decide": dec.to_json(), "k": k}, 0, {}
    profile = cov_profile(g, bound=args.bound)
    result = {key: res.to_json() for key, res in profile.items()}
    code = 1 if profile["A"].value is INFEASIBLE else 0
    return result, code, {}


def _cmd_append(args, inputs):
    if args.center and args.periphery:
        c = _load_graph(args.center)
        p = _load_graph(args.periphery)
        inputs["center"] = _digest(c)
        inputs["periphery"] = _digest(p)
        res = appendage_number(c, p, bound=args.bound)
    elif args.center:
        c = _load_graph(args.center)
        inputs["center"] = _digest(c)
        res = appendage_center_only(c)
    elif args.periphery:
        p = _load_graph(args.periphery)
        inputs["periphery"] = _digest(p)
        res = appendage_periphery_only(p)
    else:
        raise MalformedInputError("append needs --center and/or --periphery")
    code = 1 if res.value == INF else 0
    return res.to_json(), code, {}


def _cmd_construct(args, inputs):
    if not (args.center and args.periphery):
        raise MalformedInputError("construct needs --center and --periphery")
    c = _load_graph(args.center)
    p = _load_graph(args.periphery)
    inputs["center"] = _digest(c)
    inputs["periphery"] = _digest(p)

    refine = False
    if args.conditions:
        conds = _parse_conditions(args.conditions)
        refine = bool(conds & {"A''", "B''"})
        k = args.k if args.k is not None else 2
        dec = decide_cover_k(p, k, conds, refine=refine, bound=args.bound)
        if not dec.found:
            return {"covering": dec.to_json()}, 1, {}
        covering = dec.witness
    else:
        res = cov_A(p)
        if not res.found:
            return {"covering": res.to_json()}, 1, {}
        covering = res.witness

    if refine:
        scaffold = build_refined_scaffold(c, p, covering)
    else:
        rho = args.rho if args.rho is not None else (1 if c.is_complete else 2)
        drop = tuple(int(x) for x in args.drop.split(",") if x.strip())
        scaffold = build_scaffold(c, p, covering, rho, drop)
    rep = verify_construction(scaffold, c, p)
    result = {
        "covering": covering.to_json(),
        "scaffold": {"graph6": encode_graph6(scaffold.graph),
                     "roles": list(scaffold.roles),
                     "n": scaffold.graph.n},
        "verification": {
            "is_ucg": rep.is_ucg,
            "center_matches": rep.center_matches,
            "periphery_matches": rep.periphery_matches,
            "radius": _jnum(rep.radius),
            "intermediate_count": rep.intermediate_count,
            "ok": rep.ok,
        },
    }
    extra = {}
    if args.dot:
        Path(args.dot).write_text(to_dot(scaffold.graph, scaffold.roles))
        extra["dot"] = args.dot
    return result, 0, extra


def _cmd_oracle(args, inputs):
    if not (args.center and args.periphery):
        raise MalformedInputError("oracle needs --center and --periphery")
    c = _load_graph(args.center)
    p = _load_graph(args.periphery)
    inputs["center"] = _digest(c)
    inputs["periphery"] = _digest(p)
    bound = args.bound if args.bound is not None else DEFAULT_ORACLE_BOUND
    value = brute_force_appendage(c, p, args.tmax, bound=bound)
    infeasible = min(p.ecc) <= 1
    result = {"value": value, "t_max": args.tmax,
              "provably_infinite": infeasible}
    return result, 1 if infeasible else 0, {}


def _cmd_families(args, inputs):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = fixture_manifest()
    written = []
    for name, entry in manifest.items():
        path = out / f"{name}.g6"
        path.write_text(entry["graph6"] + "\n")
        written.append(str(path))
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    written.append(str(out / "manifest.json"))
    return {"written": written}, 0, {}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report, code = run_command(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 2 if exc.code not in (0, None) else 0
    except (MalformedInputError, DomainError, BoundExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UcgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json_path = None
    for i, a in enumerate(argv):
        if a == "--json" and i + 1 < len(argv):
            json_path = argv[i + 1]
    text = json.dumps(report, indent=2, sort_keys=True)
    if json_path:
        Path(json_path).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
