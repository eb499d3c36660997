"""Command-line front end.

Exit codes: 0 when every requested check holds, 1 when a bound or
invariant fails (or an oracle/coloring reports a breach), 2 for usage
errors.  DOMTRI_SEED overrides the default seed of `gen` and `sweep`.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from .coloring import (
    Coloring,
    four_coloring,
    is_acyclic,
    is_proper,
    is_r_dynamic,
    rec_eulerian_six_coloring,
)
from .domination import (
    GAMMA_LIMIT,
    IOTA_LIMIT,
    OracleLimit,
    OracleLimitExceeded,
    class_combinator,
    exact_gamma,
    exact_iota,
)
from .generators import (
    BuildTrace,
    diamond_chain,
    icosahedron,
    k4,
    k4_chain,
    min_degree5_sample,
    near_triangulation_from,
    octahedron,
    planar_three_tree,
    random_triangulation,
    recursive_eulerian,
)
from .harness import (
    audit_conjectures,
    emit,
    load_reports,
    parse_sweep_config,
    run_sweep,
)
from .plane_graph import (
    EmbeddingError,
    InvariantBreach,
    check_faces_inequality,
    classify,
    load_pgr,
    neighborhood_structure,
    to_pgr,
)

_GEN_FAMILIES = (
    "k4",
    "octahedron",
    "icosahedron",
    "random",
    "near",
    "three_tree",
    "eulerian",
    "diamond",
    "k4_chain",
    "min_degree5",
)


def _env_seed(default: int) -> int:
    raw = os.environ.get("DOMTRI_SEED")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"DOMTRI_SEED must be an integer, got {raw!r}")


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- gen -----------------------------------------------------------------------


def _cmd_gen(args) -> int:
    seed = _env_seed(args.seed)
    trace = None
    if args.family in ("k4", "octahedron", "icosahedron"):
        g = {"k4": k4, "octahedron": octahedron, "icosahedron": icosahedron}[
            args.family
        ]()
    elif args.family == "random":
        if args.n is None:
            raise SystemExit("gen random needs --n")
        g = random_triangulation(args.n, seed, flips=args.flips)
    elif args.family == "near":
        if args.n is None:
            raise SystemExit("gen near needs --n (vertex count before deletion)")
        base = random_triangulation(args.n, seed, flips=args.flips)
        g, _ = near_triangulation_from(base, seed % args.n)
    elif args.family == "three_tree":
        if args.n is None:
            raise SystemExit("gen three_tree needs --n")
        g, trace = planar_three_tree(args.n, seed)
    elif args.family == "eulerian":
        if args.t is None:
            raise SystemExit("gen eulerian needs --t (insertion rounds)")
        g, trace = recursive_eulerian(args.t, seed)
    elif args.family == "diamond":
        if args.k is None:
            raise SystemExit("gen diamond needs --k (gadget count, >= 2)")
        g = diamond_chain(args.k)
    elif args.family == "k4_chain":
        if args.k is None:
            raise SystemExit("gen k4_chain needs --k (block count, >= 2)")
        g, _ = k4_chain(args.k)
    elif args.family == "min_degree5":
        if args.n is None:
            raise SystemExit("gen min_degree5 needs --n")
        g = min_degree5_sample(args.n, seed)
        if g is None:
            print(f"no min-degree-5 triangulation found at n={args.n}", file=sys.stderr)
            return 1
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(f"unknown family {args.family}")

    _write_out(to_pgr(g), args.output)
    if args.trace:
        if trace is None:
            raise SystemExit(f"family {args.family} has no build trace")
        Path(args.trace).write_text(trace.to_json() + "\n")
    return 0


# -- color ---------------------------------------------------------------------


def _parse_checks(raw: str) -> list[tuple[str, int | None]]:
    out = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "proper":
            out.append(("proper", None))
        elif part == "acyclic":
            out.append(("acyclic", None))
        elif part.startswith("dynamic:"):
            out.append(("dynamic", int(part.split(":", 1)[1])))
        else:
            raise SystemExit(f"unknown check {part!r} (proper, dynamic:r, acyclic)")
    return out


def _cmd_color(args) -> int:
    g = load_pgr(args.graph)
    if args.k == 4:
        c = four_coloring(g)
    else:
        if not args.trace:
            raise SystemExit("--k 6 needs --trace (the construction history)")
        trace = BuildTrace.from_json(Path(args.trace).read_text())
        c = rec_eulerian_six_coloring(g, trace)

    failed = []
    for kind, r in _parse_checks(args.check or ""):
        if kind == "proper":
            ok = is_proper(g, c)
        elif kind == "acyclic":
            ok = is_acyclic(g, c)
        else:
            ok = is_r_dynamic(g, c, r)
        label = kind if r is None else f"{kind}:{r}"
        print(f"# check {label}: {'ok' if ok else 'FAIL'}", file=sys.stderr)
        if not ok:
            failed.append(label)

    _write_out(c.to_text(), args.output)
    return 1 if failed else 0


# -- dominate -------------------------------------------------------------------


def _result_doc(res, n: int) -> dict:
    doc = {
        "method": res.method,
        "size": res.size,
        "vertices": sorted(res.vertices),
        "n": n,
    }
    if res.witness_class is not None:
        doc["witness_class"] = res.witness_class
        doc["used_fallback"] = res.used_fallback
    return doc


def _cmd_dominate(args) -> int:
    g = load_pgr(args.graph)
    limit_n = args.limit_n
    try:
        if args.method == "combinator":
            if args.coloring:
                c = Coloring.from_text(Path(args.coloring).read_text())
            else:
                c = four_coloring(g)
            res = class_combinator(g, c)
        elif args.method == "iota":
            lim = IOTA_LIMIT if limit_n is None else OracleLimit(limit_n, 40_000_000)
            res = exact_iota(g, lim)
        else:
            lim = GAMMA_LIMIT if limit_n is None else OracleLimit(limit_n, 40_000_000)
            res = exact_gamma(g, lim)
    except OracleLimitExceeded as exc:
        print(f"oracle limit: {exc}", file=sys.stderr)
        return 1
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(_result_doc(res, g.n), sort_keys=True))
    else:
        print(f"{res.method} size={res.size} vertices={sorted(res.vertices)}")
    return 0


# -- verify ----------------------------------------------------------------------


def _cmd_verify(args) -> int:
    try:
        g = load_pgr(args.graph)
    except (EmbeddingError, ValueError) as exc:
        print(f"invalid: {exc}")
        return 1
    cls = classify(g)
    print(f"category: {cls.category.value}")
    print(f"n={g.n} edges={g.edge_count} faces={len(g.faces)}")
    print(
        f"min_degree={cls.min_degree}"
        f" two_connected={'yes' if cls.is_two_connected else 'no'}"
        f" degrees_even={'yes' if cls.all_degrees_even else 'no'}"
        f" degrees_odd={'yes' if cls.all_degrees_odd else 'no'}"
    )
    ok = cls.category.value != "invalid"
    if g.is_connected:
        rep = check_faces_inequality(g)
        print(f"faces_inequality: {rep.lhs} <= {rep.rhs} {'ok' if rep.holds else 'FAIL'}")
        ok = ok and rep.holds
    if cls.category.value in ("near_triangulation", "planar_triangulation") and g.n >= 4:
        try:
            for v in g.vertices():
                neighborhood_structure(g, v)
            print("vertex_link_dichotomy: ok")
        except InvariantBreach as exc:
            print(f"vertex_link_dichotomy: FAIL ({exc})")
            ok = False
    return 0 if ok else 1


# -- sweep / audit -----------------------------------------------------------------


def _cmd_sweep(args) -> int:
    try:
        cfg = parse_sweep_config(Path(args.config).read_text())
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    raw = os.environ.get("DOMTRI_SEED")
    if raw is not None:
        cfg = dataclasses.replace(cfg, seed=int(raw))
    reports = run_sweep(cfg)
    stem = args.out or cfg.out or "reports/sweep"
    paths = emit(reports, stem, include_timings=cfg.timings)
    bad = [rep for rep in reports if not rep.holds]
    total_records = sum(len(rep.records) for rep in reports)
    print(
        f"{len(reports)} graphs, {total_records} checks, "
        f"{len(bad)} with failures -> {', '.join(str(p) for p in paths)}"
    )
    for rep in reports:
        for r in rep.records:
            if r.holds:
                continue
            if r.level in ("bound", "invariant"):
                print(f"  FAIL {rep.graph_id}: {r.name} {r.lhs} {r.op} {r.rhs}")
            else:
                print(
                    f"  note {rep.graph_id}: {r.name} {r.lhs} {r.op} {r.rhs}"
                    f" did not hold ({r.level} level, audited separately)"
                )
        for err in rep.errors:
            print(f"  ERROR {rep.graph_id}: {err.splitlines()[0]}")
    return 1 if bad else 0


def _cmd_audit(args) -> int:
    reports = []
    for path in args.reports:
        reports.extend(load_reports(path))
    audit = audit_conjectures(reports)
    sys.stdout.write(audit.render())
    return 0 if audit.clean else 1


# -- entry -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="domtri",
        description="triangulation generators, colorings, and domination bounds",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph and write it as PGR")
    g.add_argument("family", choices=_GEN_FAMILIES)
    g.add_argument("--n", type=int, help="vertex count (size families)")
    g.add_argument("--k", type=int, help="block/gadget count (chain families)")
    g.add_argument("--t", type=int, help="insertion rounds (eulerian)")
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--flips", type=int, help="flip-walk length (random/near)")
    g.add_argument("-o", "--output", default=None, help="PGR path (default stdout)")
    g.add_argument("--trace", help="also write the build trace as JSON")
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("color", help="color a PGR graph and optionally check it")
    c.add_argument("graph")
    c.add_argument("--k", type=int, choices=(4, 6), default=4)
    c.add_argument("--trace", help="build trace JSON (required for --k 6)")
    c.add_argument("--check", help="comma list: proper,dynamic:r,acyclic")
    c.add_argument("-o", "--output", default=None)
    c.set_defaults(func=_cmd_color)

    d = sub.add_parser("dominate", help="dominating-set computations on a PGR graph")
    d.add_argument("graph")
    d.add_argument(
        "--method", choices=("combinator", "iota", "gamma"), default="combinator"
    )
    d.add_argument("--coloring", help="coloring file for --method combinator")
    d.add_argument("--limit-n", type=int, help="oracle vertex-count ceiling")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=_cmd_dominate)

    v = sub.add_parser("verify", help="validate a PGR file and classify it")
    v.add_argument("graph")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sweep", help="run a configured verification sweep")
    s.add_argument("-c", "--config", required=True)
    s.add_argument("-o", "--out", help="report stem (overrides config)")
    s.set_defaults(func=_cmd_sweep)

    a = sub.add_parser("audit", help="scan report files for conjecture hits")
    a.add_argument("reports", nargs="+", help=".jsonl report files")
    a.set_defaults(func=_cmd_audit)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 1
    except EmbeddingError as exc:
        print(f"embedding error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
