"""Sweep driver: builds graph corpora from a flat config, runs every
applicable bound and invariant check, and emits deterministic reports.

A sweep is a pure function of its parsed config: identical configs give
byte-identical report files (wall-clock timings are measured but kept
out of the files unless explicitly enabled).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .coloring import (
    Coloring,
    class_sizes,
    four_coloring,
    is_proper,
    is_r_dynamic,
    missing_colors,
    rec_eulerian_six_coloring,
    stacked_four_coloring,
)
from .domination import (
    DominationResult,
    OracleLimit,
    OracleLimitExceeded,
    class_combinator,
    exact_gamma,
    exact_iota,
    is_dominating,
    undominated_by,
    verify_combinator_accounting,
)
from .generators import (
    diamond_chain,
    diamond_chain_witness,
    icosahedron,
    k4,
    k4_chain,
    min_degree5_sample,
    near_triangulation_from,
    octahedron,
    planar_three_tree,
    random_connected_plane,
    random_triangulation,
    recursive_eulerian,
    split_seed,
)
from .plane_graph import (
    Category,
    InvariantBreach,
    PlaneGraph,
    check_faces_inequality,
    classify,
    neighborhood_structure,
)

# -- report records -----------------------------------------------------------

_OPS = {"<=", "<", "=="}


def _cmp(lhs: Fraction, rhs: Fraction, op: str) -> bool:
    if op == "<=":
        return lhs <= rhs
    if op == "<":
        return lhs < rhs
    return lhs == rhs


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BoundRecord:
    """One checked comparison: `lhs op rhs` with the rhs recomputed from
    the bound's closed form at the instance's n."""

    name: str
    lhs: Fraction
    rhs: Fraction
    op: str = "<="
    level: str = "bound"  # bound | invariant | conjecture | finding

    def __post_init__(self):
        if self.op not in _OPS:
            raise ValueError(f"unknown comparison {self.op!r}")

    @property
    def holds(self) -> bool:
        return _cmp(self.lhs, self.rhs, self.op)


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    family: str
    n: int
    seed: int
    category: str
    min_degree: int
    all_degrees_odd: bool
    all_degrees_even: bool
    records: tuple[BoundRecord, ...]
    errors: tuple[str, ...] = ()
    runtime_ms: float | None = None

    @property
    def holds(self) -> bool:
        """Conjecture and finding rows are audited, not enforced."""
        return not self.errors and all(
            r.holds for r in self.records if r.level in ("bound", "invariant")
        )

    def to_json(self, include_timings: bool = False) -> str:
        doc = {
            "graph_id": self.graph_id,
            "family": self.family,
            "n": self.n,
            "seed": self.seed,
            "category": self.category,
            "min_degree": self.min_degree,
            "all_degrees_odd": self.all_degrees_odd,
            "all_degrees_even": self.all_degrees_even,
            "records": [
                {
                    "name": r.name,
                    "lhs": _frac_str(r.lhs),
                    "rhs": _frac_str(r.rhs),
                    "op": r.op,
                    "level": r.level,
                    "holds": r.holds,
                }
                for r in self.records
            ],
            "errors": list(self.errors),
        }
        if include_timings:
            doc["runtime_ms"] = self.runtime_ms
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "BoundReport":
        doc = json.loads(line)
        records = tuple(
            BoundRecord(
                r["name"],
                Fraction(r["lhs"]),
                Fraction(r["rhs"]),
                r["op"],
                r["level"],
            )
            for r in doc["records"]
        )
        return BoundReport(
            graph_id=doc["graph_id"],
            family=doc["family"],
            n=doc["n"],
            seed=doc["seed"],
            category=doc["category"],
            min_degree=doc["min_degree"],
            all_degrees_odd=doc["all_degrees_odd"],
            all_degrees_even=doc["all_degrees_even"],
            records=records,
            errors=tuple(doc.get("errors", ())),
            runtime_ms=doc.get("runtime_ms"),
        )


# -- sweep config -------------------------------------------------------------

_KNOWN_FAMILIES = (
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
    "all_odd",
    "plane",
)

_DEFAULT_CHECKS = ("structure", "coloring", "accounting", "oracles")


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 1
    families: tuple[str, ...] = ()
    values: tuple[tuple[str, str], ...] = ()
    iota_max_n: int = 35
    gamma_max_n: int = 24
    checks: tuple[str, ...] = _DEFAULT_CHECKS
    timings: bool = False
    out: str | None = None

    def get(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.values:
            if k == key:
                return v
        return default

    def get_int(self, key: str, default: int) -> int:
        raw = self.get(key)
        return default if raw is None else int(raw)

    def get_ints(self, key: str, default: tuple[int, ...]) -> tuple[int, ...]:
        raw = self.get(key)
        return default if raw is None else _parse_ints(raw)

    def serialize(self) -> str:
        lines = [
            f"seed = {self.seed}",
            f"families = {', '.join(self.families)}",
            f"iota_max_n = {self.iota_max_n}",
            f"gamma_max_n = {self.gamma_max_n}",
            f"checks = {', '.join(self.checks)}",
            f"timings = {'on' if self.timings else 'off'}",
        ]
        if self.out is not None:
            lines.append(f"out = {self.out}")
        lines.extend(f"{k} = {v}" for k, v in self.values)
        return "\n".join(lines) + "\n"


def _parse_ints(raw: str) -> tuple[int, ...]:
    """Accepts '7', '2,5,9' and '4..8' (inclusive range)."""
    out: list[int] = []
    for part in raw.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return tuple(out)


def parse_sweep_config(text: str) -> SweepConfig:
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if any(k == key for k, _ in pairs):
            raise ValueError(f"config line {lineno}: duplicate key {key!r}")
        pairs.append((key, value))

    def take(key: str, default: str | None) -> str | None:
        nonlocal pairs
        hit = [v for k, v in pairs if k == key]
        pairs = [(k, v) for k, v in pairs if k != key]
        return hit[0] if hit else default

    seed = int(take("seed", "1"))
    fams = tuple(
        f.strip() for f in (take("families", "") or "").split(",") if f.strip()
    )
    unknown = [f for f in fams if f not in _KNOWN_FAMILIES]
    if unknown:
        raise ValueError(f"unknown families: {unknown}")
    iota_max = int(take("iota_max_n", "35"))
    gamma_max = int(take("gamma_max_n", "24"))
    checks_raw = take("checks", "all") or "all"
    if checks_raw.strip() == "all":
        checks = _DEFAULT_CHECKS
    else:
        checks = tuple(c.strip() for c in checks_raw.split(",") if c.strip())
        unknown_checks = [c for c in checks if c not in _DEFAULT_CHECKS]
        if unknown_checks:
            raise ValueError(f"unknown checks: {unknown_checks}")
    timings_raw = (take("timings", "off") or "off").lower()
    if timings_raw not in ("on", "off", "yes", "no", "true", "false"):
        raise ValueError(f"timings must be on/off, got {timings_raw!r}")
    out = take("out", None)
    return SweepConfig(
        seed=seed,
        families=fams,
        values=tuple(pairs),
        iota_max_n=iota_max,
        gamma_max_n=gamma_max,
        checks=checks,
        timings=timings_raw in ("on", "yes", "true"),
        out=out,
    )


# -- per-instance evaluation --------------------------------------------------


@dataclass
class _Ctx:
    cfg: SweepConfig
    records: list[BoundRecord] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def rec(self, name, lhs, rhs, op="<=", level="bound"):
        self.records.append(BoundRecord(name, _frac(lhs), _frac(rhs), op, level))

    def on(self, check: str) -> bool:
        return check in self.cfg.checks


def _structure_checks(ctx: _Ctx, g: PlaneGraph, cls) -> None:
    if not ctx.on("structure"):
        return
    if g.is_connected:
        rep = check_faces_inequality(g)
        ctx.rec("faces_inequality", rep.lhs, rep.rhs, "<=", "invariant")
        ctx.rec(
            "faces_inequality_strengthened",
            rep.lhs,
            rep.strengthened_rhs,
            "<=",
            "invariant",
        )
    if (
        cls.category in (Category.NEAR_TRIANGULATION, Category.PLANAR_TRIANGULATION)
        and g.n >= 4
    ):
        try:
            for v in g.vertices():
                neighborhood_structure(g, v)
            ctx.rec("vertex_link_dichotomy", 0, 0, "<=", "invariant")
        except InvariantBreach as exc:
            ctx.errors.append(f"vertex-link: {exc}")
    if cls.category is Category.PLANAR_TRIANGULATION:
        ctx.rec("edge_count_3n_minus_6", g.edge_count, 3 * g.n - 6, "==", "invariant")
        ctx.rec("face_count_2n_minus_4", len(g.faces), 2 * g.n - 4, "==", "invariant")


def _combinator_checks(ctx: _Ctx, g: PlaneGraph, cls) -> DominationResult | None:
    if cls.category not in (
        Category.NEAR_TRIANGULATION,
        Category.PLANAR_TRIANGULATION,
    ):
        return None
    n = g.n
    c = four_coloring(g)
    try:
        res = class_combinator(g, c)
    except InvariantBreach as exc:
        ctx.errors.append(f"combinator: {exc}")
        return None
    ctx.rec("combinator_near_5n12", res.size, Fraction(5 * n, 12))
    if cls.category is Category.PLANAR_TRIANGULATION:
        ctx.rec("combinator_planar_3n8", res.size, Fraction(3 * n, 8), "<")
        if cls.min_degree == 5:
            ctx.rec("combinator_min5_n3", res.size, Fraction(n, 3))
    if ctx.on("accounting"):
        try:
            acct = verify_combinator_accounting(g, c, res)
            ctx.rec(
                "combinator_accounting",
                sum(0 if ch.holds else 1 for ch in acct.checks),
                0,
                "<=",
                "invariant",
            )
        except InvariantBreach as exc:
            ctx.errors.append(f"accounting: {exc}")
    if cls.category is Category.PLANAR_TRIANGULATION:
        _alpha_checks(ctx, g, c, res)
    return res


def _alpha_checks(ctx: _Ctx, g: PlaneGraph, c: Coloring, res: DominationResult):
    try:
        rec = odd_degree_analysis(g, c, combinator_result=res)
    except InvariantBreach as exc:
        ctx.errors.append(f"odd-degree: {exc}")
        return
    ctx.rec(
        "alpha_combinator_bound",
        rec.combinator_size,
        rec.bound,
        "<=",
        "finding",
    )
    if rec.alpha == 1:
        ctx.rec("all_odd_classes_dominating", rec.non_dominating_classes, 0, "<=", "invariant")


def _oracle_checks(ctx: _Ctx, g: PlaneGraph, cls, res: DominationResult | None):
    if not ctx.on("oracles"):
        return None, None
    n = g.n
    near_or_planar = cls.category in (
        Category.NEAR_TRIANGULATION,
        Category.PLANAR_TRIANGULATION,
    )
    iota = gamma = None
    if n <= ctx.cfg.iota_max_n:
        try:
            iota = exact_iota(g, OracleLimit(ctx.cfg.iota_max_n, 40_000_000))
        except OracleLimitExceeded:
            iota = None
    if iota is not None:
        if res is not None:
            ctx.rec("iota_le_combinator", iota.size, res.size, "<=", "invariant")
        if cls.category is Category.PLANAR_TRIANGULATION:
            ctx.rec("conjecture_iota_n3", iota.size, Fraction(n, 3), "<=", "conjecture")
    if n <= ctx.cfg.gamma_max_n:
        try:
            gamma = exact_gamma(g, OracleLimit(ctx.cfg.gamma_max_n, 40_000_000))
        except OracleLimitExceeded:
            gamma = None
    if gamma is not None:
        if iota is not None:
            ctx.rec("gamma_le_iota", gamma.size, iota.size, "<=", "invariant")
        if near_or_planar:
            ctx.rec("gamma_near_n3", gamma.size, Fraction(n, 3))
        if cls.category is Category.PLANAR_TRIANGULATION:
            ctx.rec("conjecture_gamma_n4", gamma.size, Fraction(n, 4), "<=", "conjecture")
    return iota, gamma


def _eulerian_checks(ctx: _Ctx, g: PlaneGraph, trace, iota) -> None:
    n = g.n
    v4 = [v for v in g.vertices() if g.degree(v) == 4]
    ctx.rec(
        "degrees_all_even",
        sum(1 for d in g.degrees() if d % 2),
        0,
        "<=",
        "invariant",
    )
    if n >= 9:
        ctx.rec(
            "deg4_disjoint_triangles",
            _deg4_triangle_violations(g, v4),
            0,
            "<=",
            "invariant",
        )
        ctx.rec("deg4_seven_bound", 7 * len(v4), 6 * n - 12, "<=")
    if not ctx.on("coloring"):
        return
    six = rec_eulerian_six_coloring(g, trace)
    ctx.rec("six_coloring_proper", 0 if is_proper(g, six) else 1, 0, "<=", "invariant")
    ctx.rec(
        "six_coloring_5dynamic",
        0 if is_r_dynamic(g, six, 5) else 1,
        0,
        "<=",
        "invariant",
    )
    bad_pairs = 0
    miss = {v: missing_colors(g, six, v).absent for v in v4}
    for u in v4:
        for w in g.neighbors(u):
            if w in miss and u < w and miss[u] == miss[w]:
                bad_pairs += 1
    ctx.rec("six_coloring_distinct_missing", bad_pairs, 0, "<=", "invariant")
    shape_bad = sum(
        1
        for v in g.vertices()
        if (g.degree(v) == 4 and len(missing_colors(g, six, v).absent) != 1)
        or (g.degree(v) >= 6 and missing_colors(g, six, v).absent)
    )
    ctx.rec("six_coloring_missing_shape", shape_bad, 0, "<=", "invariant")
    try:
        res6 = class_combinator(g, six)
    except InvariantBreach as exc:
        ctx.errors.append(f"six-combinator: {exc}")
        return
    ctx.rec("eulerian_class_bound", res6.size, Fraction(n + len(v4), 6))
    if n >= 9:
        ctx.rec("eulerian_13n42", res6.size, Fraction(13 * n - 12, 42))
        if iota is not None:
            ctx.rec("eulerian_iota_13n42", iota.size, Fraction(13 * n, 42), "<")


def _deg4_triangle_violations(g: PlaneGraph, v4) -> int:
    v4set = set(v4)
    bad = 0
    for v in v4:
        inside = [u for u in g.neighbors(v) if u in v4set]
        if len(inside) != 2 or not g.has_edge(inside[0], inside[1]):
            bad += 1
    return bad


def _three_tree_checks(ctx: _Ctx, g: PlaneGraph, trace, iota) -> None:
    if ctx.on("coloring"):
        c = stacked_four_coloring(trace)
        sizes = class_sizes(c)
        # on 4+ vertices all four stacked classes are nonempty and must dominate
        non_dominating = sum(
            0 if s and is_dominating(g, c.class_members(i)) else 1
            for i, s in enumerate(sizes)
        )
        ctx.rec("stacked_classes_dominating", non_dominating, 0, "<=", "invariant")
        ctx.rec("stacked_min_class_n4", min(sizes), Fraction(g.n, 4))
    if iota is not None:
        ctx.rec("three_tree_iota_n4", iota.size, Fraction(g.n, 4))


def _evaluate(
    ctx: _Ctx,
    g: PlaneGraph,
    family: str,
    extra: dict,
) -> tuple[list[BoundRecord], list[str], object]:
    cls = classify(g)
    _structure_checks(ctx, g, cls)
    res = _combinator_checks(ctx, g, cls)
    iota, gamma = _oracle_checks(ctx, g, cls, res)
    if family == "eulerian":
        _eulerian_checks(ctx, g, extra["trace"], iota)
    elif family == "three_tree":
        _three_tree_checks(ctx, g, extra["trace"], iota)
    elif family == "diamond":
        wit = extra["witness"]
        ok = is_dominating(g, wit) and all(
            not g.has_edge(u, v) for u in wit for v in wit if u < v
        )
        ctx.rec("diamond_witness_ids", 0 if ok else 1, 0, "<=", "invariant")
        if iota is not None:
            ctx.rec("diamond_iota_2n7", iota.size, Fraction(2 * g.n, 7), "==")
    elif family == "k4_chain":
        if gamma is not None:
            ctx.rec("k4_chain_gamma_n4", gamma.size, Fraction(g.n, 4), "==")
    elif family == "min_degree5":
        ctx.rec("min_degree_is_5", min(g.degrees()), 5, "==", "invariant")
    elif family == "all_odd":
        ctx.rec(
            "degrees_all_odd",
            sum(1 for d in g.degrees() if d % 2 == 0),
            0,
            "<=",
            "invariant",
        )
    return ctx.records, ctx.errors, cls


# -- corpus planning ----------------------------------------------------------


def _plan_family(cfg: SweepConfig, fam_idx: int, family: str):
    """Yield (graph_id, seed, builder) triples; builder() -> (graph, extra)."""
    master = cfg.seed

    if family in ("k4", "octahedron", "icosahedron"):
        build = {"k4": k4, "octahedron": octahedron, "icosahedron": icosahedron}[
            family
        ]
        yield f"{family}", 0, lambda b=build: (b(), {})
        return

    if family == "random":
        ns = cfg.get_ints("random.n", tuple(range(4, 61)))
        count = cfg.get_int("random.count", 200)
        for i in range(count):
            n = ns[i % len(ns)]
            seed = split_seed(master, fam_idx, i)
            yield f"random-{i}", seed, (
                lambda n=n, s=seed: (random_triangulation(n, s), {})
            )
        return

    if family == "near":
        ns = cfg.get_ints("near.n", tuple(range(5, 61)))
        count = cfg.get_int("near.count", 100)
        for i in range(count):
            n = ns[i % len(ns)]
            seed = split_seed(master, fam_idx, i)

            def build(n=n, s=seed):
                base = random_triangulation(n, s)
                v = s % n
                h, _ = near_triangulation_from(base, v)
                return h, {}

            yield f"near-{i}", seed, build
        return

    if family == "three_tree":
        ns = cfg.get_ints("three_tree.n", tuple(range(4, 41)))
        count = cfg.get_int("three_tree.count", 100)
        for i in range(count):
            n = ns[i % len(ns)]
            seed = split_seed(master, fam_idx, i)

            def build(n=n, s=seed):
                g, trace = planar_three_tree(n, s)
                return g, {"trace": trace}

            yield f"three_tree-{i}", seed, build
        return

    if family == "eulerian":
        ts = cfg.get_ints("eulerian.t", tuple(range(1, 9)))
        per_t = cfg.get_int("eulerian.seeds", 5)
        i = 0
        for t in ts:
            for j in range(per_t):
                seed = split_seed(master, fam_idx, t, j)

                def build(t=t, s=seed):
                    g, trace = recursive_eulerian(t, s)
                    return g, {"trace": trace}

                yield f"eulerian-t{t}-{j}", seed, build
                i += 1
        return

    if family == "diamond":
        for k in cfg.get_ints("diamond.k", (2, 3, 4)):
            yield f"diamond-k{k}", 0, (
                lambda k=k: (diamond_chain(k), {"witness": diamond_chain_witness(k)})
            )
        return

    if family == "k4_chain":
        for k in cfg.get_ints("k4_chain.k", (2, 3, 4, 5)):
            yield f"k4_chain-k{k}", 0, (lambda k=k: (k4_chain(k)[0], {}))
        return

    if family == "min_degree5":
        ns = cfg.get_ints("min_degree5.n", (12, 14, 16))
        budget = cfg.get_int("min_degree5.budget", 60)
        for n in ns:
            seed = split_seed(master, fam_idx, n)

            def build(n=n, s=seed, b=budget):
                g = min_degree5_sample(n, s, budget=b)
                if g is None:
                    raise _SkipInstance(f"no min-degree-5 sample at n={n}")
                return g, {}

            yield f"min_degree5-n{n}", seed, build
        return

    if family == "all_odd":
        raw = cfg.get("all_odd.instances", "")
        pairs = []
        for part in (raw or "").split(","):
            part = part.strip()
            if part:
                a, b = part.split(":")
                pairs.append((int(a), int(b)))
        for n, s in pairs:
            yield f"all_odd-n{n}-s{s}", s, (
                lambda n=n, s=s: (random_triangulation(n, s), {})
            )
        return

    if family == "plane":
        ns = cfg.get_ints("plane.n", tuple(range(5, 35)))
        count = cfg.get_int("plane.count", 100)
        for i in range(count):
            n = ns[i % len(ns)]
            seed = split_seed(master, fam_idx, i)
            yield f"plane-{i}", seed, (
                lambda n=n, s=seed: (random_connected_plane(n, s), {})
            )
        return

    raise ValueError(f"unknown family {family!r}")


class _SkipInstance(Exception):
    pass


def run_sweep(cfg: SweepConfig) -> list[BoundReport]:
    reports: list[BoundReport] = []
    for fam_idx, family in enumerate(cfg.families):
        for graph_id, seed, build in _plan_family(cfg, fam_idx, family):
            t0 = time.perf_counter()
            ctx = _Ctx(cfg)
            try:
                g, extra = build()
            except _SkipInstance:
                continue
            except Exception as exc:  # construction failures are data
                reports.append(
                    BoundReport(
                        graph_id=graph_id,
                        family=family,
                        n=0,
                        seed=seed,
                        category="invalid",
                        min_degree=0,
                        all_degrees_odd=False,
                        all_degrees_even=False,
                        records=(),
                        errors=(f"build: {exc}",),
                        runtime_ms=(time.perf_counter() - t0) * 1e3,
                    )
                )
                continue
            try:
                records, errors, cls = _evaluate(ctx, g, family, extra)
            except Exception as exc:
                records, errors, cls = ctx.records, ctx.errors + [f"evaluate: {exc}"], classify(g)
            reports.append(
                BoundReport(
                    graph_id=graph_id,
                    family=family,
                    n=g.n,
                    seed=seed,
                    category=cls.category.value,
                    min_degree=cls.min_degree,
                    all_degrees_odd=cls.all_degrees_odd,
                    all_degrees_even=cls.all_degrees_even,
                    records=tuple(records),
                    errors=tuple(errors),
                    runtime_ms=(time.perf_counter() - t0) * 1e3,
                )
            )
    return reports


# -- odd-degree analysis ------------------------------------------------------


@dataclass(frozen=True)
class OddDegreeRecord:
    n: int
    odd_count: int
    alpha: Fraction
    combinator_size: int
    bound: Fraction  # (2 - alpha) * n / 4
    within_bound: bool
    non_dominating_classes: int
    iota: int | None = None
    iota_within: bool | None = None


def odd_degree_analysis(
    g: PlaneGraph,
    c: Coloring,
    combinator_result: DominationResult | None = None,
    iota_result: DominationResult | None = None,
) -> OddDegreeRecord:
    """Check the odd-degree observations on a planar triangulation with a
    proper 4-coloring.

    Hard invariants: no odd-degree vertex can be missed by any class,
    and when every degree is odd every class dominates.  The
    (2 - alpha) n / 4 size comparison is only recorded; a violation is
    interesting data, not an implementation error, so it surfaces as a
    finding instead of an exception.
    """
    cls = classify(g)
    if cls.category is not Category.PLANAR_TRIANGULATION or c.k != 4:
        raise ValueError("odd-degree analysis needs a triangulation and 4 classes")
    n = g.n
    odd = [v for v in g.vertices() if g.degree(v) % 2 == 1]
    alpha = Fraction(len(odd), n)

    u_sets = [undominated_by(g, c, i) for i in range(4)]
    stray = sorted(set(odd) & set().union(*u_sets))
    if stray:
        raise InvariantBreach(
            f"odd-degree vertices undominated by some class: {stray}"
        )
    non_dominating = sum(
        0 if is_dominating(g, c.class_members(i)) else 1 for i in range(4)
    )
    if alpha == 1 and non_dominating:
        raise InvariantBreach(
            f"{non_dominating} classes fail to dominate an all-odd triangulation"
        )

    res = combinator_result or class_combinator(g, c)
    bound = (2 - alpha) * Fraction(n, 4)
    iota = iota_result.size if iota_result is not None else None
    return OddDegreeRecord(
        n=n,
        odd_count=len(odd),
        alpha=alpha,
        combinator_size=res.size,
        bound=bound,
        within_bound=res.size <= bound,
        non_dominating_classes=non_dominating,
        iota=iota,
        iota_within=None if iota is None else iota <= bound,
    )


# -- audit and emission -------------------------------------------------------


@dataclass(frozen=True)
class ConjectureAudit:
    reports: int
    gamma_conj_checked: int
    gamma_conj_hits: tuple[tuple[str, int, str, str], ...]  # annotated, not alarmed
    iota_conj_checked: int
    iota_conj_hits: tuple[tuple[str, int, str, str], ...]  # counterexample candidates
    gamma_tight: int  # instances with gamma exactly n/4
    iota_tight: int  # instances with iota exactly 2n/7

    @property
    def clean(self) -> bool:
        return not self.iota_conj_hits

    def render(self) -> str:
        lines = [
            f"reports audited: {self.reports}",
            f"conjecture gamma <= n/4: {self.gamma_conj_checked} checked, "
            f"{len(self.gamma_conj_hits)} small-n exceedances (annotation only; "
            f"the conjecture is asymptotic)",
        ]
        for gid, n, lhs, rhs in self.gamma_conj_hits:
            lines.append(f"  note {gid} (n={n}): gamma={lhs} > {rhs}")
        lines.append(
            f"conjecture iota <= n/3: {self.iota_conj_checked} checked, "
            f"{len(self.iota_conj_hits)} counterexample candidates"
        )
        for gid, n, lhs, rhs in self.iota_conj_hits:
            lines.append(f"  CANDIDATE {gid} (n={n}): iota={lhs} > {rhs}")
        lines.append(f"gamma = n/4 tight instances: {self.gamma_tight}")
        lines.append(f"iota = 2n/7 tight instances: {self.iota_tight}")
        return "\n".join(lines) + "\n"


def audit_conjectures(reports: list[BoundReport]) -> ConjectureAudit:
    gamma_conj_checked = iota_conj_checked = gamma_tight = iota_tight = 0
    gamma_conj_hits = []
    iota_conj_hits = []
    for rep in reports:
        for r in rep.records:
            if r.name == "conjecture_gamma_n4":
                gamma_conj_checked += 1
                if not r.holds:
                    gamma_conj_hits.append(
                        (rep.graph_id, rep.n, _frac_str(r.lhs), _frac_str(r.rhs))
                    )
                elif r.lhs == r.rhs:
                    gamma_tight += 1
            elif r.name == "k4_chain_gamma_n4" and r.holds:
                gamma_tight += 1
            elif r.name == "conjecture_iota_n3":
                iota_conj_checked += 1
                if not r.holds:
                    iota_conj_hits.append(
                        (rep.graph_id, rep.n, _frac_str(r.lhs), _frac_str(r.rhs))
                    )
            elif r.name == "diamond_iota_2n7" and r.holds:
                iota_tight += 1
    return ConjectureAudit(
        reports=len(reports),
        gamma_conj_checked=gamma_conj_checked,
        gamma_conj_hits=tuple(gamma_conj_hits),
        iota_conj_checked=iota_conj_checked,
        iota_conj_hits=tuple(iota_conj_hits),
        gamma_tight=gamma_tight,
        iota_tight=iota_tight,
    )


def render_table(reports: list[BoundReport], include_timings: bool = False) -> str:
    cols = "family\tgraph_id\tn\tseed\tbound\tlhs\top\trhs\tholds\truntime_ms"
    lines = [cols]
    for rep in reports:
        ms = f"{rep.runtime_ms:.1f}" if include_timings and rep.runtime_ms else "-"
        for r in rep.records:
            lines.append(
                f"{rep.family}\t{rep.graph_id}\t{rep.n}\t{rep.seed}\t{r.name}\t"
                f"{_frac_str(r.lhs)}\t{r.op}\t{_frac_str(r.rhs)}\t"
                f"{'yes' if r.holds else 'NO'}\t{ms}"
            )
        for err in rep.errors:
            first = err.splitlines()[0] if err else ""
            lines.append(
                f"{rep.family}\t{rep.graph_id}\t{rep.n}\t{rep.seed}\terror\t"
                f"{first}\t-\t-\tNO\t{ms}"
            )
    return "\n".join(lines) + "\n"


def emit(
    reports: list[BoundReport],
    stem: str | Path,
    include_timings: bool = False,
) -> list[Path]:
    """Write the tabular (.tsv) and structured (.jsonl) report files."""
    stem = Path(stem)
    stem.parent.mkdir(parents=True, exist_ok=True)
    tsv = stem.with_suffix(".tsv")
    jsonl = stem.with_suffix(".jsonl")
    tsv.write_text(render_table(reports, include_timings))
    jsonl.write_text(
        "".join(rep.to_json(include_timings) + "\n" for rep in reports)
    )
    return [tsv, jsonl]


def load_reports(path: str | Path) -> list[BoundReport]:
    lines = Path(path).read_text().splitlines()
    return [BoundReport.from_json(line) for line in lines if line.strip()]
