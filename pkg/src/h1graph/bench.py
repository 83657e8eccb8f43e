"""Benchmark harness: four Erdos-Renyi categories, three timed algorithms.

Every benchmarked graph is a correctness tripwire: the three algorithms'
dimensions must agree or the run aborts naming the graph seed.  Times are
median wall-clock seconds quantized to microseconds; everything except the
time and ratio columns is a deterministic function of the category seed.
"""

from __future__ import annotations

import gc
import statistics
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, Dict, List, Sequence, Tuple, Union

from .cellular import h1_cellular
from .cubical import h1_cubical
from .cycles import simple_four_cycles, triangles
from .edgegraph import h1_edge_graph
from .errors import BenchDisagreementError, InputDomainError
from .generators import SplitMix64, erdos_renyi
from .graph import Graph

ALG_ORDER = ("cellular", "edge_graph", "cubical")
ALGORITHMS: Dict[str, Callable[[Graph], int]] = {
    "cellular": h1_cellular,
    "edge_graph": h1_edge_graph,
    "cubical": h1_cubical,
}

CSV_HEADER = (
    "graph_name,n,p,num_3_cycles,num_4_cycles,total_cycles,h1_dim,"
    "cellular_time,edge_graph_time,cubical_time,"
    "ratio_edgegraph_over_cellular,ratio_cubical_over_cellular,ratio_cubical_over_edgegraph,fastest"
)

IntRule = Union[int, Tuple[int, int]]
FloatRule = Union[float, Tuple[float, float]]


@dataclass(frozen=True)
class Category:
    """One benchmark category: fixed or uniformly random n and p."""

    id: int
    n_rule: IntRule
    p_rule: FloatRule
    count: int
    seed: int


@dataclass(frozen=True)
class BenchRow:
    graph_name: str
    n: int
    p: float
    tri_count: int
    quad_count: int
    cell_total: int
    h1_dim: int
    t_cellular: float
    t_edgegraph: float
    t_cubical: float
    ratio_eg_cell: float
    ratio_cub_cell: float
    ratio_cub_eg: float
    fastest: str


def _quantize(seconds: float) -> float:
    # Microsecond resolution with a 1us floor, so rows survive a CSV
    # round-trip exactly and ratios never divide by zero.
    q = round(seconds, 6)
    return q if q > 0 else 1e-6


def time_algorithm(alg: str, g: Graph, repeats: int, *, warmup: bool = True) -> float:
    """Median wall-clock seconds over `repeats` timed runs of the full
    algorithm (enumeration, matrix build, rank)."""
    if repeats < 1:
        raise InputDomainError(f"repeats must be >= 1, got {repeats}")
    fn = ALGORITHMS.get(alg)
    if fn is None:
        raise InputDomainError(f"unknown algorithm {alg!r}; expected one of {ALG_ORDER}")
    # GC pauses from earlier allocations would otherwise land on whichever
    # algorithm happens to run next and skew single-digit-ms medians.
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        if warmup:
            fn(g)
        times = []
        for _ in range(repeats):
            t0 = perf_counter()
            fn(g)
            times.append(perf_counter() - t0)
    finally:
        if was_enabled:
            gc.enable()
    return _quantize(statistics.median(times))


def _draw_int(rule: IntRule, rng: SplitMix64) -> int:
    if isinstance(rule, tuple):
        return rng.randint(rule[0], rule[1])
    return rule


def _draw_float(rule: FloatRule, rng: SplitMix64) -> float:
    if isinstance(rule, tuple):
        return rng.uniform(rule[0], rule[1])
    return rule


def run_category(cat: Category, *, repeats: int = 3) -> List[BenchRow]:
    """Benchmark `cat.count` graphs drawn deterministically from cat.seed.

    Per graph the draw order is: n (if ranged), p (if ranged), graph seed;
    fixed rules consume no draw.  Raises BenchDisagreementError naming the
    graph if the three algorithms ever disagree.
    """
    if cat.count < 0:
        raise InputDomainError(f"category count must be non-negative, got {cat.count}")
    stream = SplitMix64(cat.seed)
    rows: List[BenchRow] = []
    for i in range(cat.count):
        n = _draw_int(cat.n_rule, stream)
        p = _draw_float(cat.p_rule, stream)
        gseed = stream.next_u64()
        g = erdos_renyi(n, p, gseed)
        name = f"cat{cat.id}_g{i:03d}"
        tri = len(triangles(g))
        quad = len(simple_four_cycles(g))
        dims: Dict[str, int] = {}
        times: Dict[str, float] = {}
        for alg in ALG_ORDER:
            dims[alg] = ALGORITHMS[alg](g)  # doubles as the warm-up run
            times[alg] = time_algorithm(alg, g, repeats, warmup=False)
        if len(set(dims.values())) != 1:
            raise BenchDisagreementError(
                f"h1 disagreement on {name} (n={n}, p={p}, seed={gseed}): {dims}"
            )
        t_cell, t_eg, t_cub = (times[a] for a in ALG_ORDER)
        fastest = min(ALG_ORDER, key=lambda a: (times[a], ALG_ORDER.index(a)))
        rows.append(
            BenchRow(
                graph_name=name,
                n=n,
                p=p,
                tri_count=tri,
                quad_count=quad,
                cell_total=tri + quad,
                h1_dim=dims["cellular"],
                t_cellular=t_cell,
                t_edgegraph=t_eg,
                t_cubical=t_cub,
                ratio_eg_cell=round(t_eg / t_cell, 6),
                ratio_cub_cell=round(t_cub / t_cell, 6),
                ratio_cub_eg=round(t_cub / t_eg, 6),
                fastest=fastest,
            )
        )
    return rows


def format_detailed_csv(rows: Sequence[BenchRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.graph_name},{r.n},{r.p!r},{r.tri_count},{r.quad_count},{r.cell_total},{r.h1_dim},"
            f"{r.t_cellular:.6f},{r.t_edgegraph:.6f},{r.t_cubical:.6f},"
            f"{r.ratio_eg_cell:.6f},{r.ratio_cub_cell:.6f},{r.ratio_cub_eg:.6f},{r.fastest}"
        )
    return "\n".join(lines) + "\n"


def write_detailed_csv(rows: Sequence[BenchRow], path: str) -> None:
    """Write the benchmark CSV (UTF-8, newline-terminated, fixed header)."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(format_detailed_csv(rows))
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV to {path}: {exc}") from exc


def parse_detailed_csv(text: str) -> List[BenchRow]:
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise InputDomainError("benchmark CSV header does not match the expected schema")
    rows = []
    for ln in lines[1:]:
        f = ln.split(",")
        if len(f) != 14:
            raise InputDomainError(f"benchmark CSV row has {len(f)} fields, expected 14")
        rows.append(
            BenchRow(
                graph_name=f[0],
                n=int(f[1]),
                p=float(f[2]),
                tri_count=int(f[3]),
                quad_count=int(f[4]),
                cell_total=int(f[5]),
                h1_dim=int(f[6]),
                t_cellular=float(f[7]),
                t_edgegraph=float(f[8]),
                t_cubical=float(f[9]),
                ratio_eg_cell=float(f[10]),
                ratio_cub_cell=float(f[11]),
                ratio_cub_eg=float(f[12]),
                fastest=f[13],
            )
        )
    return rows


def fastest_counts(rows: Sequence[BenchRow]) -> Dict[str, int]:
    counts = {alg: 0 for alg in ALG_ORDER}
    for r in rows:
        counts[r.fastest] += 1
    return counts


def desk_categories(seed: int) -> List[Category]:
    """Shrunk copy of the paper-style experiment that runs on a laptop:
    same p regime, smaller n and counts."""
    return [
        Category(1, (40, 100), 0.07, 10, seed + 1),
        Category(2, (40, 100), 0.13, 10, seed + 2),
        Category(3, 60, (0.07, 0.13), 10, seed + 3),
        Category(4, 100, (0.07, 0.13), 10, seed + 4),
    ]


def paper_categories(seed: int) -> List[Category]:
    """The full-scale scheme: 200 graphs per category, n in [100, 300].
    Expect hours of runtime."""
    return [
        Category(1, (100, 300), 0.07, 200, seed + 1),
        Category(2, (100, 300), 0.13, 200, seed + 2),
        Category(3, 100, (0.07, 0.13), 200, seed + 3),
        Category(4, 300, (0.07, 0.13), 200, seed + 4),
    ]


def _parse_rule(value: str, *, as_int: bool) -> Union[IntRule, FloatRule]:
    conv = int if as_int else float
    if ".." in value:
        lo, hi = value.split("..", 1)
        return (conv(lo), conv(hi))
    return conv(value)


def load_bench_config(path: str) -> Tuple[List[Category], int, int]:
    """Read a key=value config; returns (categories, repeats, seed).

    Recognized keys: ``seed``, ``repeats``, and ``category.<id>.count`` /
    ``.n`` / ``.p`` where n and p accept either a value or ``lo..hi``.
    """
    seed = 2024
    repeats = 3
    cats: Dict[int, Dict[str, str]] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            content = fh.read()
    except OSError as exc:
        raise InputDomainError(f"cannot read bench config {path}: {exc}") from exc
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputDomainError(f"bench config line {lineno}: expected key = value")
        key, _, value = (s.strip() for s in line.partition("="))
        try:
            if key == "seed":
                seed = int(value)
            elif key == "repeats":
                repeats = int(value)
            elif key.startswith("category."):
                _, cid, attr = key.split(".", 2)
                cats.setdefault(int(cid), {})[attr] = value
            else:
                raise InputDomainError(f"bench config line {lineno}: unknown key {key!r}")
        except (ValueError, InputDomainError) as exc:
            if isinstance(exc, InputDomainError):
                raise
            raise InputDomainError(f"bench config line {lineno}: {exc}") from None
    categories = []
    for cid in sorted(cats):
        spec = cats[cid]
        missing = {"count", "n", "p"} - set(spec)
        if missing:
            raise InputDomainError(f"category {cid} is missing keys: {sorted(missing)}")
        categories.append(
            Category(
                id=cid,
                n_rule=_parse_rule(spec["n"], as_int=True),
                p_rule=_parse_rule(spec["p"], as_int=False),
                count=int(spec["count"]),
                seed=seed + cid,
            )
        )
    if not categories:
        categories = desk_categories(seed)
    return categories, repeats, seed
