"""Experiment suites and CSV emission.

Each suite builds a deterministic list of instances from a seed, runs the
relevant constructions, and emits one BenchRecord per (instance, algo).
Instances run independently (DANFORGE_THREADS caps the worker pool) and
records are sorted before emission, so output is stable; the wall_time_ms
column is the one measured, non-reproducible field.
"""

from __future__ import annotations

import math
import os
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Callable

from . import bounds, construct, generators, netgraph, spanners
from .demand import Demand, classify, entropy_stats
from .errors import BadSpec
from .generators import GenSpec
from .rng import substream

SUITES = (
    "sandwich",
    "tree_family",
    "sparse_family",
    "ldd_family",
    "hypercube_family",
    "distortion_divergence",
)


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    family: str
    n: int
    m: int
    algo: str
    delta_bound_claimed: float
    max_degree_observed: int
    epl: float
    h_xy: float
    h_yx: float
    lower_bound: float
    ratio_epl_over_entropy: float
    wall_time_ms: float


CSV_COLUMNS = tuple(f.name for f in fields(BenchRecord))


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def records_to_csv(records: list[BenchRecord]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        lines.append(",".join(_fmt(getattr(rec, col)) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def threads_from_env() -> int:
    try:
        return max(1, int(os.environ.get("DANFORGE_THREADS", "1")))
    except ValueError:
        return 1


def _report_record(instance, family, demand, report, started) -> BenchRecord:
    lb = bounds.entropy_lower_bound(demand, max(2, report.max_degree))
    return BenchRecord(
        instance=instance,
        family=family,
        n=demand.n,
        m=demand.m,
        algo=report.algo,
        delta_bound_claimed=report.claimed_max_degree,
        max_degree_observed=report.max_degree,
        epl=report.epl,
        h_xy=report.hx_given_y,
        h_yx=report.hy_given_x,
        lower_bound=lb.lower_bound,
        ratio_epl_over_entropy=report.ratio,
        wall_time_ms=(time.perf_counter() - started) * 1e3,
    )


def _small_demand(i: int, seed: int) -> tuple[str, Demand]:
    n = 4 + i % 3
    family = ("sparse_random", "tree", "complete_uniform")[i % 3]
    skew = float(i % 3)
    sub = substream(seed, i).next_u64()
    if family == "sparse_random":
        spec = GenSpec("sparse_random", n=n, edges=2 * n, seed=sub, skew=skew)
    elif family == "tree":
        spec = GenSpec("tree", n=n, seed=sub, skew=skew)
    else:
        spec = GenSpec("complete_uniform", n=n)
    return family, generators.generate(spec)


def _sandwich_instance(i: int, seed: int) -> list[BenchRecord]:
    family, demand = _small_demand(i, seed)
    name = f"{i:03d}-{family}"
    records = []
    for delta in (2, 3):
        started = time.perf_counter()
        oracle = bounds.brute_force_bnd(demand, delta)
        lb = bounds.entropy_lower_bound(demand, delta)
        stats = entropy_stats(demand, 2.0)
        bound = stats.hx_given_y + stats.hy_given_x
        records.append(
            BenchRecord(
                instance=name,
                family=family,
                n=demand.n,
                m=demand.m,
                algo=f"oracle-d{delta}",
                delta_bound_claimed=delta,
                max_degree_observed=max(len(a) for a in oracle.witness.adj),
                epl=oracle.optimum,
                h_xy=stats.hx_given_y,
                h_yx=stats.hy_given_x,
                lower_bound=lb.lower_bound,
                ratio_epl_over_entropy=oracle.optimum / (bound + 2.0),
                wall_time_ms=(time.perf_counter() - started) * 1e3,
            )
        )
    for builder in _applicable_builders(demand):
        started = time.perf_counter()
        report = builder(demand)
        records.append(_report_record(name, family, demand, report, started))
    return records


def _applicable_builders(demand: Demand) -> list[Callable]:
    builders: list[Callable] = []
    if classify(demand).is_tree:
        builders.append(construct.build_tree_dan)
    builders.append(construct.build_sparse_dan)
    builders.append(lambda d: construct.build_dary_dan(d, 2))
    builders.append(lambda d: construct.build_dary_dan(d, 3))
    return builders


def _tree_instance(i: int, seed: int) -> list[BenchRecord]:
    n = 10 + (i * 37) % 191
    spec = GenSpec("tree", n=n, seed=substream(seed, i).next_u64(), skew=float(i % 3))
    demand = generators.generate(spec)
    started = time.perf_counter()
    report = construct.build_tree_dan(demand)
    return [_report_record(f"{i:03d}-tree-n{n}", "tree", demand, report, started)]


def _sparse_instance(i: int, seed: int) -> list[BenchRecord]:
    n = 20 + (i * 29) % 181
    spec = GenSpec(
        "sparse_random",
        n=n,
        edges=3 * n,
        seed=substream(seed, i).next_u64(),
        skew=float(i % 3),
    )
    demand = generators.generate(spec)
    started = time.perf_counter()
    report = construct.build_sparse_dan(demand)
    return [
        _report_record(f"{i:03d}-sparse-n{n}", "sparse_random", demand, report, started)
    ]


def _ldd_instance(side: int, variant: str) -> list[BenchRecord]:
    spec = GenSpec("thick_grid", rows=side, cols=side, radius=2)
    demand = generators.generate(spec)
    support = netgraph.demand_support(demand)
    started = time.perf_counter()
    result = spanners.build_ldd_spanner(support, variant)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # thick grids are uniform but not regular
        report = construct.spanner_to_dan(demand, result.spanner)
    rec = _report_record(
        f"grid{side:02d}-{variant}", "thick_grid", demand, report, started
    )
    return [rec]


def _hypercube_instance(d: int) -> list[BenchRecord]:
    demand = generators.generate(GenSpec("hypercube", d=d))
    started = time.perf_counter()
    result = spanners.hypercube_spanner(d)
    report = construct.spanner_to_dan(demand, result.spanner)
    name = f"cube-d{d:02d}"
    stats = entropy_stats(demand, 2.0)
    spanner_rec = BenchRecord(
        instance=name,
        family="hypercube",
        n=demand.n,
        m=demand.m,
        algo="hypercube-spanner",
        delta_bound_claimed=math.nan,
        max_degree_observed=max(len(a) for a in result.spanner.adj),
        epl=netgraph.epl(demand, result.spanner),
        h_xy=stats.hx_given_y,
        h_yx=stats.hy_given_x,
        lower_bound=math.nan,
        ratio_epl_over_entropy=math.nan,
        wall_time_ms=(time.perf_counter() - started) * 1e3,
    )
    started = time.perf_counter()
    return [
        spanner_rec,
        _report_record(name, "hypercube", demand, report, started),
    ]


def _divergence_instance(family: str, n: int) -> list[BenchRecord]:
    spec = GenSpec(family, n=n)
    demand = generators.generate(spec)
    support = netgraph.demand_support(demand)
    spanner = generators.family_spanner(spec)
    stats = entropy_stats(demand, 2.0)
    records = []
    for algo, metric in (
        ("spanner-nd", netgraph.neighborhood_distortion),
        ("spanner-apd", netgraph.all_pairs_distortion),
    ):
        started = time.perf_counter()
        value = metric(support, spanner)
        records.append(
            BenchRecord(
                instance=f"{family}-n{n:04d}",
                family=family,
                n=demand.n,
                m=demand.m,
                algo=algo,
                delta_bound_claimed=math.nan,
                max_degree_observed=max(len(a) for a in spanner.adj),
                epl=value,
                h_xy=stats.hx_given_y,
                h_yx=stats.hy_given_x,
                lower_bound=math.nan,
                ratio_epl_over_entropy=math.nan,
                wall_time_ms=(time.perf_counter() - started) * 1e3,
            )
        )
    return records


def _suite_jobs(name: str, seed: int) -> list[Callable[[], list[BenchRecord]]]:
    if name == "sandwich":
        return [lambda i=i: _sandwich_instance(i, seed) for i in range(12)]
    if name == "tree_family":
        return [lambda i=i: _tree_instance(i, seed) for i in range(20)]
    if name == "sparse_family":
        return [lambda i=i: _sparse_instance(i, seed) for i in range(20)]
    if name == "ldd_family":
        return [
            lambda s=s, v=v: _ldd_instance(s, v)
            for s in (10, 14, 20)
            for v in ("subgraph", "metric")
        ]
    if name == "hypercube_family":
        return [lambda d=d: _hypercube_instance(d) for d in range(4, 9)]
    if name == "distortion_divergence":
        return [
            lambda f=f, n=n: _divergence_instance(f, n)
            for f in ("clique_lines", "star_of_cliques")
            for n in (64, 256, 1024)
        ]
    raise BadSpec(f"unknown suite {name!r}; known: {', '.join(SUITES)}")


def run_suite(name: str, seed: int = 0, threads: int | None = None) -> list[BenchRecord]:
    jobs = _suite_jobs(name, seed)
    if threads is None:
        threads = threads_from_env()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda job: job(), jobs))
    else:
        chunks = [job() for job in jobs]
    records = [rec for chunk in chunks for rec in chunk]
    records.sort(key=lambda r: (r.instance, r.algo))
    return records
