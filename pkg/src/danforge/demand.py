"""Communication demand distributions over ordered node pairs.

A demand is a normalized joint distribution p(src, dst) on pairs of
distinct nodes.  Its positive support, read as a directed weighted graph,
is the guest network that a host topology has to serve.  This module owns
validation, marginals, row/column conditionals, entropy at arbitrary
logarithm base, and the structural flags (regular / uniform / symmetric /
tree) that route demands to the right construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from collections.abc import Iterable, Mapping
from functools import cached_property

from .errors import BadBase, EmptyDemand, NoMass, SelfLoop

TOLERANCE = 1e-9

Entry = tuple[int, int, float]


@dataclass(frozen=True)
class Distribution:
    """Probability vector indexed by node id (or by category)."""

    probs: tuple[float, ...]

    def __post_init__(self):
        if any(p < 0.0 for p in self.probs):
            raise ValueError("probabilities must be nonnegative")
        total = math.fsum(self.probs)
        if abs(total - 1.0) > TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")

    def __len__(self) -> int:
        return len(self.probs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0.0)

    def items(self) -> list[tuple[int, float]]:
        """(index, probability) pairs over the positive support."""
        return [(i, p) for i, p in enumerate(self.probs) if p > 0.0]


@dataclass(frozen=True)
class EntropyStats:
    """Marginal and conditional entropies of a demand at one log base."""

    base: float
    hx: float
    hy: float
    hx_given_y: float
    hy_given_x: float

    def __post_init__(self):
        if self.hx_given_y > self.hx + TOLERANCE:
            raise ValueError("H(X|Y) exceeds H(X)")
        if self.hy_given_x > self.hy + TOLERANCE:
            raise ValueError("H(Y|X) exceeds H(Y)")


@dataclass(frozen=True)
class DemandFlags:
    regular: bool
    uniform: bool
    symmetric: bool
    is_tree: bool
    avg_degree: float


@dataclass(frozen=True)
class Demand:
    """Normalized demand over ordered pairs of distinct nodes 0..n-1.

    Only positive entries are stored; entries are kept sorted by
    (src, dst) so equal demands compare equal.
    """

    n: int
    entries: tuple[Entry, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("node count must be positive")
        if not self.entries:
            raise EmptyDemand("demand has no entries")
        seen = set()
        for src, dst, p in self.entries:
            if src == dst:
                raise SelfLoop(f"self-loop at node {src}")
            if not (0 <= src < self.n and 0 <= dst < self.n):
                raise ValueError(f"entry ({src},{dst}) outside 0..{self.n - 1}")
            if p <= 0.0:
                raise ValueError("stored probabilities must be positive")
            if (src, dst) in seen:
                raise ValueError(f"duplicate entry for pair ({src},{dst})")
            seen.add((src, dst))
        total = math.fsum(p for _, _, p in self.entries)
        if abs(total - 1.0) > TOLERANCE:
            raise ValueError(f"demand sums to {total!r}, expected 1")
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    # -- indexed views (built lazily, the dataclass stays immutable) --

    @cached_property
    def prob(self) -> dict[tuple[int, int], float]:
        return {(s, d): p for s, d, p in self.entries}

    @cached_property
    def rows(self) -> dict[int, list[tuple[int, float]]]:
        """src -> [(dst, p)] over the positive support."""
        rows: dict[int, list[tuple[int, float]]] = {}
        for s, d, p in self.entries:
            rows.setdefault(s, []).append((d, p))
        return rows

    @cached_property
    def cols(self) -> dict[int, list[tuple[int, float]]]:
        """dst -> [(src, p)] over the positive support."""
        cols: dict[int, list[tuple[int, float]]] = {}
        for s, d, p in self.entries:
            cols.setdefault(d, []).append((s, p))
        return cols

    @cached_property
    def undirected_support(self) -> tuple[tuple[int, int], ...]:
        """Support edges with direction ignored, as sorted (u, v), u < v."""
        return tuple(sorted({(min(s, d), max(s, d)) for s, d, _ in self.entries}))

    @property
    def m(self) -> int:
        """Number of directed support edges."""
        return len(self.entries)

    def p(self, src: int, dst: int) -> float:
        return self.prob.get((src, dst), 0.0)


def normalize(raw_entries, n: int | None = None) -> Demand:
    """Build a Demand from nonnegative weights, dividing by their total.

    Accepts a mapping {(src, dst): w} or an iterable of (src, dst, w)
    triples; repeated pairs in an iterable are summed.  Zero-weight pairs
    are dropped, but a self-loop is rejected even at weight zero.
    """
    if isinstance(raw_entries, Mapping):
        triples: Iterable = ((s, d, w) for (s, d), w in raw_entries.items())
    else:
        triples = raw_entries
    acc: dict[tuple[int, int], float] = {}
    max_id = -1
    for src, dst, w in triples:
        if src == dst:
            raise SelfLoop(f"self-loop at node {src}")
        if w < 0.0:
            raise ValueError(f"negative weight for pair ({src},{dst})")
        max_id = max(max_id, src, dst)
        if w > 0.0:
            acc[(src, dst)] = acc.get((src, dst), 0.0) + w
    if not acc:
        raise EmptyDemand("all weights are zero")
    if n is None:
        n = max_id + 1
    total = math.fsum(acc.values())
    return Demand(n, tuple((s, d, w / total) for (s, d), w in acc.items()))


def marginals(demand: Demand) -> tuple[Distribution, Distribution]:
    """Source and destination marginals p(i) = sum_j p(i,j), q(j) = sum_i p(i,j)."""
    src = [0.0] * demand.n
    dst = [0.0] * demand.n
    for s, d, p in demand.entries:
        src[s] += p
        dst[d] += p
    return Distribution(tuple(src)), Distribution(tuple(dst))


def conditional_dist(demand: Demand, node: int, direction: str) -> Distribution:
    """Row (direction='out') or column ('in') of the demand, renormalized.

    'out' is the distribution of destinations given the source is `node`;
    'in' the distribution of sources given the destination is `node`.
    """
    if direction == "out":
        pairs = demand.rows.get(node, [])
    elif direction == "in":
        pairs = demand.cols.get(node, [])
    else:
        raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
    mass = math.fsum(p for _, p in pairs)
    if mass <= 0.0:
        raise NoMass(f"node {node} has zero {direction}-marginal")
    probs = [0.0] * demand.n
    for other, p in pairs:
        probs[other] = p / mass
    return Distribution(tuple(probs))


def _entropy_bits(values) -> float:
    return math.fsum(p * math.log2(1.0 / p) for p in values if p > 0.0)


def entropy(dist, base: float) -> float:
    """Shannon entropy sum p*log_base(1/p); 0*log(1/0) counts as 0.

    `dist` may be a Distribution or any iterable of probabilities.
    """
    if base <= 1.0:
        raise BadBase(f"logarithm base must be > 1, got {base}")
    values = dist.probs if isinstance(dist, Distribution) else tuple(dist)
    return _entropy_bits(values) / math.log2(base)


def conditional_entropy(demand: Demand, direction: str, base: float) -> float:
    """H(X|Y) (direction='x_given_y') or H(Y|X) ('y_given_x') at `base`.

    H(Y|X) = sum_i p(i) H(row_i); H(X|Y) = sum_j q(j) H(col_j).  The two
    are not equal in general.
    """
    if base <= 1.0:
        raise BadBase(f"logarithm base must be > 1, got {base}")
    if direction == "y_given_x":
        groups = demand.rows
    elif direction == "x_given_y":
        groups = demand.cols
    else:
        raise ValueError(
            f"direction must be 'x_given_y' or 'y_given_x', got {direction!r}"
        )
    total = 0.0
    for _, pairs in groups.items():
        mass = math.fsum(p for _, p in pairs)
        h = _entropy_bits(p / mass for _, p in pairs)
        total += mass * h
    return total / math.log2(base)


def entropy_stats(demand: Demand, base: float = 2.0) -> EntropyStats:
    src, dst = marginals(demand)
    return EntropyStats(
        base=base,
        hx=entropy(src, base),
        hy=entropy(dst, base),
        hx_given_y=conditional_entropy(demand, "x_given_y", base),
        hy_given_x=conditional_entropy(demand, "y_given_x", base),
    )


def directed_avg_degree(demand: Demand) -> float:
    """Average of in-degree + out-degree in the support graph, i.e. 2m/n."""
    return 2.0 * demand.m / demand.n


def classify(demand: Demand) -> DemandFlags:
    """Structural flags of the support graph plus its undirected avg degree."""
    out_deg = [0] * demand.n
    in_deg = [0] * demand.n
    for s, d, _ in demand.entries:
        out_deg[s] += 1
        in_deg[d] += 1
    regular = len(set(out_deg)) == 1 and len(set(in_deg)) == 1
    inv_m = 1.0 / demand.m
    uniform = all(abs(p - inv_m) <= TOLERANCE for _, _, p in demand.entries)
    symmetric = all(
        abs(p - demand.p(d, s)) <= TOLERANCE for s, d, p in demand.entries
    )
    und = demand.undirected_support
    return DemandFlags(
        regular=regular,
        uniform=uniform,
        symmetric=symmetric,
        is_tree=_is_spanning_tree(demand.n, und),
        avg_degree=2.0 * len(und) / demand.n,
    )


def _is_spanning_tree(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    if len(edges) != n - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# -- JSON interchange ------------------------------------------------------
#
# {"n": int, "entries": [{"src": int, "dst": int, "w": float}, ...],
#  "normalized": bool}
#
# Extra top-level keys (e.g. generator metadata under "meta") are ignored
# on load and preserved by the generators when writing.


def demand_from_dict(obj: dict) -> Demand:
    n = int(obj["n"])
    triples = [(int(e["src"]), int(e["dst"]), float(e["w"])) for e in obj["entries"]]
    if obj.get("normalized", False):
        return Demand(n, tuple(triples))
    return normalize(triples, n=n)


def demand_to_dict(demand: Demand, meta: dict | None = None) -> dict:
    obj: dict = {
        "n": demand.n,
        "entries": [{"src": s, "dst": d, "w": p} for s, d, p in demand.entries],
        "normalized": True,
    }
    if meta:
        obj["meta"] = meta
    return obj


def load_demand(path) -> Demand:
    with open(path) as fh:
        return demand_from_dict(json.load(fh))


def save_demand(demand: Demand, path, meta: dict | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(demand_to_dict(demand, meta), fh, sort_keys=True)
        fh.write("\n")
