"""Undirected host networks, hop distances, EPL, and distortion metrics.

The host network is simple and unweighted; distances are hop counts.
Disconnected pairs evaluate to math.inf rather than raising, so search
and oracle code can rank candidate networks that fail to connect the
demand.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .demand import Demand
from .errors import NotConnected, ShapeMismatch

INFINITE = math.inf


class HostNetwork:
    """Immutable simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n <= 0:
            raise ValueError("node count must be positive")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:  # parallel edges merge silently
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self._m = len(seen)

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        return b in self.adj[a]

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "HostNetwork":
        return HostNetwork(self.n, self.edges() + list(extra))

    def __eq__(self, other):
        return (
            isinstance(other, HostNetwork)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"HostNetwork(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistortionReport:
    """Average distortions of a spanner against its base graph.

    nd averages spanner distance over the base graph's edges (whose base
    distance is 1); apd averages the distance ratio over all node pairs
    and is NaN when it was not computed.
    """

    nd: float
    apd: float
    max_demand_distortion: float


def demand_support(demand: Demand) -> HostNetwork:
    """Undirected support graph of a demand (direction dropped)."""
    return HostNetwork(demand.n, demand.undirected_support)


def bfs_distances(graph: HostNetwork, src: int) -> list[float]:
    """Hop counts from src to every node; INFINITE where unreachable."""
    if not (0 <= src < graph.n):
        raise ValueError(f"source {src} outside 0..{graph.n - 1}")
    dist: list[float] = [INFINITE] * graph.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in graph.adj[u]:
            if dist[w] == INFINITE:
                dist[w] = du
                q.append(w)
    return dist


def distances_to_targets(
    graph: HostNetwork, src: int, targets: Iterable[int]
) -> dict[int, float]:
    """BFS from src that stops once every target has been reached.

    Visited state is a dict so repeated calls stay proportional to the
    explored region, not to the node count.
    """
    want = set(targets)
    out: dict[int, float] = {}
    if src in want:
        out[src] = 0
        want.discard(src)
    if not want:
        return out
    dist = {src: 0}
    q = deque([src])
    while q and want:
        u = q.popleft()
        du = dist[u] + 1
        for w in graph.adj[u]:
            if w not in dist:
                dist[w] = du
                if w in want:
                    out[w] = du
                    want.discard(w)
                    if not want:
                        break
                q.append(w)
    for t in want:
        out[t] = INFINITE
    return out


def is_connected(graph: HostNetwork) -> bool:
    return graph.n == 1 or all(d != INFINITE for d in bfs_distances(graph, 0))


def epl(demand: Demand, graph: HostNetwork) -> float:
    """Expected path length sum p(u,v) * d(u,v) over the demand support.

    Returns INFINITE as soon as any demanded pair is disconnected.
    """
    if demand.n != graph.n:
        raise ShapeMismatch(f"demand has n={demand.n}, network has n={graph.n}")
    terms = []
    for src, pairs in demand.rows.items():
        dist = distances_to_targets(graph, src, [d for d, _ in pairs])
        for dst, p in pairs:
            if dist[dst] == INFINITE:
                return INFINITE
            terms.append(p * dist[dst])
    return math.fsum(terms)


def degree_stats(graph: HostNetwork) -> tuple[int, float]:
    """(maximum degree, average degree)."""
    degs = [len(nb) for nb in graph.adj]
    return max(degs), sum(degs) / graph.n


def neighborhood_distortion(base: HostNetwork, spanner: HostNetwork) -> float:
    """Mean spanner distance over the base graph's edges (ND).

    Base edges have distance 1, so no ratio is needed; INFINITE if the
    spanner disconnects any base edge.
    """
    if base.n != spanner.n:
        raise ShapeMismatch(f"base has n={base.n}, spanner has n={spanner.n}")
    if base.m == 0:
        raise ValueError("base graph has no edges")
    by_src: dict[int, list[int]] = {}
    for u, v in base.edges():
        by_src.setdefault(u, []).append(v)
    terms = []
    for u, targets in by_src.items():
        dist = distances_to_targets(spanner, u, targets)
        for v in targets:
            if dist[v] == INFINITE:
                return INFINITE
            terms.append(dist[v])
    return math.fsum(terms) / base.m


def all_pairs_distortion(base: HostNetwork, spanner: HostNetwork) -> float:
    """Mean of d_spanner/d_base over all unordered node pairs (APD)."""
    if base.n != spanner.n:
        raise ShapeMismatch(f"base has n={base.n}, spanner has n={spanner.n}")
    if base.n < 2:
        raise ValueError("need at least two nodes")
    if not is_connected(base):
        raise NotConnected("all-pairs distortion needs a connected base graph")
    terms = []
    for u in range(base.n):
        db = bfs_distances(base, u)
        ds = bfs_distances(spanner, u)
        for v in range(u + 1, base.n):
            if ds[v] == INFINITE:
                return INFINITE
            terms.append(ds[v] / db[v])
    return math.fsum(terms) / (base.n * (base.n - 1) / 2)


def max_edge_distortion(base: HostNetwork, spanner: HostNetwork) -> float:
    """Largest spanner distance over the base graph's edges."""
    worst = 0.0
    by_src: dict[int, list[int]] = {}
    for u, v in base.edges():
        by_src.setdefault(u, []).append(v)
    for u, targets in by_src.items():
        dist = distances_to_targets(spanner, u, targets)
        for v in targets:
            if dist[v] == INFINITE:
                return INFINITE
            worst = max(worst, dist[v])
    return worst


def distortion_report(
    base: HostNetwork, spanner: HostNetwork, with_apd: bool = True
) -> DistortionReport:
    apd = math.nan
    if with_apd and is_connected(base):
        apd = all_pairs_distortion(base, spanner)
    return DistortionReport(
        nd=neighborhood_distortion(base, spanner),
        apd=apd,
        max_demand_distortion=max_edge_distortion(base, spanner),
    )


# -- file formats -----------------------------------------------------------
#
# Text:  first line "n m", then one "u v" line per undirected edge.
# JSON:  {"n": int, "edges": [[u, v], ...]}


def graph_to_text(graph: HostNetwork) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> HostNetwork:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n, m = map(int, lines[0].split())
    edges = [tuple(map(int, ln.split())) for ln in lines[1 : m + 1]]
    if len(edges) != m:
        raise ValueError(f"header claims {m} edges, found {len(edges)}")
    return HostNetwork(n, edges)


def load_graph(path) -> HostNetwork:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        return HostNetwork(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    return graph_from_text(text)


def save_graph(graph: HostNetwork, path) -> None:
    path = str(path)
    with open(path, "w") as fh:
        if path.endswith(".json"):
            json.dump({"n": graph.n, "edges": [list(e) for e in graph.edges()]}, fh)
            fh.write("\n")
        else:
            fh.write(graph_to_text(graph))
