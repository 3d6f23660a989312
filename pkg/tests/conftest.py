"""Shared helpers: independent distance oracle and seeded random instances.

The oracle deliberately avoids the package's BFS machinery so that tests
cross-check two implementations.
"""

from __future__ import annotations

import math
import random

from danforge import Demand, HostNetwork, normalize


def floyd_warshall(graph: HostNetwork) -> list[list[float]]:
    n = graph.n
    dist = [[math.inf] * n for _ in range(n)]
    for u in range(n):
        dist[u][u] = 0
    for u, v in graph.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == math.inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def random_graph(rnd: random.Random, n: int, m: int) -> HostNetwork:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return HostNetwork(n, rnd.sample(pairs, m))


def random_connected_graph(rnd: random.Random, n: int, extra: int) -> HostNetwork:
    edges = [(rnd.randrange(v), v) for v in range(1, n)]  # random spanning tree
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges += rnd.sample(pool, min(extra, len(pool)))
    return HostNetwork(n, edges)


def random_demand(rnd: random.Random, n: int, m: int, skew: float = 0.0) -> Demand:
    pairs = rnd.sample([(u, v) for u in range(n) for v in range(n) if u != v], m)
    weights = [(u, v, rnd.random() ** skew if skew else rnd.random()) for u, v in pairs]
    return normalize(weights, n=n)


def random_probs(rnd: random.Random, k: int) -> tuple[float, ...]:
    raw = [rnd.random() + 1e-6 for _ in range(k)]
    total = sum(raw)
    probs = [x / total for x in raw]
    probs[-1] = 1.0 - sum(probs[:-1])
    return tuple(probs)
