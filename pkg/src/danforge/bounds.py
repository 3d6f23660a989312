"""Entropy lower bound for bounded network design, plus exhaustive oracles.

The lower bound instantiates the tree-entropy inequality with all
logarithms at base delta: any delta-ary tree T satisfies
H_delta(p) <= log_delta(delta+1) * (epl(p, T) + 1), hence every
degree-delta network serves a demand no faster than
max(H_delta(Y|X), H_delta(X|Y)) / log_delta(delta+1) - 1, clamped at 1
because demanded pairs are distinct.

The oracles are deliberately independent of the constructions they check:
optimal bounded-degree networks by exhaustive edge-subset enumeration on
tiny instances, and optimal prefix codes by depth-vector enumeration under
the integer Kraft inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .demand import Demand, Distribution, conditional_entropy
from .errors import BadArity, TooLarge
from .netgraph import HostNetwork, demand_support

EPL_TIE_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Concrete entropy lower bound at degree `delta`."""

    delta: int
    hx_given_y: float
    hy_given_x: float
    raw_omega: float
    lower_bound: float

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "h_xy": self.hx_given_y,
            "h_yx": self.hy_given_x,
            "raw_omega": self.raw_omega,
            "lower_bound": self.lower_bound,
        }


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    witness: HostNetwork
    searched: int


def entropy_lower_bound(demand: Demand, delta: int) -> BoundReport:
    """Lower bound on the EPL of any max-degree-delta network for `demand`."""
    if delta < 2:
        raise BadArity(f"delta must be >= 2, got {delta}")
    hxy = conditional_entropy(demand, "x_given_y", delta)
    hyx = conditional_entropy(demand, "y_given_x", delta)
    raw = max(hxy, hyx)
    log_d_d1 = math.log2(delta + 1) / math.log2(delta)
    return BoundReport(
        delta=delta,
        hx_given_y=hxy,
        hy_given_x=hyx,
        raw_omega=raw,
        lower_bound=max(1.0, raw / log_d_d1 - 1.0),
    )


def brute_force_bnd(demand: Demand, delta: int, n_max: int = 7) -> OracleResult:
    """Exact minimum EPL over all simple graphs with max degree <= delta.

    Enumerates edge subsets depth-first with degree pruning.  Adding an
    edge never increases EPL, so only maximal feasible graphs are
    evaluated; the witness is the lexicographically smallest maximal edge
    set attaining the optimum (ties within 1e-12).  When the demand's own
    support fits the degree bound it is returned directly with optimum 1.

    `searched` counts the EPL evaluations performed.
    """
    n = demand.n
    if n > n_max:
        raise TooLarge(f"n={n} exceeds n_max={n_max}")
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")

    support = demand_support(demand)
    if max(len(a) for a in support.adj) <= delta:
        return OracleResult(1.0, support, 1)

    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rows = []
    for src in sorted(demand.rows):
        pairs = demand.rows[src]
        tmask = 0
        for dst, _ in pairs:
            tmask |= 1 << dst
        rows.append((src, tmask, pairs))

    best_epl = math.inf
    best_edges: tuple | None = None
    searched = 0
    deg = [0] * n
    adj = [0] * n  # neighbor bitmask per node
    chosen: list[tuple[int, int]] = []

    def evaluate() -> float:
        total = 0.0
        for src, tmask, pairs in rows:
            visited = 1 << src
            frontier = visited
            remaining = tmask & ~visited
            d = 0
            hits: dict[int, int] = {}
            while remaining:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    nxt |= adj[b.bit_length() - 1]
                    f ^= b
                nxt &= ~visited
                if not nxt:
                    return math.inf
                d += 1
                visited |= nxt
                hit = remaining & nxt
                if hit:
                    hits[d] = hit
                    remaining &= ~hit
                frontier = nxt
            for dst, p in pairs:
                for d, mask in hits.items():
                    if mask >> dst & 1:
                        total += p * d
                        break
            if total > best_epl + EPL_TIE_TOL:
                return total
        return total

    def is_maximal() -> bool:
        for u, v in all_edges:
            if deg[u] < delta and deg[v] < delta and not adj[u] >> v & 1:
                return False
        return True

    def dfs(i: int) -> None:
        nonlocal best_epl, best_edges, searched
        if i == len(all_edges):
            if not is_maximal():
                return
            searched += 1
            value = evaluate()
            key = tuple(chosen)
            better = value < best_epl - EPL_TIE_TOL
            tie = value == best_epl or abs(value - best_epl) <= EPL_TIE_TOL
            if better or (tie and (best_edges is None or key < best_edges)):
                best_epl = value
                best_edges = key
            return
        u, v = all_edges[i]
        if deg[u] < delta and deg[v] < delta:
            deg[u] += 1
            deg[v] += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            chosen.append((u, v))
            dfs(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
        dfs(i + 1)

    dfs(0)
    assert best_edges is not None
    return OracleResult(best_epl, HostNetwork(n, best_edges), searched)


def exhaustive_prefix_code(dist: Distribution, delta: int, k_max: int = 8) -> float:
    """Exact optimal expected depth of a delta-ary prefix code for `dist`.

    Enumerates nondecreasing depth vectors against the heaviest-first
    probabilities under the exact (integer) Kraft inequality
    sum delta^-l_i <= 1.  Depths beyond support-1 never help.
    """
    if delta < 2:
        raise BadArity(f"delta must be >= 2, got {delta}")
    probs = sorted((p for p in dist.probs if p > 0.0), reverse=True)
    k = len(probs)
    if k == 0:
        raise ValueError("distribution has empty support")
    if k > k_max:
        raise TooLarge(f"support {k} exceeds k_max={k_max}")
    if k == 1:
        return 0.0

    max_depth = k - 1
    budget = delta**max_depth  # Kraft scaled by delta^max_depth
    cost = [delta ** (max_depth - l) for l in range(max_depth + 1)]
    tail_min = cost[max_depth]
    best = math.inf

    def dfs(i: int, min_depth: int, used: int, acc: float) -> None:
        nonlocal best
        if acc >= best:
            return
        if i == k:
            best = acc
            return
        remaining = k - i
        for l in range(min_depth, max_depth + 1):
            u = used + cost[l]
            if u + (remaining - 1) * tail_min > budget:
                continue
            dfs(i + 1, l, u, acc + probs[i] * l)

    dfs(0, 1, 0, 0.0)
    return best
