"""Bounded-degree demand-aware network constructions.

Four builders, all returning a BuildReport against the base-2 conditional
entropy bound of the demand:

* tree demands: per-node replacement of child edges by near-optimal
  binary trees, one outgoing and one incoming phase (max degree 8);
* general sparse demands: helper-node subdivision of edges between
  high-out and high-in nodes, then per-row/per-column binary trees
  (max degree 12 * ceil(avg degree));
* degree reduction of an arbitrary host graph via helper subdivision and
  balanced neighborhood trees, with a per-edge stretch certificate;
* complete d-ary tree hosts for dense, high-min-degree demands.

Degree reduction also powers the spanner-to-network pipeline: feed it a
sparse low-distortion spanner of the demand's support and the result is a
constant-degree host whose EPL inflates by at most twice the certificate's
log-degree stretch.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass

from .demand import (
    Demand,
    Distribution,
    classify,
    directed_avg_degree,
    entropy_stats,
)
from .errors import ShapeMismatch, WrongFamily
from .netgraph import HostNetwork, distances_to_targets, epl
from .trees import balanced_tree, huffman_dary, promote_leaves

HelperAssignment = tuple[int, tuple[int, int]]


@dataclass(frozen=True)
class BuildReport:
    """Designed network plus the quantities its guarantees are stated in.

    entropy_bound is H(X|Y) + H(Y|X) at base 2; ratio is
    epl / (entropy_bound + 2).
    """

    algo: str
    network: HostNetwork
    max_degree: int
    epl: float
    hx_given_y: float
    hy_given_x: float
    entropy_bound: float
    ratio: float
    claimed_max_degree: float
    helpers: tuple[HelperAssignment, ...] = ()

    def __post_init__(self):
        actual = max(len(a) for a in self.network.adj)
        if actual != self.max_degree:
            raise ValueError(
                f"max_degree={self.max_degree} but network has {actual}"
            )

    def to_json(self) -> dict:
        return {
            "algo": self.algo,
            "max_degree": self.max_degree,
            "claimed_max_degree": self.claimed_max_degree,
            "epl": self.epl,
            "h_xy": self.hx_given_y,
            "h_yx": self.hy_given_x,
            "ratio": self.ratio,
            "helpers": [[h, list(e)] for h, e in self.helpers],
        }


@dataclass(frozen=True)
class ReductionCertificate:
    """Audit trail of a degree reduction.

    edge_stretch lists (u, v, d') for every original edge; every d' is
    guaranteed <= stretch_bound = max(1, 2 * ceil(log2 max_degree)).
    """

    helpers: tuple[HelperAssignment, ...]
    edge_stretch: tuple[tuple[int, int, float], ...]
    max_stretch: float
    stretch_bound: float
    avg_degree_in: float
    claimed_max_degree: float


def _report(algo, demand, network, claimed, helpers=()) -> BuildReport:
    stats = entropy_stats(demand, 2.0)
    bound = stats.hx_given_y + stats.hy_given_x
    value = epl(demand, network)
    return BuildReport(
        algo=algo,
        network=network,
        max_degree=max(len(a) for a in network.adj),
        epl=value,
        hx_given_y=stats.hx_given_y,
        hy_given_x=stats.hy_given_x,
        entropy_bound=bound,
        ratio=value / (bound + 2.0),
        claimed_max_degree=claimed,
        helpers=tuple(helpers),
    )


def _tree_edges(hub: int, weighted: list[tuple[int, float]], n: int, arity: int = 2):
    """Edges of a promoted near-optimal `arity`-ary tree hung off `hub`."""
    mass = math.fsum(w for _, w in weighted)
    probs = [0.0] * n
    for item, w in weighted:
        probs[item] = w / mass
    tree = promote_leaves(huffman_dary(Distribution(tuple(probs)), arity))
    return tree.item_edges(hub)


def _pick_root(demand: Demand, root, adj) -> int:
    if isinstance(root, int):
        if not (0 <= root < demand.n):
            raise ValueError(f"root {root} outside 0..{demand.n - 1}")
        return root
    if root != "centroid":
        raise ValueError(f"root must be 'centroid' or a node id, got {root!r}")
    # weighted centroid: minimize the heaviest component left by removing v,
    # with node weight = source marginal + destination marginal
    n = demand.n
    weight = [0.0] * n
    for s, d, p in demand.entries:
        weight[s] += p
        weight[d] += p
    total = math.fsum(weight)
    parent = [-2] * n
    order = []
    parent[0] = -1
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if parent[w] == -2:
                parent[w] = u
                stack.append(w)
    subtree = weight[:]
    for u in reversed(order):
        if parent[u] >= 0:
            subtree[parent[u]] += subtree[u]
    best, best_score = 0, math.inf
    for v in range(n):
        score = total - subtree[v]
        for w in adj[v]:
            if parent[w] == v:
                score = max(score, subtree[w])
        if score < best_score - 1e-15:
            best, best_score = v, score
    return best


def build_tree_dan(demand: Demand, root="centroid") -> BuildReport:
    """Max-degree-8 network for a demand whose support is a spanning tree.

    Rooting the support, each node's edges to its children are replaced by
    a near-optimal binary tree over the child-only outgoing distribution,
    then a second phase does the same for incoming child edges.  Each node
    lands in at most two trees per phase (its own, degree 1, and its
    parent's, degree <= 3), hence degree <= 8.
    """
    flags = classify(demand)
    if not flags.is_tree:
        raise WrongFamily("support graph is not a spanning tree")
    n = demand.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in demand.undirected_support:
        adj[u].append(v)
        adj[v].append(u)

    r = _pick_root(demand, root, adj)
    parent = [-2] * n
    parent[r] = -1
    queue = deque([r])
    children: list[list[int]] = [[] for _ in range(n)]
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if parent[w] == -2:
                parent[w] = u
                children[u].append(w)
                queue.append(w)

    edges: list[tuple[int, int]] = []
    for i in range(n):
        to_kids = [(c, demand.p(i, c)) for c in children[i] if demand.p(i, c) > 0.0]
        if to_kids:
            edges.extend(_tree_edges(i, to_kids, n))
        from_kids = [(c, demand.p(c, i)) for c in children[i] if demand.p(c, i) > 0.0]
        if from_kids:
            edges.extend(_tree_edges(i, from_kids, n))
    return _report("tree", demand, HostNetwork(n, edges), claimed=8)


def build_sparse_dan(demand: Demand) -> BuildReport:
    """Network with max degree <= 12 * ceil(avg degree) for any demand.

    Degrees count in- plus out-edges of the support.  Every demand edge
    from a high-out-degree node to a high-in-degree node (> 2 * avg) is
    subdivided through a low-degree helper, each of the floor(n/2)
    lowest-degree nodes absorbing about avg-degree edges.  High-out rows
    and high-in columns of the reweighted matrix are then replaced by
    near-optimal binary trees; all other demand edges are kept as-is.
    """
    n = demand.n
    out_deg = [0] * n
    in_deg = [0] * n
    for s, d, _ in demand.entries:
        out_deg[s] += 1
        in_deg[d] += 1
    davg = directed_avg_degree(demand)
    low = sorted(range(n), key=lambda v: (out_deg[v] + in_deg[v], v))[: n // 2]
    threshold = 2.0 * davg
    high_out = {v for v in range(n) if out_deg[v] > threshold}
    high_in = {v for v in range(n) if in_deg[v] > threshold}

    to_split = [
        (s, d, p) for s, d, p in demand.entries if s in high_out and d in high_in
    ]
    weights = dict(demand.prob)
    helpers: list[HelperAssignment] = []
    if to_split:
        assign = _round_robin(low, len(to_split), davg)
        for (s, d, p), ell in zip(to_split, assign):
            del weights[(s, d)]
            weights[(s, ell)] = weights.get((s, ell), 0.0) + p
            weights[(ell, d)] = weights.get((ell, d), 0.0) + p
            helpers.append((ell, (s, d)))

    rows: dict[int, list[tuple[int, float]]] = {}
    cols: dict[int, list[tuple[int, float]]] = {}
    for (s, d), w in weights.items():
        rows.setdefault(s, []).append((d, w))
        cols.setdefault(d, []).append((s, w))

    edges: list[tuple[int, int]] = []
    for u in sorted(high_out):
        edges.extend(_tree_edges(u, sorted(rows[u]), n))
    for v in sorted(high_in):
        edges.extend(_tree_edges(v, sorted(cols[v]), n))
    for s, d in sorted(weights):
        if s not in high_out and d not in high_in:
            edges.append((s, d))
    claimed = 12 * math.ceil(davg)
    return _report(
        "sparse", demand, HostNetwork(n, edges), claimed, helpers=helpers
    )


def _round_robin(low: list[int], count: int, davg: float) -> list[int]:
    """Assign `count` jobs over `low` nodes, at most about davg each."""
    if not low:
        raise ValueError("no low-degree nodes available as helpers")
    cap = max(math.ceil(davg), math.ceil(count / len(low)))
    load = {v: 0 for v in low}
    out = []
    idx = 0
    for _ in range(count):
        while load[low[idx % len(low)]] >= cap:
            idx += 1
        ell = low[idx % len(low)]
        load[ell] += 1
        out.append(ell)
        idx += 1
    return out


def reduce_degree(graph: HostNetwork) -> tuple[HostNetwork, ReductionCertificate]:
    """Rebuild a graph so max degree <= 8 * ceil(avg degree).

    Edges between two nodes of degree > max(2 * avg, 2) are subdivided
    through low-degree helpers; each such node's neighborhood then becomes
    a balanced binary tree rooted at it.  Every original edge (u, v)
    satisfies d'(u, v) <= max(1, 2 * ceil(log2 max_degree)), certified
    edge by edge in the returned certificate.
    """
    n = graph.n
    if n < 2:
        raise ValueError("need at least 2 nodes")
    deg = [len(a) for a in graph.adj]
    davg = 2.0 * graph.m / n
    dmax = max(deg)
    low = sorted(range(n), key=lambda v: (deg[v], v))[: n // 2]
    threshold = max(2.0 * davg, 2.0)
    heavy = {v for v in range(n) if deg[v] > threshold}

    original = graph.edges()
    to_split = [(u, v) for u, v in original if u in heavy and v in heavy]
    adj1: list[set[int]] = [set(a) for a in graph.adj]
    helpers: list[HelperAssignment] = []
    if to_split:
        assign = _round_robin(low, len(to_split), davg)
        for (u, v), ell in zip(to_split, assign):
            adj1[u].discard(v)
            adj1[v].discard(u)
            adj1[u].add(ell)
            adj1[ell].add(u)
            adj1[v].add(ell)
            adj1[ell].add(v)
            helpers.append((ell, (u, v)))

    edges: list[tuple[int, int]] = []
    for u in range(n):
        for v in adj1[u]:
            if u < v and u not in heavy and v not in heavy:
                edges.append((u, v))
    for u in sorted(heavy):
        edges.extend(balanced_tree([u] + sorted(adj1[u]), 2).item_edges())
    reduced = HostNetwork(n, edges)

    by_src: dict[int, list[int]] = {}
    for u, v in original:
        by_src.setdefault(u, []).append(v)
    stretch = []
    for u in sorted(by_src):
        dist = distances_to_targets(reduced, u, by_src[u])
        stretch.extend((u, v, dist[v]) for v in by_src[u])
    bound = max(1.0, 2.0 * math.ceil(math.log2(dmax)) if dmax >= 1 else 1.0)
    cert = ReductionCertificate(
        helpers=tuple(helpers),
        edge_stretch=tuple(stretch),
        max_stretch=max((s for _, _, s in stretch), default=0.0),
        stretch_bound=bound,
        avg_degree_in=davg,
        claimed_max_degree=8 * math.ceil(davg),
    )
    return reduced, cert


def spanner_to_dan(demand: Demand, spanner: HostNetwork) -> BuildReport:
    """Turn a sparse low-distortion spanner of the demand's support into a
    bounded-degree network by degree reduction.

    Intended for regular and uniform demands, where constant neighborhood
    distortion of the spanner implies constant epl(demand, spanner) and
    the reduction inflates that by at most 2 * ceil(log2 max_degree).
    """
    if demand.n != spanner.n:
        raise ShapeMismatch(
            f"demand has n={demand.n}, spanner has n={spanner.n}"
        )
    flags = classify(demand)
    if not (flags.regular and flags.uniform):
        warnings.warn(
            "spanner_to_dan guarantees assume a regular and uniform demand",
            stacklevel=2,
        )
    reduced, cert = reduce_degree(spanner)
    return _report(
        "spanner2dan",
        demand,
        reduced,
        claimed=cert.claimed_max_degree,
        helpers=cert.helpers,
    )


def build_dary_dan(demand: Demand, arity: int) -> BuildReport:
    """Complete arity-ary tree over all nodes in id order.

    Any pair sits within 2 * ceil(log_arity n) hops, which is within a
    constant of the entropy bound whenever the support's minimum degree
    is polynomial in n.
    """
    tree = balanced_tree(list(range(demand.n)), arity)
    network = HostNetwork(demand.n, tree.item_edges())
    claimed = min(demand.n - 1, arity + 1)
    return _report("dary", demand, network, claimed)
