"""Seeded synthetic demand families.

Every family the constructions and distortion experiments need: trees and
sparse random supports (with optional Zipf skew), hypercubes, circulant
regular-uniform graphs, complete demands, thick grids (locally bounded
doubling dimension), the two distortion-divergence families
(clique-with-lines and star-of-cliques, including their reference
spanners), and product distributions.

Same (family, params, seed) always yields byte-identical output; all
randomness comes from the SplitMix64 stream recorded in the metadata.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .demand import Demand, normalize
from .errors import BadSpec
from .netgraph import HostNetwork
from .rng import ALGORITHM, SplitMix64, zipf_weights
from .trees import balanced_tree

FAMILIES = (
    "tree",
    "sparse_random",
    "hypercube",
    "regular_uniform",
    "complete_uniform",
    "thick_grid",
    "clique_lines",
    "star_of_cliques",
    "product",
)


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one synthetic instance.

    n: node count (tree, sparse_random, complete, divergence families,
    product); d: hypercube dimension; rows/cols/radius: thick grid;
    degree: regular_uniform; edges: directed support size for
    sparse_random (default 3n); skew: Zipf exponent for non-uniform
    probabilities where the family supports it.
    """

    family: str
    n: int = 0
    d: int = 0
    rows: int = 0
    cols: int = 0
    radius: int = 2
    degree: int = 0
    edges: int = 0
    seed: int = 0
    skew: float = 0.0

    def meta(self) -> dict:
        return {"rng": ALGORITHM, **{k: v for k, v in asdict(self).items() if v}}


def generate(spec: GenSpec) -> Demand:
    try:
        build = _BUILDERS[spec.family]
    except KeyError:
        raise BadSpec(f"unknown family {spec.family!r}") from None
    return build(spec)


def _skewed(entries: list[tuple[int, int]], spec: GenSpec, rng: SplitMix64) -> Demand:
    weights = zipf_weights(len(entries), spec.skew, rng)
    n = 1 + max(max(u, v) for u, v in entries)
    return normalize(
        [(u, v, w) for (u, v), w in zip(entries, weights)], n=max(n, spec.n)
    )


def _symmetric_uniform(n: int, und_edges: list[tuple[int, int]]) -> Demand:
    return normalize(
        [(u, v, 1.0) for u, v in und_edges] + [(v, u, 1.0) for u, v in und_edges],
        n=n,
    )


def _gen_tree(spec: GenSpec) -> Demand:
    """Random recursive tree; each edge carries one or both directions."""
    n = spec.n
    if n < 2:
        raise BadSpec("tree needs n >= 2")
    rng = SplitMix64(spec.seed)
    entries: list[tuple[int, int]] = []
    for v in range(1, n):
        u = rng.randrange(v)
        mode = rng.randrange(3)  # 0: down, 1: up, 2: both
        if mode in (0, 2):
            entries.append((u, v))
        if mode in (1, 2):
            entries.append((v, u))
    return _skewed(entries, spec, rng)


def _gen_sparse(spec: GenSpec) -> Demand:
    n = spec.n
    if n < 2:
        raise BadSpec("sparse_random needs n >= 2")
    m = spec.edges or 3 * n
    if m > n * (n - 1):
        raise BadSpec(f"cannot place {m} directed edges on {n} nodes")
    rng = SplitMix64(spec.seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v))
    return _skewed(sorted(chosen), spec, rng)


def _gen_hypercube(spec: GenSpec) -> Demand:
    if spec.d < 1:
        raise BadSpec("hypercube needs d >= 1")
    n = 1 << spec.d
    und = [
        (x, x ^ (1 << i))
        for x in range(n)
        for i in range(spec.d)
        if x < x ^ (1 << i)
    ]
    return _symmetric_uniform(n, und)


def _gen_regular(spec: GenSpec) -> Demand:
    """Relabelled circulant: r-regular, uniform, symmetric."""
    n, r = spec.n, spec.degree
    if not (1 <= r < n):
        raise BadSpec(f"need 1 <= degree < n, got degree={r}, n={n}")
    if n * r % 2:
        raise BadSpec("n * degree must be even")
    if r % 2 and n % 2:
        raise BadSpec("odd degree needs even n")
    rng = SplitMix64(spec.seed)
    perm = list(range(n))
    rng.shuffle(perm)
    und = set()
    for off in range(1, r // 2 + 1):
        for i in range(n):
            u, v = perm[i], perm[(i + off) % n]
            und.add((min(u, v), max(u, v)))
    if r % 2:
        for i in range(n // 2):
            u, v = perm[i], perm[i + n // 2]
            und.add((min(u, v), max(u, v)))
    if len(und) != n * r // 2:
        raise BadSpec(f"circulant offsets collide for n={n}, degree={r}")
    return _symmetric_uniform(n, sorted(und))


def _gen_complete(spec: GenSpec) -> Demand:
    if spec.n < 2:
        raise BadSpec("complete_uniform needs n >= 2")
    pairs = [
        (u, v, 1.0) for u in range(spec.n) for v in range(spec.n) if u != v
    ]
    return normalize(pairs, n=spec.n)


def _thick_grid_edges(rows: int, cols: int, radius: int) -> list[tuple[int, int]]:
    def node(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            for dr in range(-radius, radius + 1):
                for dc in range(-radius, radius + 1):
                    r2, c2 = r + dr, c + dc
                    if 0 <= r2 < rows and 0 <= c2 < cols:
                        if node(r2, c2) > node(r, c):
                            edges.append((node(r, c), node(r2, c2)))
    return edges


def _gen_thick_grid(spec: GenSpec) -> Demand:
    if spec.rows < 2 or spec.cols < 2 or spec.radius < 1:
        raise BadSpec("thick_grid needs rows, cols >= 2 and radius >= 1")
    und = _thick_grid_edges(spec.rows, spec.cols, spec.radius)
    return _symmetric_uniform(spec.rows * spec.cols, und)


def _clique_lines_parts(n: int) -> tuple[int, list[list[int]]]:
    """Clique size k ~ sqrt(n); node i < k is a clique node owning line i."""
    k = math.isqrt(n)
    if k < 2 or n < k + k:
        raise BadSpec("clique_lines needs n >= 4")
    lines: list[list[int]] = [[] for _ in range(k)]
    for idx, v in enumerate(range(k, n)):
        lines[idx % k].append(v)
    return k, lines


def _gen_clique_lines(spec: GenSpec) -> Demand:
    k, lines = _clique_lines_parts(spec.n)
    und = [(u, v) for u in range(k) for v in range(u + 1, k)]
    for i, line in enumerate(lines):
        prev = i
        for v in line:
            und.append((prev, v))
            prev = v
    return _symmetric_uniform(spec.n, und)


def _star_cliques_parts(n: int) -> tuple[int, int]:
    """(group count g, clique size b) with b ~ log2 n; g*b nodes are used."""
    b = max(2, round(math.log2(n)))
    g = max(2, n // b)
    return g, b


def _gen_star_cliques(spec: GenSpec) -> Demand:
    if spec.n < 8:
        raise BadSpec("star_of_cliques needs n >= 8")
    g, b = _star_cliques_parts(spec.n)
    und = []
    for grp in range(g):
        base = grp * b
        und.extend(
            (base + i, base + j) for i in range(b) for j in range(i + 1, b)
        )
    und.extend((0, grp * b) for grp in range(1, g))  # hub star
    return _symmetric_uniform(g * b, und)


def _gen_product(spec: GenSpec) -> Demand:
    """p(i,j) proportional to p(i) * q(j), diagonal removed."""
    n = spec.n
    if not (2 <= n <= 2000):
        raise BadSpec("product needs 2 <= n <= 2000")
    rng = SplitMix64(spec.seed)
    src = zipf_weights(n, spec.skew, rng)
    dst = zipf_weights(n, spec.skew, rng)
    entries = [
        (i, j, src[i] * dst[j]) for i in range(n) for j in range(n) if i != j
    ]
    return normalize(entries, n=n)


_BUILDERS = {
    "tree": _gen_tree,
    "sparse_random": _gen_sparse,
    "hypercube": _gen_hypercube,
    "regular_uniform": _gen_regular,
    "complete_uniform": _gen_complete,
    "thick_grid": _gen_thick_grid,
    "clique_lines": _gen_clique_lines,
    "star_of_cliques": _gen_star_cliques,
    "product": _gen_product,
}


def family_spanner(spec: GenSpec) -> HostNetwork:
    """Reference spanners of the two distortion-divergence families.

    clique_lines: the central clique becomes a balanced binary tree, lines
    stay (a subgraph spanner).  star_of_cliques: cliques become stars
    around their hub and the hub star becomes a balanced log(n)-ary tree
    over the hubs (auxiliary edges, a metric spanner).
    """
    if spec.family == "clique_lines":
        k, lines = _clique_lines_parts(spec.n)
        edges = balanced_tree(list(range(k)), 2).item_edges()
        for i, line in enumerate(lines):
            prev = i
            for v in line:
                edges.append((prev, v))
                prev = v
        return HostNetwork(spec.n, edges)
    if spec.family == "star_of_cliques":
        g, b = _star_cliques_parts(spec.n)
        hubs = [grp * b for grp in range(g)]
        edges = balanced_tree(hubs, b).item_edges()
        for grp in range(g):
            base = grp * b
            edges.extend((base, base + i) for i in range(1, b))
        return HostNetwork(g * b, edges)
    raise BadSpec(f"no reference spanner for family {spec.family!r}")
