import math

import pytest

from danforge import (
    BadSpec,
    GenSpec,
    classify,
    degree_stats,
    demand_support,
    demand_to_dict,
    family_spanner,
    generate,
    marginals,
)
from danforge.generators import FAMILIES
from danforge.netgraph import is_connected
from danforge.rng import SplitMix64, substream, zipf_weights

SMALL_SPECS = {
    "tree": GenSpec("tree", n=12, seed=3),
    "sparse_random": GenSpec("sparse_random", n=12, edges=30, seed=3),
    "hypercube": GenSpec("hypercube", d=3),
    "regular_uniform": GenSpec("regular_uniform", n=12, degree=4, seed=3),
    "complete_uniform": GenSpec("complete_uniform", n=6),
    "thick_grid": GenSpec("thick_grid", rows=5, cols=4, radius=2),
    "clique_lines": GenSpec("clique_lines", n=36),
    "star_of_cliques": GenSpec("star_of_cliques", n=64),
    "product": GenSpec("product", n=8, seed=3, skew=1.0),
}


class TestRng:
    def test_splitmix_reference_values(self):
        # reference sequence for seed 0 (SplitMix64 is fixed for all time)
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4

    def test_substream_stability(self):
        assert substream(7, 1).next_u64() == substream(7, 1).next_u64()
        assert substream(7, 1).next_u64() != substream(7, 2).next_u64()

    def test_randrange_bounds(self):
        rng = SplitMix64(5)
        assert all(0 <= rng.randrange(7) < 7 for _ in range(200))

    def test_zipf_uniform_at_zero(self):
        assert zipf_weights(5, 0.0, SplitMix64(1)) == [1.0] * 5


class TestEveryFamily:
    @pytest.mark.parametrize("family", FAMILIES)
    def test_generates_valid_demand(self, family):
        demand = generate(SMALL_SPECS[family])
        total = sum(p for _, _, p in demand.entries)
        assert total == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("family", FAMILIES)
    def test_deterministic_bytes(self, family):
        spec = SMALL_SPECS[family]
        import json

        first = json.dumps(demand_to_dict(generate(spec)), sort_keys=True)
        second = json.dumps(demand_to_dict(generate(spec)), sort_keys=True)
        assert first == second

    def test_seed_changes_output(self):
        a = generate(GenSpec("sparse_random", n=20, edges=40, seed=1))
        b = generate(GenSpec("sparse_random", n=20, edges=40, seed=2))
        assert a != b

    def test_unknown_family(self):
        with pytest.raises(BadSpec):
            generate(GenSpec("banana", n=4))


class TestFamilyStructure:
    def test_hypercube_d3(self):
        d = generate(GenSpec("hypercube", d=3))
        assert len(d.undirected_support) == 12
        assert all(p == pytest.approx(1 / 24, abs=1e-12) for _, _, p in d.entries)

    def test_tree_support_is_tree(self):
        for seed in range(8):
            d = generate(GenSpec("tree", n=10, seed=seed or 7))
            assert classify(d).is_tree

    def test_tree_skew_changes_probabilities(self):
        d = generate(GenSpec("tree", n=20, seed=5, skew=2.0))
        probs = {p for _, _, p in d.entries}
        assert len(probs) > 1

    def test_sparse_edge_count(self):
        d = generate(GenSpec("sparse_random", n=40, edges=120, seed=9))
        assert d.m == 120

    def test_regular_uniform_flags(self):
        d = generate(GenSpec("regular_uniform", n=16, degree=5, seed=11))
        flags = classify(d)
        assert flags.regular and flags.uniform and flags.symmetric

    def test_regular_parity_check(self):
        with pytest.raises(BadSpec):
            generate(GenSpec("regular_uniform", n=15, degree=5))

    def test_complete_uniform(self):
        d = generate(GenSpec("complete_uniform", n=5))
        assert d.m == 20
        assert classify(d).uniform

    def test_thick_grid_adjacency(self):
        d = generate(GenSpec("thick_grid", rows=5, cols=5, radius=2))
        g = demand_support(d)
        # corner node sees the L-infinity ball of radius 2 inside the grid
        assert set(g.adj[0]) == {1, 2, 5, 6, 7, 10, 11, 12}

    def test_clique_lines_shape(self):
        for n in (64, 256, 1024):
            d = generate(GenSpec("clique_lines", n=n))
            g = demand_support(d)
            k = math.isqrt(n)
            dmax, davg = degree_stats(g)
            assert dmax == k  # clique node: k-1 clique edges + line start
            assert davg <= 4.0
            assert is_connected(g)

    def test_star_of_cliques_shape(self):
        d = generate(GenSpec("star_of_cliques", n=256))
        g = demand_support(d)
        assert is_connected(g)
        b = round(math.log2(256))
        assert g.n == (256 // b) * b
        # hub 0 carries its clique plus the star to all other hubs
        assert g.degree(0) == (b - 1) + (256 // b - 1)

    def test_product_distribution_factorizes(self):
        d = generate(GenSpec("product", n=6, seed=2, skew=1.0))
        src, dst = marginals(d)
        # p(i,j) proportional to w_i * z_j; cross-ratio cancels the
        # normalization: p(i,j) * p(k,l) == p(i,l) * p(k,j) off-diagonal
        for i, j, k, l in ((0, 1, 2, 3), (1, 0, 3, 2), (4, 5, 2, 1)):
            lhs = d.p(i, j) * d.p(k, l)
            rhs = d.p(i, l) * d.p(k, j)
            assert lhs == pytest.approx(rhs, rel=1e-9)
        assert src.probs[0] > 0 and dst.probs[0] > 0


class TestFamilySpanner:
    def test_clique_lines_spanner_subgraph(self):
        spec = GenSpec("clique_lines", n=64)
        g = demand_support(generate(spec))
        s = family_spanner(spec)
        assert is_connected(s)
        for u, v in s.edges():
            assert g.has_edge(u, v)

    def test_star_of_cliques_spanner_metric(self):
        spec = GenSpec("star_of_cliques", n=256)
        g = demand_support(generate(spec))
        s = family_spanner(spec)
        assert is_connected(s)
        aux = [e for e in s.edges() if not g.has_edge(*e)]
        assert aux  # hub tree introduces auxiliary edges

    def test_no_spanner_for_other_families(self):
        with pytest.raises(BadSpec):
            family_spanner(GenSpec("tree", n=5))


class TestBadSpecs:
    @pytest.mark.parametrize(
        "spec",
        [
            GenSpec("tree", n=1),
            GenSpec("sparse_random", n=3, edges=100),
            GenSpec("hypercube", d=0),
            GenSpec("regular_uniform", n=4, degree=5),
            GenSpec("thick_grid", rows=1, cols=5),
            GenSpec("clique_lines", n=2),
            GenSpec("star_of_cliques", n=4),
            GenSpec("product", n=1),
        ],
    )
    def test_rejected(self, spec):
        with pytest.raises(BadSpec):
            generate(spec)

    def test_meta_mentions_rng(self):
        assert GenSpec("tree", n=5, seed=1).meta()["rng"] == "splitmix64"
