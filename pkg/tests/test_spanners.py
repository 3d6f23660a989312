import math
import random

import pytest

from danforge import (
    GenSpec,
    HostNetwork,
    bfs_distances,
    build_2net,
    build_ldd_spanner,
    demand_support,
    generate,
    greedy_spanner,
    hypercube_spanner,
    local_doubling_estimate,
)
from danforge.netgraph import max_edge_distortion
from conftest import random_connected_graph


def thick_grid(side, radius=2):
    return demand_support(
        generate(GenSpec("thick_grid", rows=side, cols=side, radius=radius))
    )


def check_2net(graph, clustering):
    """Both epsilon-net conditions for epsilon = 2, by exhaustive BFS."""
    net = clustering.net_nodes
    for i, u in enumerate(net):
        dist = bfs_distances(graph, u)
        for v in net[i + 1 :]:
            assert dist[v] > 2, f"net nodes {u},{v} at distance {dist[v]}"
    for v in range(graph.n):
        head = clustering.assignment[v]
        assert head in net
        assert bfs_distances(graph, head)[v] <= 2


class TestTwoNet:
    def test_star_single_net_node(self):
        star = HostNetwork(9, [(0, i) for i in range(1, 9)])
        cl = build_2net(star)
        assert cl.net_nodes == (0,)
        assert all(h == 0 for h in cl.assignment)

    def test_path_seven(self):
        g = HostNetwork(7, [(i, i + 1) for i in range(6)])
        cl = build_2net(g)
        check_2net(g, cl)

    def test_thick_grid_20(self):
        g = thick_grid(20)
        cl = build_2net(g)
        check_2net(g, cl)

    def test_random_graphs(self):
        rnd = random.Random(101)
        for _ in range(15):
            g = random_connected_graph(rnd, 30, rnd.randrange(0, 60))
            cl = build_2net(g)
            check_2net(g, cl)

    def test_disconnected_components_handled(self):
        rnd = random.Random(211)
        for _ in range(15):
            n = rnd.randrange(2, 40)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = HostNetwork(n, rnd.sample(pairs, min(rnd.randrange(0, n), len(pairs))))
            check_2net(g, build_2net(g))

    def test_intra_edges_exist_in_graph(self):
        g = thick_grid(10)
        cl = build_2net(g)
        for u, v in cl.intra_edges:
            assert g.has_edge(u, v)


class TestLddSpanner:
    def test_diameter_two_single_cluster(self):
        star = HostNetwork(10, [(0, i) for i in range(1, 10)])
        res = build_ldd_spanner(star, "subgraph")
        assert len(res.clustering.net_nodes) == 1
        assert res.distortion.max_demand_distortion <= 4

    def test_thick_grid_subgraph_stretch_9(self):
        g = thick_grid(15)
        res = build_ldd_spanner(g, "subgraph")
        assert res.distortion.max_demand_distortion <= 9
        for u, v in res.spanner.edges():  # subgraph variant stays inside G
            assert g.has_edge(u, v)

    def test_thick_grid_metric_stretch_5(self):
        g = thick_grid(15)
        res = build_ldd_spanner(g, "metric")
        assert res.distortion.max_demand_distortion <= 5

    def test_linear_size_and_head_degree(self):
        g = thick_grid(20)
        lam = local_doubling_estimate(g)
        for variant in ("subgraph", "metric"):
            res = build_ldd_spanner(g, variant)
            assert res.edge_count <= 4 * g.n
            # metric variant: auxiliary degree added per head is the number
            # of inter-cluster edges incident to it
            if variant == "metric":
                per_head = {}
                for a, b in res.clustering.inter_edges:
                    per_head[a] = per_head.get(a, 0) + 1
                    per_head[b] = per_head.get(b, 0) + 1
                assert max(per_head.values()) <= lam**4

    def test_random_dense_instances(self):
        rnd = random.Random(103)
        for _ in range(10):
            g = random_connected_graph(rnd, 40, 120)
            sub = build_ldd_spanner(g, "subgraph")
            met = build_ldd_spanner(g, "metric")
            assert sub.distortion.max_demand_distortion <= 9
            assert met.distortion.max_demand_distortion <= 5

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            build_ldd_spanner(thick_grid(5), "fancy")


class TestGreedySpanner:
    def test_t1_identity(self):
        g = random_connected_graph(random.Random(107), 15, 20)
        assert greedy_spanner(g, 1).spanner == g

    def test_c4_with_chord(self):
        g = HostNetwork(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        res = greedy_spanner(g, 3)
        # a strict subgraph that still 3-spans every original edge
        assert res.edge_count < g.m
        assert max_edge_distortion(g, res.spanner) <= 3

    def test_chordal_stretch_bound(self):
        # interval-graph style chordal demand
        rnd = random.Random(109)
        edges = set()
        for v in range(100):
            reach = rnd.randrange(1, 6)
            for u in range(max(0, v - reach), v):
                edges.add((u, v))
        g = HostNetwork(100, sorted(edges))
        res = greedy_spanner(g, 5)
        assert res.distortion.nd <= 5
        assert res.distortion.max_demand_distortion <= 5

    def test_stretch_bound_random(self):
        rnd = random.Random(113)
        for t in (2, 3, 5):
            g = random_connected_graph(rnd, 25, 60)
            res = greedy_spanner(g, t)
            assert max_edge_distortion(g, res.spanner) <= t

    def test_bad_t(self):
        with pytest.raises(ValueError):
            greedy_spanner(thick_grid(4), 0)


class TestHypercubeSpanner:
    def test_d1_single_edge(self):
        res = hypercube_spanner(1)
        assert res.spanner.edges() == [(0, 1)]
        assert res.distortion.max_demand_distortion == 1

    def test_d3(self):
        res = hypercube_spanner(3)
        assert res.distortion.max_demand_distortion <= 3
        assert res.edge_count < 12

    def test_dimension_sweep_linear_size(self):
        for d in range(2, 11):
            res = hypercube_spanner(d)
            n = 1 << d
            assert res.distortion.max_demand_distortion <= 3
            assert res.edge_count <= 1.2 * n

    def test_spanner_connected(self):
        res = hypercube_spanner(6)
        assert all(x != math.inf for x in bfs_distances(res.spanner, 0))

    def test_bad_dimension(self):
        with pytest.raises(ValueError):
            hypercube_spanner(0)


class TestLocalDoubling:
    def test_clique_is_one(self):
        k6 = HostNetwork(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
        assert local_doubling_estimate(k6) == 1

    def test_cycle_eight(self):
        c8 = HostNetwork(8, [(i, (i + 1) % 8) for i in range(8)])
        assert local_doubling_estimate(c8) <= 3

    def test_thick_grid_constant_across_sizes(self):
        values = {side: local_doubling_estimate(thick_grid(side)) for side in (10, 20, 40)}
        assert values[10] == values[20] == values[40]
