import random

import pytest

from danforge import (
    INFINITE,
    HostNetwork,
    NotConnected,
    ShapeMismatch,
    all_pairs_distortion,
    bfs_distances,
    degree_stats,
    demand_support,
    distortion_report,
    epl,
    graph_from_text,
    graph_to_text,
    load_graph,
    neighborhood_distortion,
    normalize,
    save_graph,
)
from danforge.generators import GenSpec, family_spanner, generate
from conftest import floyd_warshall, random_connected_graph, random_demand, random_graph


def path_graph(n):
    return HostNetwork(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return HostNetwork(n, [(i, (i + 1) % n) for i in range(n)])


class TestHostNetwork:
    def test_adjacency_symmetric_and_sorted(self):
        g = HostNetwork(4, [(2, 0), (0, 1), (3, 1)])
        for u in range(4):
            for v in g.adj[u]:
                assert u in g.adj[v]
            assert list(g.adj[u]) == sorted(g.adj[u])

    def test_parallel_edges_merge(self):
        g = HostNetwork(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            HostNetwork(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            HostNetwork(2, [(0, 2)])


class TestBfs:
    def test_path(self):
        assert bfs_distances(path_graph(3), 0) == [0, 1, 2]

    def test_disconnected_marker(self):
        g = HostNetwork(3, [(0, 1)])
        assert bfs_distances(g, 0)[2] == INFINITE

    def test_random_graph_matches_floyd_warshall(self):
        rnd = random.Random(13)
        for _ in range(5):
            g = random_graph(rnd, 50, rnd.randrange(40, 200))
            oracle = floyd_warshall(g)
            for src in range(0, 50, 7):
                assert bfs_distances(g, src) == oracle[src]


class TestEpl:
    def test_support_host_gives_one(self):
        rnd = random.Random(17)
        for _ in range(10):
            d = random_demand(rnd, 8, rnd.randrange(3, 20))
            assert epl(d, demand_support(d)) == pytest.approx(1.0, abs=1e-12)

    def test_star_host_leaf_pair(self):
        d = normalize({(1, 2): 1.0}, n=5)
        star = HostNetwork(5, [(0, i) for i in range(1, 5)])
        assert epl(d, star) == pytest.approx(2.0, abs=1e-12)

    def test_random_matches_floyd_warshall(self):
        rnd = random.Random(19)
        for _ in range(5):
            g = random_connected_graph(rnd, 20, 15)
            d = random_demand(rnd, 20, 40)
            oracle = floyd_warshall(g)
            expected = sum(p * oracle[u][v] for u, v, p in d.entries)
            assert epl(d, g) == pytest.approx(expected, abs=1e-9)

    def test_disconnected_pair_is_infinite(self):
        d = normalize({(0, 2): 1.0}, n=3)
        assert epl(d, HostNetwork(3, [(0, 1)])) == INFINITE

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            epl(normalize({(0, 1): 1.0}), path_graph(3))

    def test_at_least_one(self):
        rnd = random.Random(23)
        for _ in range(20):
            d = random_demand(rnd, 7, rnd.randrange(2, 12))
            g = random_connected_graph(rnd, 7, rnd.randrange(0, 8))
            assert epl(d, g) >= 1.0 - 1e-12

    def test_monotone_under_edge_addition(self):
        rnd = random.Random(29)
        for _ in range(20):
            d = random_demand(rnd, 7, 10)
            g = random_connected_graph(rnd, 7, 2)
            base = epl(d, g)
            free = [
                (u, v)
                for u in range(7)
                for v in range(u + 1, 7)
                if not g.has_edge(u, v)
            ]
            extra = rnd.choice(free)
            assert epl(d, g.with_edges([extra])) <= base + 1e-12


class TestDegreeStats:
    def test_cycle(self):
        assert degree_stats(cycle_graph(4)) == (2, 2.0)

    def test_star(self):
        star = HostNetwork(5, [(0, i) for i in range(1, 5)])
        assert degree_stats(star) == (4, 1.6)

    def test_random_recount(self):
        g = random_graph(random.Random(31), 12, 20)
        counts = [0] * 12
        for u, v in g.edges():
            counts[u] += 1
            counts[v] += 1
        assert degree_stats(g) == (max(counts), sum(counts) / 12)


class TestDistortion:
    def test_identity_spanner(self):
        g = cycle_graph(6)
        assert neighborhood_distortion(g, g) == 1.0
        assert all_pairs_distortion(g, g) == 1.0

    def test_c4_vs_path(self):
        assert neighborhood_distortion(cycle_graph(4), path_graph(4)) == pytest.approx(
            1.5
        )

    def test_k4_vs_star(self):
        k4 = HostNetwork(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        star = HostNetwork(4, [(0, 1), (0, 2), (0, 3)])
        assert all_pairs_distortion(k4, star) == pytest.approx(1.5)

    def test_nd_matches_brute_force_on_clique_lines(self):
        spec = GenSpec("clique_lines", n=64)
        g = demand_support(generate(spec))
        s = family_spanner(spec)
        oracle = floyd_warshall(s)
        expected = sum(oracle[u][v] for u, v in g.edges()) / g.m
        assert neighborhood_distortion(g, s) == pytest.approx(expected, abs=1e-9)

    def test_apd_requires_connected(self):
        with pytest.raises(NotConnected):
            all_pairs_distortion(HostNetwork(3, [(0, 1)]), HostNetwork(3, [(0, 1)]))

    def test_disconnected_spanner_is_infinite(self):
        g = cycle_graph(4)
        assert neighborhood_distortion(g, HostNetwork(4, [(0, 1), (2, 3)])) == INFINITE

    def test_report_fields(self):
        rep = distortion_report(cycle_graph(4), path_graph(4))
        assert rep.nd == pytest.approx(1.5)
        assert rep.max_demand_distortion == 3
        assert rep.apd >= 1.0

    def test_uniform_epl_equals_nd(self):
        # uniform demand: expected path length on a spanner is exactly its
        # neighborhood distortion
        rnd = random.Random(37)
        for _ in range(10):
            g = random_connected_graph(rnd, 12, 10)
            d = normalize(
                [(u, v, 1.0) for u, v in g.edges()]
                + [(v, u, 1.0) for u, v in g.edges()],
                n=12,
            )
            s = random_connected_graph(rnd, 12, 6)
            assert epl(d, s) == pytest.approx(
                neighborhood_distortion(g, s), abs=1e-12
            )


class TestFormats:
    def test_text_round_trip(self):
        g = random_graph(random.Random(41), 9, 14)
        assert graph_from_text(graph_to_text(g)) == g

    def test_text_header_mismatch(self):
        with pytest.raises(ValueError):
            graph_from_text("2 2\n0 1\n")

    def test_file_round_trip_both_formats(self, tmp_path):
        g = random_graph(random.Random(43), 7, 9)
        for name in ("g.graph", "g.json"):
            path = tmp_path / name
            save_graph(g, path)
            assert load_graph(path) == g
