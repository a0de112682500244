import numpy as np
import pytest

from cyclecon import (build_directed, build_undirected, classify_directed_triangles,
                      connected_components, directed_triangle_networks,
                      k3_components, l3_edge_classes, l3_vertex_related,
                      triangle_count_per_vertex, triangular_network)

import conftest as zoo


class TestK3Components:
    def test_bowtie_single_class(self):
        assert k3_components(zoo.bowtie()).k == 1

    def test_bridged_triangles_stay_apart(self):
        # edge (1,3) lies on no triangle, so it connects nothing
        p = k3_components(zoo.two_triangles_bridge_edge())
        assert p.k == 2
        assert p.classes() == [[0, 1, 2], [3, 4, 5]]

    def test_path_graph_all_singletons(self):
        p = k3_components(zoo.path3())
        assert p.k == 3
        assert p.trivial_count() == 3

    def test_fig_tri_like_one_class(self):
        # triangle chain joins everything even though edge (1,5) is in no triangle
        assert k3_components(zoo.fig_tri_like()).k == 1

    def test_is_partition(self):
        from cyclecon.generators import random_graph

        for seed in range(5):
            k3_components(random_graph(30, 70, seed)).check()


class TestTriangularNetwork:
    def test_k4_every_edge_weight_two(self):
        net = triangular_network(zoo.complete(4))
        assert len(net) == 6
        assert set(net.weights) == {2}

    def test_triangle_weight_one(self):
        net = triangular_network(zoo.triangle())
        assert net.weight_map() == {(0, 1): 1, (0, 2): 1, (1, 2): 1}

    def test_star_is_empty(self):
        net = triangular_network(zoo.star4())
        assert len(net) == 0

    def test_weights_match_triangle_enumeration(self):
        from cyclecon.generators import random_graph
        from cyclecon.oracle import enumerate_all_cycles

        for seed in range(5):
            G = random_graph(20, 50, seed)
            net = triangular_network(G)
            catalog = enumerate_all_cycles(G, 3)
            per_edge = {}
            for cyc in catalog.cycles:
                for i, u in enumerate(cyc):
                    v = cyc[(i + 1) % 3]
                    e = (u, v) if u < v else (v, u)
                    per_edge[e] = per_edge.get(e, 0) + 1
            assert net.weight_map() == per_edge

    def test_network_relation_identity(self):
        # triangle connectivity equals plain connectivity of the triangle subnetwork
        for G in (zoo.bowtie(), zoo.fig_tri_like(), zoo.two_triangles_bridge_edge()):
            assert k3_components(G) == connected_components(
                triangular_network(G).subgraph()
            )


class TestTriangleCounts:
    def test_k4(self):
        assert list(triangle_count_per_vertex(zoo.complete(4))) == [3, 3, 3, 3]

    def test_bowtie(self):
        assert list(triangle_count_per_vertex(zoo.bowtie())) == [1, 1, 2, 1, 1]

    def test_triangle_free(self):
        assert list(triangle_count_per_vertex(zoo.star4())) == [0] * 5

    def test_degree_identity(self):
        from cyclecon.generators import random_graph

        for seed in range(5):
            G = random_graph(25, 60, seed)
            t = triangle_count_per_vertex(G)
            net = triangular_network(G)
            for v in range(G.n):
                incident = sum(net.weight((v, int(w))) for w in G.neighbors(v))
                assert incident == 2 * t[v]

    def test_total_weight_three_per_triangle(self):
        from cyclecon.generators import random_graph
        from cyclecon.oracle import enumerate_all_cycles

        for seed in range(5):
            G = random_graph(22, 55, seed)
            total = triangular_network(G).total_weight()
            assert total == 3 * len(enumerate_all_cycles(G, 3).cycles)


class TestL3EdgeClasses:
    def test_diamond_one_class(self):
        p = l3_edge_classes(zoo.diamond())
        assert p.k == 1

    def test_bowtie_two_classes(self):
        p = l3_edge_classes(zoo.bowtie())
        assert p.k == 2
        assert p.classes()[0] == [(0, 1), (0, 2), (1, 2)]

    def test_single_edge_singleton(self):
        p = l3_edge_classes(build_undirected(2, [(0, 1)]))
        assert p.k == 1 and p.m == 1

    def test_is_partition(self):
        from cyclecon.generators import random_graph

        for seed in range(5):
            l3_edge_classes(random_graph(25, 60, seed)).check()

    def test_vertex_relation_not_transitive_on_bowtie(self):
        p = l3_edge_classes(zoo.bowtie())
        assert l3_vertex_related(p, 0, 2)
        assert l3_vertex_related(p, 2, 4)
        assert not l3_vertex_related(p, 0, 4)

    def test_vertex_relation_reflexive(self):
        p = l3_edge_classes(zoo.bowtie())
        assert all(l3_vertex_related(p, u, u) for u in range(5))

    def test_diamond_opposite_corners(self):
        p = l3_edge_classes(zoo.diamond())
        assert l3_vertex_related(p, 0, 3)

    def test_refines_k3_on_vertices(self):
        from cyclecon.generators import random_graph

        for seed in range(5):
            G = random_graph(20, 45, seed)
            k3 = k3_components(G)
            p = l3_edge_classes(G)
            for u in range(G.n):
                for v in range(G.n):
                    if l3_vertex_related(p, u, v):
                        assert k3.same_class(u, v)


class TestDirectedTriangleTypes:
    def test_cyclic(self):
        counts = classify_directed_triangles(zoo.directed_c3(), (0, 1))
        assert (counts.cyc, counts.tra, counts.inp, counts.out) == (1, 0, 0, 0)

    def test_transitive(self):
        D = build_directed(3, [(0, 1), (0, 2), (2, 1)])
        counts = classify_directed_triangles(D, (0, 1))
        assert (counts.cyc, counts.tra, counts.inp, counts.out) == (0, 1, 0, 0)

    def test_input(self):
        D = build_directed(3, [(0, 1), (2, 0), (2, 1)])
        counts = classify_directed_triangles(D, (0, 1))
        assert (counts.cyc, counts.tra, counts.inp, counts.out) == (0, 0, 1, 0)

    def test_output(self):
        D = build_directed(3, [(0, 1), (0, 2), (1, 2)])
        counts = classify_directed_triangles(D, (0, 1))
        assert (counts.cyc, counts.tra, counts.inp, counts.out) == (0, 0, 0, 1)

    def test_missing_arc_rejected(self):
        with pytest.raises(ValueError):
            classify_directed_triangles(zoo.directed_c3(), (1, 0))

    def test_counts_bounded_by_n_minus_2(self):
        D = zoo.complete_symmetric(5)
        for a in D.arcs:
            c = classify_directed_triangles(D, a)
            assert max(c.cyc, c.tra, c.inp, c.out) <= D.n - 2


class TestDirectedTriangleNetworks:
    def test_directed_c3(self):
        nets = directed_triangle_networks(zoo.directed_c3())
        assert nets["cyc"].weight_map() == {(0, 1): 1, (1, 2): 1, (2, 0): 1}
        for key in ("tra", "in", "out"):
            assert len(nets[key]) == 0

    def test_c6_center_rim_arcs_transitive(self):
        nets = directed_triangle_networks(zoo.c6_center())
        for i in range(6):
            assert nets["tra"].weight((i, 6)) == 1

    def test_complete_symmetric_k3_all_types(self):
        nets = directed_triangle_networks(zoo.complete_symmetric(3))
        for key in ("cyc", "tra", "in", "out"):
            assert set(nets[key].weights) == {1}
            assert len(nets[key]) == 6

    def test_matches_per_arc_classification(self):
        from cyclecon.generators import random_digraph

        for seed in range(4):
            D = random_digraph(15, 50, seed)
            nets = directed_triangle_networks(D)
            for a in D.arcs:
                c = classify_directed_triangles(D, a)
                assert nets["cyc"].weight(a) == c.cyc
                assert nets["tra"].weight(a) == c.tra
                assert nets["in"].weight(a) == c.inp
                assert nets["out"].weight(a) == c.out
