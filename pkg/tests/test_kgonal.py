import pytest

from cyclecon import (BudgetExceededError, bk_related, build_undirected,
                      clique_weight_lower_bound, cocyclic, cycles_through_edge,
                      everett_decomposition, k3_components, kgonal_network,
                      kk_components, l3_edge_classes, lk_edge_classes,
                      triangular_network)
from cyclecon.kgonal import CycleSubgraph, canonical_cycle

import conftest as zoo


class TestCanonicalForm:
    def test_rotation_and_reflection(self):
        assert canonical_cycle([2, 0, 1]) == (0, 1, 2)
        assert canonical_cycle([3, 2, 1, 0]) == (0, 1, 2, 3)
        assert canonical_cycle([1, 0, 3, 2]) == (0, 1, 2, 3)

    def test_unique_per_subgraph(self):
        base = [0, 4, 1, 3, 2]
        rotations = [base[i:] + base[:i] for i in range(5)]
        forms = {canonical_cycle(r) for r in rotations}
        forms |= {canonical_cycle(r[::-1]) for r in rotations}
        assert len(forms) == 1

    def test_edges(self):
        c = CycleSubgraph.from_sequence([2, 0, 1])
        assert c.edges() == [(0, 1), (1, 2), (0, 2)]


class TestCyclesThroughEdge:
    def test_triangle(self):
        assert len(cycles_through_edge(zoo.triangle(), (0, 1), 3)) == 1

    def test_c5(self):
        G = zoo.cycle_graph(5)
        assert cycles_through_edge(G, (0, 1), 4) == []
        assert len(cycles_through_edge(G, (0, 1), 5)) == 1

    def test_k5_edge_count(self):
        # 3 triangles + 6 four-cycles through each edge of K5
        cycles = cycles_through_edge(zoo.complete(5), (0, 1), 4)
        assert len(cycles) == 9
        assert len([c for c in cycles if c.length == 3]) == 3
        assert len([c for c in cycles if c.length == 4]) == 6

    def test_each_cycle_once_and_valid(self):
        G = zoo.complete(5)
        cycles = cycles_through_edge(G, (1, 3), 5)
        assert len(set(cycles)) == len(cycles)
        for c in cycles:
            assert (1, 3) in c.edges()
            for u, v in c.edges():
                assert G.has_edge(u, v)

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            cycles_through_edge(zoo.path3(), (0, 2), 3)

    def test_k_cap(self):
        with pytest.raises(ValueError):
            cycles_through_edge(zoo.triangle(), (0, 1), 9)
        assert cycles_through_edge(zoo.triangle(), (0, 1), 9,
                                   allow_large_k=True)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            kgonal_network(zoo.complete(6), 6, budget=3)


class TestKgonalNetwork:
    def test_k3_matches_triangular(self):
        for G in (zoo.complete(4), zoo.bowtie(), zoo.fig_tri_like()):
            assert kgonal_network(G, 3).weight_map() == \
                triangular_network(G).weight_map()

    def test_c6(self):
        G = zoo.cycle_graph(6)
        assert len(kgonal_network(G, 5)) == 0
        net = kgonal_network(G, 6)
        assert len(net) == 6
        assert set(net.weights) == {1}

    def test_clique_equality_case(self):
        for r in (4, 5, 6):
            G = zoo.complete(r)
            for k in (3, 4, 5):
                expected = clique_weight_lower_bound(r, k)
                net = kgonal_network(G, k)
                assert set(net.weights) == {expected}, (r, k)

    def test_weight_nondecreasing_in_k(self):
        from cyclecon.generators import random_graph

        G = random_graph(14, 26, 3)
        previous = {e: 0 for e in G.edges}
        for k in (3, 4, 5, 6):
            net = kgonal_network(G, k)
            for e in G.edges:
                assert net.weight(e) >= previous[e]
                previous[e] = net.weight(e)


class TestKkComponents:
    def test_two_c4_shared_vertex(self):
        G = zoo.two_c4_shared_vertex()
        assert kk_components(G, 4).k == 1
        p3 = kk_components(G, 3)
        assert p3.k == 7 and p3.trivial_count() == 7

    def test_bowtie_k3_matches_k3_components(self):
        G = zoo.bowtie()
        assert kk_components(G, 3) == k3_components(G)

    def test_monotone_in_k(self):
        from cyclecon.generators import random_graph

        for seed in range(4):
            G = random_graph(16, 30, seed)
            previous = None
            for k in (3, 4, 5, 6):
                p = kk_components(G, k)
                if previous is not None:
                    assert previous.refines(p)
                previous = p


class TestLkEdgeClasses:
    def test_two_c4_shared_edge(self):
        p = lk_edge_classes(zoo.two_c4_shared_edge(), 4)
        assert p.k == 1

    def test_two_c4_shared_vertex(self):
        p = lk_edge_classes(zoo.two_c4_shared_vertex(), 4)
        assert p.k == 2
        assert p.sizes() == [4, 4]

    def test_k3_matches_l3(self):
        for G in (zoo.bowtie(), zoo.diamond(), zoo.fig_tri_like()):
            assert lk_edge_classes(G, 3) == l3_edge_classes(G)

    def test_monotone_in_k(self):
        from cyclecon.generators import random_graph

        for seed in range(4):
            G = random_graph(14, 26, seed)
            previous = None
            for k in (3, 4, 5):
                p = lk_edge_classes(G, k)
                if previous is not None:
                    same = lambda part, e, f: part.class_of(e) == part.class_of(f)
                    for e in G.edges:
                        for f in G.edges:
                            if same(previous, e, f):
                                assert same(p, e, f)
                previous = p


class TestBkRelated:
    def test_bowtie_k3_not_cocyclic(self):
        G = zoo.bowtie()
        kk = kk_components(G, 3)
        assert kk.same_class(0, 4)
        assert not bk_related(G, 3, 0, 4, kk=kk)

    def test_triangle_all_pairs(self):
        G = zoo.triangle()
        assert all(bk_related(G, 3, u, v) for u in range(3) for v in range(3))

    def test_path_graph_unrelated(self):
        G = zoo.path3()
        assert not bk_related(G, 3, 0, 2)
        assert not bk_related(G, 3, 0, 1)

    def test_reflexive(self):
        assert bk_related(zoo.path3(), 3, 2, 2)


class TestEverett:
    def test_bowtie_with_pendant_path(self):
        deco = everett_decomposition(zoo.bowtie_pendant(), 3)
        assert deco.components == ((0, 1, 2, 3, 4),)
        assert deco.bridges == ((5, 6),)

    def test_triangle_free_tree(self):
        G = build_undirected(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        deco = everett_decomposition(G, 3)
        assert deco.components == ()
        assert deco.bridges == ((0, 1, 2, 3, 4),)

    def test_two_k4(self):
        edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        edges += [(u + 4, v + 4) for u, v in edges]
        deco = everett_decomposition(build_undirected(8, edges), 3)
        assert len(deco.components) == 2
        assert deco.bridges == ()

    def test_partitions_vertex_set(self):
        from cyclecon.generators import random_graph

        for seed in range(4):
            G = random_graph(18, 30, seed)
            deco = everett_decomposition(G, 4)
            all_vertices = [v for g in deco.components + deco.bridges for v in g]
            assert sorted(all_vertices) == list(range(G.n))
            for c in deco.components:
                assert len(c) >= 3

    def test_combined_partition_labels(self):
        deco = everett_decomposition(zoo.bowtie_pendant(), 3)
        part = deco.as_partition(7)
        assert part.labels == (1, 1, 1, 1, 1, 2, 2)


class TestCliqueBound:
    def test_values(self):
        assert clique_weight_lower_bound(5, 4) == 9
        assert clique_weight_lower_bound(3, 3) == 1
        assert clique_weight_lower_bound(4, 3) == 2

    def test_k_beyond_r_adds_nothing(self):
        assert clique_weight_lower_bound(4, 6) == clique_weight_lower_bound(4, 4)

    def test_pendant_does_not_lower_weights(self):
        for r in (4, 5):
            G = build_undirected(
                r + 1,
                [(u, v) for u in range(r) for v in range(u + 1, r)] + [(0, r)],
            )
            for k in (3, 4):
                bound = clique_weight_lower_bound(r, k)
                net = kgonal_network(G, k)
                for u in range(r):
                    for v in range(u + 1, r):
                        assert net.weight((u, v)) >= bound

    def test_validation(self):
        with pytest.raises(ValueError):
            clique_weight_lower_bound(2, 3)
        with pytest.raises(ValueError):
            clique_weight_lower_bound(4, 2)


class TestInducedSubgraphCaveat:
    def test_fig_tri_like_class_is_not_kgonal(self):
        G = zoo.fig_tri_like()
        assert k3_components(G).k == 1
        # the induced subgraph of the single class is G itself, and edge
        # (1,5) lies on no triangle, so G is not triangular
        net = triangular_network(G)
        assert (1, 5) not in net
