import numpy as np
import pytest

from cyclecon import (GraphConstructionError, build_undirected, build_directed,
                      cocyclic, connected_components, expand_mixed,
                      neighbor_intersection, reachable_set, strong_components)
from cyclecon.graphs import biconnected_blocks

import conftest as zoo


class TestBuildUndirected:
    def test_triangle(self):
        G = build_undirected(3, [(0, 1), (1, 2), (0, 2)])
        assert G.m == 3
        assert list(G.neighbors(0)) == [1, 2]
        assert list(G.neighbors(2)) == [0, 1]

    def test_single_isolated_vertex(self):
        G = build_undirected(1, [])
        assert G.n == 1 and G.m == 0
        assert list(G.neighbors(0)) == []

    def test_duplicate_orientations_collapse(self):
        with pytest.warns(UserWarning, match="duplicate"):
            G = build_undirected(4, [(0, 1), (1, 0)])
        assert G.m == 1

    def test_loops_dropped_with_warning(self):
        with pytest.warns(UserWarning, match="loop"):
            G = build_undirected(3, [(0, 0), (0, 1)])
        assert G.m == 1

    def test_strict_rejects_loop(self):
        with pytest.raises(GraphConstructionError):
            build_undirected(3, [(0, 0)], strict=True)

    def test_strict_rejects_duplicate(self):
        with pytest.raises(GraphConstructionError):
            build_undirected(3, [(0, 1), (1, 0)], strict=True)

    def test_out_of_range(self):
        with pytest.raises(GraphConstructionError):
            build_undirected(3, [(0, 3)])

    def test_adjacency_symmetry_and_sorted(self):
        G = zoo.two_c4_shared_vertex()
        for u in range(G.n):
            nbrs = list(G.neighbors(u))
            assert nbrs == sorted(nbrs)
            for v in nbrs:
                assert u in G.neighbors(v)
        assert G.m * 2 == sum(G.degree(u) for u in range(G.n))

    def test_edge_ids_follow_lexicographic_order(self):
        G = zoo.bowtie()
        assert G.edges == tuple(sorted(G.edges))
        for i, e in enumerate(G.edges):
            assert G.edge_id(*e) == i
            assert G.edge_id(e[1], e[0]) == i


class TestExpandMixed:
    def test_edge_becomes_opposite_arcs(self):
        D = expand_mixed(2, [(0, 1)], [])
        assert set(D.arcs) == {(0, 1), (1, 0)}

    def test_pure_arcs_kept(self):
        D = expand_mixed(2, [], [(0, 1)])
        assert set(D.arcs) == {(0, 1)}

    def test_edge_and_same_arc_no_duplicate(self):
        D = expand_mixed(2, [(0, 1)], [(0, 1)])
        assert set(D.arcs) == {(0, 1), (1, 0)}

    def test_out_of_range(self):
        with pytest.raises(GraphConstructionError):
            expand_mixed(2, [], [(0, 2)])


class TestNeighborIntersection:
    def test_k4(self):
        G = zoo.complete(4)
        assert list(neighbor_intersection(G, 0, 1)) == [2, 3]

    def test_path_endpoints(self):
        G = zoo.path3()
        assert list(neighbor_intersection(G, 0, 2)) == [1]
        assert list(neighbor_intersection(G, 0, 1)) == []

    def test_requires_distinct(self):
        with pytest.raises(ValueError):
            neighbor_intersection(zoo.path3(), 1, 1)

    def test_matches_naive_double_loop(self):
        from cyclecon.generators import random_graph

        for seed in range(5):
            G = random_graph(50, 180, seed)
            for u, v in G.edges[:60]:
                naive = sorted(
                    w for w in range(G.n)
                    if G.has_edge(u, w) and G.has_edge(v, w)
                )
                assert list(neighbor_intersection(G, u, v)) == naive


class TestConnectedComponents:
    def test_two_triangles(self):
        G = build_undirected(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        p = connected_components(G)
        assert p.k == 2
        assert p.classes() == [[0, 1, 2], [3, 4, 5]]

    def test_empty_graph(self):
        p = connected_components(build_undirected(3, []))
        assert p.k == 3
        assert p.trivial_count() == 3

    def test_connected_random_graph_single_class(self):
        # spanning tree plus chords always connects
        n = 30
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, 10), (5, 20)]
        assert connected_components(build_undirected(n, edges)).k == 1

    def test_matches_bfs_oracle(self):
        from cyclecon.generators import random_graph

        for seed in range(8):
            G = random_graph(25, 30, seed)
            p = connected_components(G)
            for u, v in G.edges:
                assert p.same_class(u, v)
            # BFS from scratch
            seen = set()
            comp = {}
            c = 0
            for s in range(G.n):
                if s in seen:
                    continue
                stack = [s]
                seen.add(s)
                while stack:
                    x = stack.pop()
                    comp[x] = c
                    for w in G.neighbors(x):
                        if int(w) not in seen:
                            seen.add(int(w))
                            stack.append(int(w))
                c += 1
            for u in range(G.n):
                for v in range(G.n):
                    assert (comp[u] == comp[v]) == p.same_class(u, v)


class TestCocyclic:
    def test_triangle(self):
        G = zoo.triangle()
        assert cocyclic(G, 0, 1)

    def test_tree_has_no_cycles(self):
        G = zoo.path3()
        assert not cocyclic(G, 0, 2)

    def test_reflexive(self):
        assert cocyclic(zoo.path3(), 1, 1)

    def test_bowtie(self):
        G = zoo.bowtie()
        assert cocyclic(G, 0, 1)
        assert not cocyclic(G, 0, 4)

    def test_symmetry(self):
        G = zoo.bowtie_pendant()
        for u in range(G.n):
            for v in range(G.n):
                assert cocyclic(G, u, v) == cocyclic(G, v, u)

    def test_against_cycle_enumeration(self):
        from cyclecon.generators import random_graph
        from cyclecon.oracle import enumerate_all_cycles

        for seed in range(6):
            G = random_graph(10, 14, seed)
            catalog = enumerate_all_cycles(G, 10)  # all cycle lengths for n=10
            on_common_cycle = set()
            for cyc in catalog.cycles:
                for u in cyc:
                    for v in cyc:
                        on_common_cycle.add((u, v))
            for u in range(G.n):
                for v in range(G.n):
                    expect = u == v or (u, v) in on_common_cycle
                    assert cocyclic(G, u, v) == expect, (seed, u, v)

    def test_blocks_of_bowtie(self):
        blocks = biconnected_blocks(zoo.bowtie())
        assert sorted(len(b[0]) for b in blocks) == [3, 3]

    def test_bridge_is_single_edge_block(self):
        blocks = biconnected_blocks(zoo.path3())
        assert [b[1] for b in blocks] == [1, 1]


class TestReachability:
    def test_single_arc(self):
        D = build_directed(2, [(0, 1)])
        assert reachable_set(D, 0) == {0, 1}
        assert reachable_set(D, 1) == {1}

    def test_directed_cycle(self):
        D = zoo.directed_c3()
        for u in range(3):
            assert reachable_set(D, u) == {0, 1, 2}

    def test_c6_center_reaches_everything_from_rim(self):
        D = zoo.c6_center()
        for u in range(6):
            assert reachable_set(D, u) == set(range(7))
        assert reachable_set(D, 6) == {6}

    def test_matches_transitive_closure_matrix(self):
        from cyclecon.generators import random_digraph

        for seed in range(6):
            D = random_digraph(15, 30, seed)
            reach = np.eye(D.n, dtype=bool)
            for u, v in D.arcs:
                reach[u, v] = True
            for _ in range(D.n):
                reach = reach | (reach @ reach)
            for u in range(D.n):
                assert reachable_set(D, u) == set(np.nonzero(reach[u])[0])


class TestStrongComponents:
    def test_directed_cycle_one_class(self):
        assert strong_components(zoo.directed_c3()).k == 1

    def test_single_arc_two_classes(self):
        assert strong_components(build_directed(2, [(0, 1)])).k == 2

    def test_c6_center(self):
        p = strong_components(zoo.c6_center())
        assert sorted(p.sizes()) == [1, 6]
        assert p.same_class(0, 5)
        assert not p.same_class(0, 6)

    def test_matches_reachability_oracle(self):
        from cyclecon.generators import random_digraph

        for seed in range(6):
            D = random_digraph(14, 28, seed)
            p = strong_components(D)
            reach = [reachable_set(D, u) for u in range(D.n)]
            for u in range(D.n):
                for v in range(D.n):
                    mutual = v in reach[u] and u in reach[v]
                    assert mutual == p.same_class(u, v)

    def test_partition_invariants(self):
        from cyclecon.generators import random_digraph

        for seed in range(4):
            strong_components(random_digraph(12, 20, seed)).check()
