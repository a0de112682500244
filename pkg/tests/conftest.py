"""Shared graph zoo for the test suite."""

import pytest

from cyclecon import build_directed, build_undirected, expand_mixed


def triangle():
    return build_undirected(3, [(0, 1), (1, 2), (0, 2)])


def path3():
    return build_undirected(3, [(0, 1), (1, 2)])


def star4():
    return build_undirected(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def complete(r):
    return build_undirected(r, [(u, v) for u in range(r) for v in range(u + 1, r)])


def diamond():
    # K4 minus one edge; the two triangles share the diagonal (1,2)
    return build_undirected(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def bowtie():
    return build_undirected(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def bowtie_pendant():
    # bowtie plus the path 4-5-6
    return build_undirected(
        7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)]
    )


def cycle_graph(s):
    return build_undirected(s, [(i, (i + 1) % s) for i in range(s)])


def two_c4_shared_vertex():
    # 4-cycles 0-1-2-3 and 0-4-5-6 sharing vertex 0
    return build_undirected(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)]
    )


def two_c4_shared_edge():
    # 4-cycles 0-1-2-3 and 0-1-4-5 sharing edge (0,1)
    return build_undirected(
        6, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (0, 5)]
    )


def fig_tri_like():
    """One triangle-connectivity class whose induced subgraph is not triangular.

    Chain of triangles {0,1,2},{2,3,4},{4,5,6} plus the edge (1,5), which
    lies on no triangle.
    """
    return build_undirected(
        7,
        [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4),
         (4, 5), (5, 6), (4, 6), (1, 5)],
    )


def two_triangles_bridge_edge():
    # triangles {0,1,2} and {3,4,5} joined by the edge (1,3)
    return build_undirected(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (1, 3)]
    )


# -- directed -----------------------------------------------------------

def directed_c3():
    return build_directed(3, [(0, 1), (1, 2), (2, 0)])


def directed_cycle(s):
    return build_directed(s, [(i, (i + 1) % s) for i in range(s)])


def transitive_triangle():
    return build_directed(3, [(0, 1), (1, 2), (0, 2)])


def complete_symmetric(r):
    return build_directed(r, [(u, v) for u in range(r) for v in range(r) if u != v])


def c6_center():
    """Directed 6-cycle 0..5 whose vertices all point at the center 6."""
    arcs = [(i, (i + 1) % 6) for i in range(6)] + [(i, 6) for i in range(6)]
    return build_directed(7, arcs)


def strcy_cyclic():
    # two directed triangles sharing vertex 2: cyclically triangular
    return build_directed(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def strcy_noncyclic():
    """Strongly connected, every edge on an underlying triangle, but no
    directed cycle of length <= 3: rim C8 with transitively oriented chords."""
    arcs = [(i, (i + 1) % 8) for i in range(8)]
    arcs += [(0, 2), (2, 4), (4, 6), (6, 0)]
    return build_directed(8, arcs)


def two_dir_triangles_shared_arc():
    # cycles 0->1->2->0 and 0->1->3->0 share arc (0,1)
    return build_directed(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)])


def two_dir_triangles_shared_vertex():
    return strcy_cyclic()


def two_dir_triangles_bridge_arc():
    # triangles {0,1,2} and {3,4,5} joined by arc (2,3)
    return build_directed(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]
    )


def dag():
    return build_directed(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def c6_with_chord():
    # directed C6 plus the chord (2,0), closing the 3-cycle 0->1->2->0
    return build_directed(6, [(i, (i + 1) % 6) for i in range(6)] + [(2, 0)])


@pytest.fixture
def zoo():
    import sys

    return sys.modules[__name__]
