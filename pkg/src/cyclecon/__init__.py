"""cyclecon: short-cycle connectivity decompositions of networks.

Vertices connect not just by paths but by chains of short cycles (or
cliques) that overlap in vertices, edges, or arcs.  This package computes
the resulting equivalence classes, the derived weighted subnetworks, and
the transitive-arc machinery for digraphs, with brute-force oracles for
verification.
"""

from .budget import CycleBudget, MAX_CYCLE_LENGTH, default_budget
from .directed_kgonal import (DirectedCycle, ReductionGraph,
                              TransitiveSemicycle, ck_components,
                              cyclic_reduction, directed_cycles_through_arc,
                              dk_arc_classes, feedback_network, k_long_arcs,
                              k_transitive_arcs, mutual_tk_classes,
                              remove_transitive_path, sk_components,
                              tk_reachability, transitive_semicycles_of_arc,
                              transitive_support_networks)
from .errors import (BudgetExceededError, ConsistencyError, CycleconError,
                     GraphConstructionError, OracleGuardError,
                     PajekParseError, PathRemovalError)
from .generalized import (ChainConnectivity, FamilyMember, FamilySpec,
                          OverlapSpec, enumerate_family, hh0_components,
                          hh0_connectivity, kr_clique_components,
                          kr_clique_connectivity)
from .graphs import (DirectedGraph, UndirectedGraph, biconnected_blocks,
                     build_directed, build_undirected, cocyclic,
                     connected_components, expand_mixed,
                     neighbor_intersection, reachable_set, strong_components)
from .kgonal import (CycleSubgraph, EverettDecomposition,
                     clique_weight_lower_bound, cycles_through_edge,
                     everett_decomposition, kgonal_network, kk_components,
                     lk_edge_classes, bk_related)
from .networks import WeightedSubnetwork
from .pajek import (network_text, partition_text, read_network,
                    read_partition, vector_text, write_network,
                    write_partition, write_vector)
from .partitions import ArcPartition, EdgePartition, VertexPartition
from .triangular import (TriangleTypeCounts, classify_directed_triangles,
                         directed_triangle_networks, k3_components,
                         l3_edge_classes, l3_vertex_related,
                         triangle_count_per_vertex, triangular_network)

__version__ = "0.1.0"
