"""Local-complementation orbits of graph states.

Graph states map one-to-one to simple graphs; single local complementations
link the states of one entanglement class into an orbit graph.  This
package maps those orbits exhaustively (labelled and up-to-isomorphism),
computes the orbit and state metrics of the class table, verifies the
graph rule against the stabilizer-level unitary, and runs the full class
census at desk scale.
"""

from .canon import (
    AutomorphismGroup,
    CanonicalForm,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    vertex_symmetry_classes,
)
from .census import (
    Census,
    CensusClass,
    CorrelationReport,
    connected_graph_atlas,
    correlation_report,
    enumerate_classes,
    enumerate_labelled_orbits,
    fingerprint_match,
    load_catalogue,
    orbit_isomorphism_matrix,
    orbits_isomorphic,
    pearson,
    stationary_distribution,
)
from .errors import CapacityError, DisconnectedSeedError, FormatError
from .formats import (
    encode_graph6,
    export_dot,
    export_matrices,
    orbit_to_document,
    document_to_orbit,
    parse_edge_list,
    parse_graph6,
)
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    is_connected,
    leaves,
    local_complement,
    path_graph,
    relabel,
    star_graph,
)
from .metrics import (
    ClassRecord,
    chromatic_index,
    chromatic_number,
    class_record,
    has_eulerian_circuit,
    has_hamiltonian_cycle,
    is_planar,
    is_tree,
    minimum_edge_representative,
)
from .orbit import (
    DistanceTable,
    Orbit,
    all_pairs_distances,
    canonical_vertex_order,
    explore_labelled,
    explore_unlabelled,
    quotient_to_unlabelled,
)
from .rankwidth import (
    RankDecomposition,
    cut_rank,
    enumerate_subcubic_trees,
    rank_width,
)
from .stabilizer import (
    StabilizerTableau,
    apply_lc_unitary,
    graph_to_tableau,
    stabilizer_groups_equal,
    verify_lc,
)

__version__ = "0.1.0"
