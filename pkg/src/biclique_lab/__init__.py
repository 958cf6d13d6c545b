"""Bicliques, biclique graphs, and biclique-graph recognition on small graphs."""

from .graphs import (
    CapabilityError,
    Graph,
    Graph6Error,
    GraphError,
    canonical_form,
    canonical_graph,
    distance,
    enumerate_connected_graphs,
    is_biconnected,
    is_connected,
    parse_graph6,
    write_graph6,
)
from .bicliques import (
    Biclique,
    BicliqueFamily,
    biclique_graph,
    enumerate_bicliques,
    is_induced_complete_bipartite,
)
from .distances import (
    BicliqueDistanceReport,
    WitnessSet,
    biclique_distance,
    distance_reports,
    find_witnesses,
    link_companions,
    verify_distance_formula,
)
from .obstructions import CHECK_NAMES, ObstructionReport, Verdict, classify
from .recognition import (
    BICLIQUE_GRAPH,
    NOT_BICLIQUE_GRAPH,
    UNKNOWN,
    CatalogueEntry,
    build_catalogue,
    search_preimage,
    verify_entry,
)
from .conjectures import (
    ConjectureFinding,
    check_generalized_twins,
    check_hamiltonian,
    check_simplicial_helly,
    hamiltonian_cycle,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
