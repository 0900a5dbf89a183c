"""Structure of cyclically 5-edge-connected fullerenes: cutsets, pentacaps,
nanotube decomposition, constructive Hamilton cycles and matching bounds."""

from .connectivity import (
    Classification,
    EdgeCutset,
    classify_cutset,
    cyclic_edge_connectivity,
    find_cyclic_5_cutsets,
    find_cyclic_5_cutsets_exhaustive,
    has_nontrivial_cyclic_5_cutset,
    is_cyclic_cutset,
    six_pentagons_inside,
)
from .generator import dodecahedron, nanotube
from .graph import EmbeddedGraph, Face, FullereneReport, dual_graph, girth, trace_faces, validate_fullerene
from .hamilton import (
    FacePath,
    HamiltonCycle,
    brute_force_hamilton,
    build_hamilton,
    contract_ring,
    enumerate_hamilton_variants,
    expand_face_path,
    face_path_boundary,
    verify_hamilton,
)
from .matchings import (
    count_perfect_matchings,
    hamilton_lower_bound,
    matching_lower_bound,
    matchings_from_hamilton,
)
from .rings import (
    Dichotomy,
    FaceRing,
    NanotubeDecomposition,
    Pentacap,
    RingType,
    check_ring_dichotomy,
    find_face_rings,
    find_pentacaps,
    nanotube_decomposition,
    ring_type,
)

__version__ = "0.1.0"
