"""Surface models and derived invariants of graded gentle algebras."""

from .algebra import (
    AnForm,
    Arrow,
    GentleAlgebra,
    GradedQuiver,
    an_form_of,
    an_rewrite_move,
    check_proper,
    check_smooth,
    connected_components,
    corner_algebra,
    is_presilting_idempotent,
    koszul_dual_a2,
    make_an,
    path_basis,
    reduce_idempotent,
    validate_gentle,
)
from .curves import (
    DualWalk,
    EdgeCycle,
    boundary_walk,
    enumerate_embedded_cycles,
    find_symplectic_basis,
    homology,
    homology_class,
    intersection_number,
    push_off,
    winding_of_dual_walk,
)
from .errors import GentleTopoError
from .invariants import (
    InvariantRecord,
    arf,
    atilde,
    compute_invariants,
    derived_equivalent,
    has_silting,
    partial_silting_analysis,
    sigma,
)
from .presentation import format_text, parse
from .surface import SurfaceModel, boundary_winding, build_surface, forbidden_threads, topology_summary

__version__ = "0.1.0"
