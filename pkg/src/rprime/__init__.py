"""Variation of the Randic index: exact evaluation, extremal families,
closed-form bounds, and exhaustive verification on small graphs."""

from .bounds import (
    bound_theorem1,
    bound_theorem2,
    check_identity_eq6,
    check_stationarity,
    conjecture_p,
    gamma,
    gamma1_max,
    hessian_minor,
    substituted_profile,
    verify_system,
)
from .constructions import (
    complete_split,
    extremal_profile,
    family_gnpk,
    family_gnpkm,
    regular_graph,
)
from .enumeration import SearchSpec, enumerate_class, min_variation, probe_conjecture
from .errors import DomainError, FeasibilityError, InputError
from .graph import Graph, degree_sequence, from_graph6, graph_from_edges, is_connected, to_graph6
from .indices import DegreeProfile, degree_profile, general_randic, randic, variation_randic

__version__ = "0.1.0"
