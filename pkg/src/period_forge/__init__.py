"""Kirchhoff polynomials, periods and the twist-identity chain for the
triangle/box ladder graphs G_{k,l,m} and the zig-zag graphs Z_n."""
from .canon import canonical_form, find_isomorphism, is_isomorphic
from .closed import ClosedFormValue, as_float, family_period, zeta, zigzag_period
from .errors import GraphError, InvariantViolation, NotCompletableError, PlanarityError
from .families import FamilyParams, family_dual, family_graph, zigzag, zigzag_completed
from .graph import Multigraph, WeightedEdge, loop_number, make_graph, split_by_cut, weighted_degree
from .kirchhoff import GraphPolynomial, psi_del_contract, psi_enumerate, psi_eval, spanning_tree_count
from .montecarlo import McConfig, PeriodEstimate, estimate_period, zscore
from .transforms import complete, decomplete, planar_dual, reduce_to_zigzag, twist

__all__ = [
    "ClosedFormValue", "FamilyParams", "GraphError", "GraphPolynomial", "InvariantViolation",
    "McConfig", "Multigraph", "NotCompletableError", "PeriodEstimate", "PlanarityError",
    "WeightedEdge", "as_float", "canonical_form", "complete", "decomplete", "estimate_period",
    "family_dual", "family_graph", "family_period", "find_isomorphism", "is_isomorphic",
    "loop_number", "make_graph", "planar_dual", "psi_del_contract", "psi_enumerate", "psi_eval",
    "reduce_to_zigzag", "spanning_tree_count", "split_by_cut", "twist", "weighted_degree",
    "zeta", "zigzag", "zigzag_completed", "zigzag_period", "zscore",
]
