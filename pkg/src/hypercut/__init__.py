"""Minimum s-t cuts in hypergraphs with cardinality-based splitting penalties."""

from .basic_lp import build_basic_lp, build_for_hypergraph, gap_instance, integrality_gap, solve_lp, verify_feasible
from .core import CutSolution, Hypergraph, SplittingVector, embed_edges_as_hyperedges, evaluate_cut
from .errors import HypercutError
from .projection import approx_ratio, minmax_lp_oracle, norm_project, plc_project
from .reductions import MaxCutInstance, apx_lower_bound, reduce_maxcut, tight_instance
from .regime import Regime, RegimeTag, check_multimorphism, classify, from_vcsp, to_vcsp
from .solvers import brute_force_min_cut, concave_decomposition, solve

__all__ = [
    "CutSolution", "Hypergraph", "HypercutError", "MaxCutInstance", "Regime", "RegimeTag",
    "SplittingVector", "approx_ratio", "apx_lower_bound", "brute_force_min_cut",
    "build_basic_lp", "build_for_hypergraph", "check_multimorphism", "classify",
    "concave_decomposition", "embed_edges_as_hyperedges", "evaluate_cut", "from_vcsp",
    "gap_instance", "integrality_gap", "minmax_lp_oracle", "norm_project", "plc_project",
    "reduce_maxcut", "solve", "solve_lp", "tight_instance", "to_vcsp", "verify_feasible",
]
