"""Exact coefficients of Chern numbers in complex genera."""

from .chern import (ChernVector, ChVector, ch_to_chern, chern_to_ch, evaluate_genus,
                    hk_bound_report, hk_ch_to_chern, hk_chern_to_ch)
from .errors import CapabilityError, DomainError
from .genus import (GenusSpec, b_sequence, builtin_genus, closed_form_gamma,
                    closed_form_td_half, closed_form_td_half_even, closed_form_todd_even,
                    coefficient, coefficient_table, expansion_oracle)
from .lattice import (IntPartition, SetPartition, WeightSystem, bell, enumerate_set_partitions,
                      mobius, partitions_of, set_partition_sum)
from .symfunc import SymPoly, basis_element, convert, multiply, transition_matrix
from .zeta import ZetaEvalContext, ZetaExpr, eval_numeric, zeta_star_sym, zeta_sym

__version__ = "0.1.0"

__all__ = [
    "CapabilityError", "ChVector", "ChernVector", "DomainError", "GenusSpec", "IntPartition",
    "SetPartition", "SymPoly", "WeightSystem", "ZetaEvalContext", "ZetaExpr", "b_sequence",
    "basis_element", "bell", "builtin_genus", "ch_to_chern", "chern_to_ch", "closed_form_gamma",
    "closed_form_td_half", "closed_form_td_half_even", "closed_form_todd_even", "coefficient",
    "coefficient_table", "convert", "enumerate_set_partitions", "eval_numeric", "evaluate_genus",
    "expansion_oracle", "hk_bound_report", "hk_ch_to_chern", "hk_chern_to_ch", "mobius",
    "multiply", "partitions_of", "set_partition_sum", "transition_matrix", "zeta_star_sym",
    "zeta_sym",
]
