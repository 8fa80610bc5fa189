"""Multiplicative linear logic: derivations, proof structures, sequentialization."""

from .connect import (
    almost_connected_decompose,
    is_almost_connected,
    is_cf_connected,
    is_connected_net,
    kingdom,
    proper_cycles,
)
from .derivation import (
    Derivation,
    Occ,
    ax,
    cut_rule,
    from_sexpr,
    hyp,
    is_mixretore_normal,
    mix0,
    mix2,
    mixretore_normalize,
    par_rule,
    substitute,
    tensor_rule,
    to_sexpr,
    to_text,
)
from .seq import STRATEGIES, find_splitting_ps, is_splitting_vertex, order_parr, sequentialize
from .structure import (
    ProofStructure,
    check_well_colored,
    degree,
    desequentialize,
    dr_check,
    iso_check,
    make_ps,
    ps_from_json,
    switching_graph,
    validate_ps,
    well_color,
)
