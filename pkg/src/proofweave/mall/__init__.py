"""Multiplicative-additive linear logic: forests, proof nets with linkings,
the correctness criterion, derivations and sequentialization."""

from .derivation import (
    MallDerivation,
    ax,
    check_slices,
    desequentialize_mall,
    from_sexpr,
    hyp,
    mix0,
    mix2,
    par_rule,
    plus_rule,
    substitute,
    tensor_rule,
    to_sexpr,
    to_text,
    with_rule,
)
from .forest import Forest, make_link
from .net import (
    STRATEGIES,
    CriterionReport,
    ExitJump,
    MallNet,
    check_criterion,
    exit_function,
    find_exit_jump,
    find_splitting_mallnet,
    is_proof_net,
    is_splitting_mall,
    make_net,
    net_from_json,
    well_color_mall,
)
from .seq import Split, sequentialize_mall, sequentialize_mall_full, split_at

__all__ = [
    "STRATEGIES",
    "CriterionReport",
    "ExitJump",
    "Forest",
    "MallDerivation",
    "MallNet",
    "Split",
    "ax",
    "check_criterion",
    "check_slices",
    "desequentialize_mall",
    "exit_function",
    "find_exit_jump",
    "find_splitting_mallnet",
    "from_sexpr",
    "hyp",
    "is_proof_net",
    "is_splitting_mall",
    "make_link",
    "make_net",
    "mix0",
    "mix2",
    "net_from_json",
    "par_rule",
    "plus_rule",
    "sequentialize_mall",
    "sequentialize_mall_full",
    "split_at",
    "substitute",
    "tensor_rule",
    "to_sexpr",
    "to_text",
    "well_color_mall",
    "with_rule",
]
