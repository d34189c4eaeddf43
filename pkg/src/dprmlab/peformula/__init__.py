"""Positive-existential formulas, their evaluation, and interpretations."""

from dprmlab.peformula.evaluate import (
    definable_prefix,
    eval_matrix,
    eval_term,
    prenex,
    satisfy_search,
    verify_witnesses,
)
from dprmlab.peformula.foursquares import four_squares, least_squares
from dprmlab.peformula.interp import (
    Interpretation,
    builtin_interpretations,
    check_pullbacks,
    compose_interpretations,
    get_interpretation,
    graph_prefix,
    homotopy_prefix,
    identity,
    int_in_rat,
    pull_formula,
)
from dprmlab.peformula.syntax import (
    And,
    App,
    Atomic,
    Const,
    Eq,
    Exists,
    FormulaSyntaxError,
    Num,
    Or,
    Var,
    format_formula,
    format_term,
    free_vars,
    parse_formula,
    parse_term,
)

__all__ = [
    "And", "App", "Atomic", "Const", "Eq", "Exists", "FormulaSyntaxError",
    "Interpretation", "Num", "Or", "Var", "builtin_interpretations",
    "check_pullbacks", "compose_interpretations", "definable_prefix",
    "eval_matrix", "eval_term", "format_formula", "format_term", "four_squares",
    "free_vars", "get_interpretation", "graph_prefix", "homotopy_prefix",
    "identity", "int_in_rat", "least_squares", "parse_formula", "parse_term",
    "prenex", "pull_formula", "satisfy_search", "verify_witnesses",
]
