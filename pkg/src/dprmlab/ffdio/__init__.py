"""Function-field Diophantine laboratory over F_p(t)."""

from dprmlab.ffdio.automata import (
    DigitAutomaton,
    count_accepted,
    counting,
    digits_lsb,
    multiples_automaton,
    powers_of_base_automaton,
)
from dprmlab.ffdio.lacunary import (
    bigA_counting_check,
    bigA_members,
    bigA_series,
    count_below,
    fA_convergence_check,
    member_support,
    n_r,
    product_identity_check,
)
from dprmlab.ffdio.leftdio import (
    AlgebraicReal,
    l_alpha_member,
    left_setup,
    leftdio_enumerate,
    sturm_sequence,
)
from dprmlab.ffdio.pheidas import (
    artin_schreier,
    artin_schreier_preimage,
    exhaustive_solutions,
    family_solutions,
    frobenius_leq,
    is_constant_coset,
    oracle_solutions,
    pheidas_solutions,
)
from dprmlab.ffdio.poly import (
    FpPoly,
    FpRatFun,
    format_poly,
    format_ratfun_coeffs,
    parse_poly,
    parse_ratfun,
    t_adic_ord,
)
from dprmlab.ffdio.series import (
    PowerSeriesTrunc,
    artin_schreier_relation,
    christol_fb,
    christol_naturals,
    genseries,
    geometric_relation,
    verify_algebraic,
)

__all__ = [
    "AlgebraicReal", "DigitAutomaton", "FpPoly", "FpRatFun", "PowerSeriesTrunc",
    "artin_schreier", "artin_schreier_preimage", "artin_schreier_relation",
    "bigA_counting_check", "bigA_members", "bigA_series", "christol_fb",
    "christol_naturals", "count_accepted", "count_below", "counting", "digits_lsb",
    "exhaustive_solutions", "fA_convergence_check", "family_solutions",
    "format_poly", "format_ratfun_coeffs", "frobenius_leq", "genseries",
    "geometric_relation", "is_constant_coset", "l_alpha_member", "left_setup",
    "leftdio_enumerate", "member_support", "multiples_automaton", "n_r",
    "oracle_solutions", "parse_poly", "parse_ratfun", "pheidas_solutions",
    "powers_of_base_automaton", "product_identity_check", "sturm_sequence",
    "t_adic_ord", "verify_algebraic",
]
