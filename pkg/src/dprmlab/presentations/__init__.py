"""Listable presentations of N, Z, Q and F_p(t) and the algorithms on them."""

from dprmlab.presentations.algorithms import (
    Translation,
    UniversalListing,
    UniversalListingData,
    bijectivize,
    check_bijectivization,
    delta_enumerate,
    e_rho_enumerate,
    find_translation,
    natural_listing_data,
    pullback_mu,
    rational_listing_data,
    rho_pullback_enumerator,
    transfer_presentation,
    universal_listing_alpha,
)
from dprmlab.presentations.core import (
    LeastCodeIndex,
    Presentation,
    get_presentation,
    permuted,
    rat_pair_code,
    rat_pair_raw,
    registry_names,
    swap_pairs,
)
from dprmlab.presentations.rationals import (
    cf_encode,
    cf_value,
    continued_fraction,
    q_pos,
    tau,
    tau_inverse,
    tau_table,
)
from dprmlab.presentations.structures import (
    ARITH,
    INT,
    NAT,
    RAT,
    Signature,
    StructureOracle,
    fpt,
    structure_by_name,
)

__all__ = [
    "ARITH", "INT", "LeastCodeIndex", "NAT", "Presentation", "RAT", "Signature",
    "StructureOracle", "Translation", "UniversalListing", "UniversalListingData",
    "bijectivize", "cf_encode", "cf_value", "check_bijectivization",
    "continued_fraction", "delta_enumerate", "e_rho_enumerate", "find_translation",
    "fpt", "get_presentation", "natural_listing_data", "permuted", "pullback_mu",
    "q_pos", "rat_pair_code", "rat_pair_raw", "rational_listing_data",
    "registry_names", "rho_pullback_enumerator", "structure_by_name", "swap_pairs",
    "tau", "tau_inverse", "tau_table", "transfer_presentation", "universal_listing_alpha",
]
