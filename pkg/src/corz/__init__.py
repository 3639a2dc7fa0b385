"""Exact counting of zero entries in symmetric-group character tables
restricted to rows indexed by ell-core partitions.

Everything here computes over exact integers and rationals; the handful of
floating-point estimates are clearly named as estimates and never feed back
into a count.
"""

from .partitions import (
    HookMultiset,
    Partition,
    conjugate,
    count_p,
    count_p_regular,
    enumerate_partitions,
    hagis_estimate,
    hook_multiset,
    hr_estimate,
    is_core,
    is_regular,
)
from .abacus import (
    Abacus,
    abacus_size,
    bead_jump_witness,
    canonicalize,
    count_cores,
    enumerate_cores,
    extremal_abacus,
    from_abacus,
    n_ell,
    search_max_regular_core,
    structure_numbers,
    swap_columns,
    to_abacus,
)
from .characters import (
    BorderStrip,
    ColumnEvaluator,
    border_strips,
    centralizer_order,
    dimension,
    mn_character,
    quick_vanish,
)
from .numtheory import (
    bernoulli_number,
    c2_closed,
    c3_closed,
    core_lower_bound_ok,
    core_main_term,
    delta_ell,
    generalized_bernoulli,
    inv_alpha,
    legendre,
    sigma_twisted,
)
from .census import (
    CensusConfig,
    CensusRecord,
    Report,
    available_suites,
    build_record,
    run_census,
    verify,
    write_records,
    z_all_exact,
    z_exact,
    z_lower_bound,
    z_star_closed,
    z_star_exact,
)

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "BorderStrip",
    "CensusConfig",
    "CensusRecord",
    "ColumnEvaluator",
    "HookMultiset",
    "Partition",
    "Report",
    "abacus_size",
    "available_suites",
    "bead_jump_witness",
    "bernoulli_number",
    "border_strips",
    "build_record",
    "c2_closed",
    "c3_closed",
    "canonicalize",
    "centralizer_order",
    "conjugate",
    "core_lower_bound_ok",
    "core_main_term",
    "count_cores",
    "count_p",
    "count_p_regular",
    "delta_ell",
    "dimension",
    "enumerate_cores",
    "enumerate_partitions",
    "extremal_abacus",
    "from_abacus",
    "generalized_bernoulli",
    "hagis_estimate",
    "hook_multiset",
    "hr_estimate",
    "inv_alpha",
    "is_core",
    "is_regular",
    "legendre",
    "mn_character",
    "n_ell",
    "quick_vanish",
    "run_census",
    "search_max_regular_core",
    "sigma_twisted",
    "structure_numbers",
    "swap_columns",
    "to_abacus",
    "verify",
    "write_records",
    "z_all_exact",
    "z_exact",
    "z_lower_bound",
    "z_star_closed",
    "z_star_exact",
]
