"""Autocorrelation, merit factor and L4-norm tools for binary and polyphase sequences."""

__version__ = "0.1.0"

from .autocorr import (
    AutocorrelationProfile,
    aperiodic_autocorrelation,
    autocorrelation_profile,
    fourier_eval,
    max_sidelobe,
    periodic_autocorrelation,
    spectrum_at,
)
from .designs import (
    DifferenceSet,
    barker_difference_set_link,
    characteristic_sequence,
    circulant_hadamard_check,
    is_perfect,
    menon_params,
    two_level_gamma,
    verify_difference_set,
)
from .families import all_ones, alternating, barker, chirp, legendre, turyn_perfect
from .merit import (
    MeritReport,
    barker_l4_prediction,
    barker_merit_prediction,
    l4_norm_fourth,
    merit_factor_analytic,
    merit_factor_discrete,
    merit_lower_bound,
    merit_report,
    minimal_merit_factor,
)
from .quadrature import (
    NodeSet,
    QuadratureResult,
    exact_l4_integral,
    golden_nodes,
    large_sieve_check,
    qmc_l4_integral,
    spectrum_deviation_stats,
    star_discrepancy,
    weyl_sum_check,
)
from .search import SearchSpec, brute_force_oracle, enumerate_bounded, merit_records
from .sequence import (
    Sequence,
    SymmetryElement,
    apply_symmetry,
    canonical_form,
    parse_pm_string,
    render_pm,
)
