"""Desk-scale laboratory for sparse exponential sums modulo primes.

Exact evaluation of the sums, explicit hard-bound checks, monitored
asymptotic-bound ratios, common-zero certificates via integer resultants,
moment identities, and value-distribution experiments.
"""

from .checks import (DEFAULT_RATIO_CEILING, HARD, MONITORED, BoundCheck,
                     hard_check, monitored_check, skipped_check)
from .distribution import (EmpiricalDistribution, ExponentRow, HorizontalRow,
                           SplitMix64, cubic_sum, exponent_growth_scan,
                           gaussian_cdf, horizontal_scan, ks_distance,
                           semicircle_cdf, semicircle_experiment)
from .expsums import (ComplexValue, average_U, average_V, binomial_sum,
                      cochrane_pinner_check, double_sum_W, sum_S, sum_T,
                      sum_T_direct, theorem_ratios, w_bound_monitor,
                      weil_check)
from .ffcore import (ExponentRepresentation, PrimeContext, discrete_log,
                     find_primitive_root, is_prime,
                     minimal_exponent_representation, mod_pow, pow_mod_array,
                     pow_range, primes_up_to)
from .intpoly import (FrStructure, IntPoly, ZeroCertificate, build_F,
                      compute_D, compute_R, count_common_zeros,
                      divides_certificate, exceptional_primes,
                      factor_structure, is_squarefree, mahler_measure,
                      omega_monitor, poly_gcd_Q, resultant,
                      resultant_size_monitor, subresultant_prs,
                      verify_divisibility, zero_sets_mod_p)
from .moments import (MomentReport, count_Q, direct_cubic_moment,
                      holder_check, low_moments, moment_report)
from .subgroups import (CongruenceCount, VSet, build_V_set,
                        congruence_bound_check, count_congruence_system,
                        count_power_residues_in_interval,
                        count_ratio_power_residues, power_residue_monitors,
                        ratio_residue_monitors)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
