"""Exact counting of k-element subset sums over finite fields.

N(k, b, D) counts the k-element subsets of D = F_q \\ {a_1,...,a_c}
whose elements sum to b.  The package evaluates the closed formulas for
small complements, an inclusion-exclusion recursion for general ones,
error bounds on the deviation from C(n, k)/q, and an independent
dynamic-programming oracle, and applies the counts to classifying deep
holes of generalized Reed-Solomon codes.
"""

from .combinatorics import (
    alternating_prefix_sum,
    binom,
    blockwise_alternating_sum,
    falling_factorial,
)
from .counts import (
    BoundInfo,
    CountQuery,
    CountReport,
    ExclusionSet,
    count_excluded,
    count_full_field,
    count_grid,
    count_punctured_field,
    count_two_removed,
    error_bound,
    error_kernel,
    has_solution,
    iterated_error_kernel,
    normalize_exclusions,
    residue_class_error_sum,
    tuple_count_difference,
)
from .gf import (
    Field,
    FieldElement,
    field_arith,
    format_element,
    fp_rank,
    in_prime_subfield,
    make_field,
    parse_element,
    prime_residue,
)
from .limits import GuardExceeded
from .oracle import CountTable, dp_count_table, naive_count
from .rscodes import (
    Poly,
    RSCode,
    Word,
    classify_word,
    deep_hole_scan,
    distance_bounds,
    distance_to_code,
    encode,
    full_field_code,
    interpolate,
    punctured_code,
    word_degree,
)

__version__ = "0.1.0"
