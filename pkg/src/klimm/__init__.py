"""
klimm: exact-arithmetic Kazhdan-Lusztig immanants, Bruhat interval graph
combinatorics, and k-positivity checks, with brute-force oracles at desk
scale.
"""

from .errors import (
    PatternPreconditionError,
    PositivityPreconditionError,
    PreconditionError,
    ShapeError,
    SizeGuardError,
    SizeMismatchError,
)
from .exactmat import (
    Matrix,
    antidiagonal_transpose,
    bar,
    det,
    gen_k_positive_not_higher,
    gen_totally_positive,
    is_k_positive,
    lewis_carroll_residual,
    max_positivity_order,
    minor,
    repeat_submatrix,
    restrict,
)
from .grid import (
    BoundingBox,
    LabeledGrid,
    block_antidiagonal_split,
    bounding_boxes,
    boxes_alternate,
    col_support,
    complement_young_shape,
    delete_rows_cols,
    durfee,
    graph_of_interval_bruteforce,
    graph_of_upper_interval,
    is_admissible,
    is_sandwiched,
    largest_square,
    multichoose,
    row_support,
    squares_match_noninversions,
    young_shape,
)
from .immanant import (
    ImmanantResult,
    SignProbeReport,
    deletion_det_identity,
    dual_canonical_eval,
    factor_block_antidiagonal,
    imm_definition,
    imm_determinantal,
    inversions_equal_complement_boxes,
    lewis_carroll_sign_probe,
    sign_theorem_check,
    young_complement_sign_check,
    young_sign_check,
)
from .klpoly import IntPolynomial, KLCache, kl_at_one, kl_polynomial
from .perm import (
    bruhat_leq,
    compose,
    delete_entry,
    inverse,
    is_in_maximal_parabolic,
    length,
    longest_element,
    non_inversions,
    pattern_occurs,
)
from .suites import Config, SuiteReport, run_search, run_suite

__version__ = "0.1.0"
