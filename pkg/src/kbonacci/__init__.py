"""Exact-arithmetic toolkit for k-step Fibonacci stride identities.

The library certifies, for every order k >= 2, the self-similarity
identity F(n) = sum_i C[k][i] * F(n - k*i) satisfied by any sequence
obeying the order-k all-ones recurrence, where C is a Pascal-like
coefficient triangle.  Certification is symbolic (exact polynomial
divisibility, cross-checked by a product matrix with per-column
closed-form arguments), numeric (big-integer identity checks on concrete
sequences, including negative indices), and independent (companion-matrix
decimation that never touches the triangles).
"""

from .decimation import (
    IntMatrix,
    char_poly,
    companion_matrix,
    decimated_charpoly,
    matrix_power,
    recurrence_coefficients,
)
from .errors import (
    ColumnOutOfRange,
    EmptyCoefficients,
    NegativeRow,
    NonIntegralBackwardStep,
    NonIntegralQuotient,
    NotMonic,
    OrderTooSmall,
    WindowTooNarrow,
    WindowTooSmall,
)
from .intpoly import IntPoly
from .prover import (
    CASE_LABELS,
    CaseTally,
    Certificate,
    ProductMatrix,
    base_charpoly,
    build_matrix,
    case_e_group_sums,
    certify_divisibility,
    classify_column,
    expected_column_sum,
    identity_charpoly,
    identity_coefficients,
    quotient_poly,
    stride_charpoly,
    symbolic_matrix,
    verify_case_sums,
)
from .sequences import (
    IdentityReport,
    LinearRecurrence,
    SequenceWindow,
    check_identity,
    kbonacci,
    random_kbonacci,
)
from .triangles import (
    coeff_entry,
    coeff_row,
    coeff_row_from_charpoly,
    coeff_rows,
    column_one_closed_form,
    diff_entry,
    diff_row,
    diff_row_from_binomial,
    diff_rows,
)

__all__ = [
    "CASE_LABELS",
    "CaseTally",
    "Certificate",
    "ColumnOutOfRange",
    "EmptyCoefficients",
    "IdentityReport",
    "IntMatrix",
    "IntPoly",
    "LinearRecurrence",
    "NegativeRow",
    "NonIntegralBackwardStep",
    "NonIntegralQuotient",
    "NotMonic",
    "OrderTooSmall",
    "ProductMatrix",
    "SequenceWindow",
    "WindowTooNarrow",
    "WindowTooSmall",
    "base_charpoly",
    "build_matrix",
    "case_e_group_sums",
    "certify_divisibility",
    "char_poly",
    "check_identity",
    "classify_column",
    "coeff_entry",
    "coeff_row",
    "coeff_row_from_charpoly",
    "coeff_rows",
    "column_one_closed_form",
    "companion_matrix",
    "decimated_charpoly",
    "diff_entry",
    "diff_row",
    "diff_row_from_binomial",
    "diff_rows",
    "expected_column_sum",
    "identity_charpoly",
    "identity_coefficients",
    "kbonacci",
    "matrix_power",
    "quotient_poly",
    "random_kbonacci",
    "recurrence_coefficients",
    "stride_charpoly",
    "symbolic_matrix",
    "verify_case_sums",
]
