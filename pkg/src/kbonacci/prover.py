"""Divisibility certificates for the stride-k self-similarity identities.

The fact being certified: for every k >= 2, row k of the coefficient
triangle gives an identity F(n) = sum_i C[k][i] * F(n - k*i) satisfied by
every sequence obeying the order-k all-ones recurrence.  An identity holds
for a sequence exactly when the identity's characteristic polynomial is
divisible by the characteristic polynomial of the recurrence generating
it, so the whole proof reduces to one polynomial fact:

    stride_charpoly(k)(X**k) == base_charpoly(k) * quotient_poly(k)

with the quotient written down explicitly, in integer coefficients, from
triangle entries.  This module certifies that fact three independent
ways:

* long division of the composed polynomial by the base polynomial,
* re-multiplication of the explicit quotient by the (negated) base,
* a (k+1) x (k**2+1) product matrix tabulating the long-hand
  multiplication, whose column sums must reproduce the composed
  polynomial coefficient by coefficient.

The matrix columns fall into five families A-E, each with its own
closed-form column sum (a triangle recursion step, a telescoping
difference, a power-of-two identity, or a four-group cancellation);
verify_case_sums recomputes every column's sum from the closed form of
its family rather than by adding the column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ColumnOutOfRange, EmptyCoefficients, OrderTooSmall
from .intpoly import IntPoly
from .triangles import coeff_entry, coeff_row, coeff_rows, diff_rows

CASE_LABELS = ("A", "B", "C", "D", "E")


def _require_order(k: int) -> None:
    if k < 2:
        raise OrderTooSmall(f"order {k} is below 2")


def base_charpoly(k: int) -> IntPoly:
    """X**k - X**(k-1) - ... - X - 1, the charpoly of the k-step recurrence."""
    _require_order(k)
    return IntPoly([-1] * k + [1])


def identity_coefficients(k: int) -> list[int]:
    """[C[k][1], ..., C[k][k]]: the stride-k identity coefficients."""
    _require_order(k)
    return coeff_row(k)[1:]


def identity_charpoly(coefficients: Iterable[int]) -> IntPoly:
    """Characteristic polynomial X**n - sum c_i X**(n-i) of an identity."""
    coefficients = list(coefficients)
    if not coefficients:
        raise EmptyCoefficients("an identity needs at least one coefficient")
    n = len(coefficients)
    asc = [0] * (n + 1)
    asc[n] = 1
    for i, c in enumerate(coefficients, start=1):
        asc[n - i] = -c
    return IntPoly(asc)


def stride_charpoly(k: int) -> IntPoly:
    """Charpoly of the stride-k subsequence, built from triangle row k.

    Composing with X**k turns it into the charpoly of the full stride-k
    identity on the original sequence.
    """
    return identity_charpoly(identity_coefficients(k))


def quotient_poly(k: int) -> IntPoly:
    """The explicit quotient stride_charpoly(k)(X**k) / base_charpoly(k).

    Degree k*(k-1).  Assembled directly from triangle entries: a leading
    X**(k*(k-1)) plus, for each block j in 0..k-2, a coefficient-triangle
    term at X**(k*j) and difference-triangle terms just above it.  Its
    integrality in Z[X] is the crux of the certificate.
    """
    _require_order(k)
    rows = coeff_rows(k - 1)
    drows = diff_rows(k - 1)
    n = k * (k - 1)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for j in range(k - 1):
        col = k - 1 - j
        coeffs[k * j] += -rows[k - 1][col]
        for i in range(col, k):
            coeffs[k * j + (k - i)] += drows[i][col]
    return IntPoly(coeffs)


def classify_column(k: int, c: int) -> str:
    """Case label A-E for column c of the product matrix.

    Writing c = j*k + m with 0 <= m < k: A for the two end columns, D for
    the last block (j = k-1), C for interior multiples of k, E for
    1 <= m <= j, and B for the rest.  Total and mutually exclusive.
    """
    _require_order(k)
    if c < 0 or c > k * k:
        raise ColumnOutOfRange(f"column {c} outside 0..{k * k}")
    if c == 0 or c == k * k:
        return "A"
    j, m = divmod(c, k)
    if j == k - 1:
        return "D"
    if m == 0:
        return "C"
    return "E" if m <= j else "B"


@dataclass(frozen=True)
class ProductMatrix:
    """Long-hand multiplication of the negated base poly by the quotient.

    Row r (0 <= r <= k-1) holds the ascending coefficients of
    X**r * quotient; row k holds those of -X**k * quotient.  Column sums
    therefore tabulate (-base) * quotient and must reproduce
    -stride_charpoly(X**k) column by column.
    """

    k: int
    rows: tuple[tuple[int, ...], ...]
    column_cases: tuple[str, ...]
    column_sums: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.k * self.k + 1

    @property
    def row_labels(self) -> tuple[str, ...]:
        return tuple(f"X^{r}" for r in range(self.k)) + (f"-X^{self.k}",)


def build_matrix(k: int) -> ProductMatrix:
    """Product matrix of (-base_charpoly(k)) * quotient_poly(k)."""
    _require_order(k)
    quotient = quotient_poly(k)
    width = k * k + 1
    rows = []
    for r in range(k):
        row = [0] * width
        for e, c in enumerate(quotient):
            row[e + r] = c
        rows.append(tuple(row))
    last = [0] * width
    for e, c in enumerate(quotient):
        last[e + k] = -c
    rows.append(tuple(last))
    sums = tuple(sum(col) for col in zip(*rows))
    cases = tuple(classify_column(k, c) for c in range(width))
    return ProductMatrix(k, tuple(rows), cases, sums)


def symbolic_matrix(k: int) -> list[list[str]]:
    """Triangle-entry labels for every matrix cell.

    "C(i,j)" / "D(i,j)" name coefficient- and difference-triangle entries,
    "1" the quotient's leading coefficient, "" a structural zero.  Row 0
    is read off the quotient's block structure; later rows shift it right
    and the last row negates it, mirroring build_matrix.  Resolving each
    label through the triangles must reproduce the numeric matrix.
    """
    _require_order(k)
    width = k * k + 1

    def row_zero(c: int) -> str:
        if c == k * (k - 1):
            return "1"
        j, m = divmod(c, k)
        if j > k - 2:
            return ""
        if m == 0:
            return f"-C({k - 1},{k - 1 - j})"
        if m <= j + 1:
            return f"D({k - m},{k - 1 - j})"
        return ""

    def negate(label: str) -> str:
        if not label:
            return ""
        return label[1:] if label.startswith("-") else "-" + label

    out = []
    for r in range(k):
        out.append([row_zero(c - r) if c >= r else "" for c in range(width)])
    out.append([negate(row_zero(c - k)) if c >= k else "" for c in range(width)])
    return out


def case_e_group_sums(k: int, c: int) -> tuple[int, int, int, int]:
    """The four group sums whose cancellation settles an E column.

    In order: the lone coefficient-triangle term descending from the
    block's multiple-of-k column; the negated difference entry descending
    from the previous block; the row-0 difference entries of this block,
    telescoped; and the difference entries descending from the previous
    block's row 0, telescoped (empty when m = j).  The four add to zero.
    """
    if classify_column(k, c) != "E":
        raise ValueError(f"column {c} of order {k} is not an E column")
    j, m = divmod(c, k)
    lead = -coeff_entry(k - 1, k - 1 - j)
    crossing = -(coeff_entry(k - m, k - j) - coeff_entry(k - m - 1, k - j))
    block = coeff_entry(k - 1, k - j - 1) - coeff_entry(k - m - 1, k - j - 1)
    tail = coeff_entry(k - m - 1, k - j)
    return (lead, crossing, block, tail)


def expected_column_sum(k: int, c: int) -> int:
    """Column sum predicted by the column's case argument, not by adding
    the column."""
    label = classify_column(k, c)
    if label == "A":
        # column 0 holds only the quotient's constant term; column k*k
        # only the negated leading term
        return coeff_entry(k, k) if c == 0 else -1
    j, m = divmod(c, k)
    if label == "B":
        # head term plus the telescoped difference column cancel exactly
        col = k - 1 - j
        head = -coeff_entry(k - 1, col)
        telescoped = coeff_entry(k - 1, col)
        return head + telescoped
    if label == "C":
        # one triangle recursion step: equals C[k][k-j]
        return 2 * coeff_entry(k - 1, k - j) - coeff_entry(k - 1, k - j - 1)
    if label == "D":
        # geometric sums of powers of two
        if m == 0:
            return 1 + (2 ** (k - 1) - 1) + (2 ** (k - 1) - 1)
        return 1 + (2 ** (k - 1 - m) - 1) - 2 ** (k - m - 1)
    return sum(case_e_group_sums(k, c))


@dataclass(frozen=True)
class CaseTally:
    """Pass/fail counts for one column family."""

    passed: int
    failed: int
    failed_columns: tuple[int, ...] = ()

    @property
    def total(self) -> int:
        return self.passed + self.failed


def verify_case_sums(k: int) -> dict[str, CaseTally]:
    """Check every column three ways: case closed form == actual column sum
    == matching coefficient of -stride_charpoly(X**k)."""
    matrix = build_matrix(k)
    target = -(stride_charpoly(k).compose_power(k))
    passed = {label: 0 for label in CASE_LABELS}
    failed: dict[str, list[int]] = {label: [] for label in CASE_LABELS}
    for c in range(k * k + 1):
        label = matrix.column_cases[c]
        expected = expected_column_sum(k, c)
        if expected == matrix.column_sums[c] == target.coeff(c):
            passed[label] += 1
        else:
            failed[label].append(c)
    return {
        label: CaseTally(passed[label], len(failed[label]), tuple(failed[label]))
        for label in CASE_LABELS
    }


@dataclass(frozen=True)
class Certificate:
    """Everything checked while certifying one order k.

    division_matches: long division of stride_charpoly(X**k) by the base
    polynomial left remainder 0 and returned the explicit quotient.
    product_matches: (-base) * quotient re-multiplied to
    -stride_charpoly(X**k).  matrix_verified: every product-matrix column
    passed its case check.  Double-entry on purpose: a bug in either
    multiplication or division cannot slip through both.
    """

    k: int
    base_poly: IntPoly
    stride_poly: IntPoly
    quotient: IntPoly
    remainder: IntPoly
    division_matches: bool
    product_matches: bool
    matrix_verified: bool
    case_tallies: dict[str, CaseTally]

    @property
    def ok(self) -> bool:
        return self.division_matches and self.product_matches and self.matrix_verified


def certify_divisibility(k: int) -> Certificate:
    """Run the full certificate for one order; failures are recorded in
    the result, not raised."""
    base = base_charpoly(k)
    stride = stride_charpoly(k)
    quotient = quotient_poly(k)
    composed = stride.compose_power(k)
    division_quotient, remainder = divmod(composed, base)
    tallies = verify_case_sums(k)
    return Certificate(
        k=k,
        base_poly=base,
        stride_poly=stride,
        quotient=quotient,
        remainder=remainder,
        division_matches=remainder.is_zero() and division_quotient == quotient,
        product_matches=(-base) * quotient == -composed,
        matrix_verified=all(t.failed == 0 for t in tallies.values()),
        case_tallies=tallies,
    )
