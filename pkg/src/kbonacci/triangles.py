"""The two recursive coefficient triangles behind the stride identities.

The *coefficient triangle* C starts from C[0][0] = -1 with column 0 fixed
at -1, and fills the rest by

    C[i][j] = 2*C[i-1][j] - C[i-1][j-1]      (1 <= j <= i),

reading entries right of the diagonal as 0.  The column-0 values are
initial conditions: the recursion only applies for j >= 1.  Row k of C
lists the coefficients of the stride-k self-similarity identity satisfied
by every k-step Fibonacci-like sequence,

    F(n) = sum_{i=1..k} C[k][i] * F(n - k*i).

The *difference triangle* D is the column-wise backward difference
D[i][j] = C[i][j] - C[i-1][j] (row 0 is all zeros).  Its entries assemble
the explicit quotient polynomial used by the divisibility certificate in
`prover`.

Both triangles admit independent closed-form constructions (binomial
expansions of shifted powers); those live here as cross-checks against
the recursion.
"""

from __future__ import annotations

from .errors import NegativeRow, OrderTooSmall
from .intpoly import IntPoly


def coeff_rows(n: int) -> list[list[int]]:
    """Rows 0..n of the coefficient triangle; row i has i+1 entries."""
    if n < 0:
        raise NegativeRow(f"row {n} is negative")
    rows = [[-1]]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = [-1]
        for j in range(1, i + 1):
            above = prev[j] if j < i else 0
            row.append(2 * above - prev[j - 1])
        rows.append(row)
    return rows


def coeff_row(n: int) -> list[int]:
    """Row n of the coefficient triangle."""
    return coeff_rows(n)[n]


def diff_rows(n: int) -> list[list[int]]:
    """Rows 0..n of the difference triangle."""
    base = coeff_rows(n)
    rows = [[0]]
    for i in range(1, n + 1):
        prev, cur = base[i - 1], base[i]
        rows.append([cur[j] - (prev[j] if j < i else 0) for j in range(i + 1)])
    return rows


def diff_row(n: int) -> list[int]:
    """Row n of the difference triangle."""
    return diff_rows(n)[n]


def coeff_entry(i: int, j: int) -> int:
    """C[i][j], with 0 outside 0 <= j <= i (the sums in `prover` rely on
    vanishing boundary terms)."""
    if i < 0:
        raise NegativeRow(f"row {i} is negative")
    if j < 0 or j > i:
        return 0
    return coeff_row(i)[j]


def diff_entry(i: int, j: int) -> int:
    """D[i][j], with 0 outside 0 <= j <= i."""
    if i < 0:
        raise NegativeRow(f"row {i} is negative")
    if j < 0 or j > i:
        return 0
    return diff_row(i)[j]


def coeff_row_from_charpoly(k: int) -> list[int]:
    """Row k of the coefficient triangle rebuilt without the recursion.

    Evaluates the order-k recurrence polynomial at 2 - Y, reverses the
    coefficients through degree k, and reads the row off the reversed
    polynomial.  Must agree with coeff_row(k); used as a cross-check.
    """
    if k < 2:
        raise OrderTooSmall(f"order {k} is below 2")
    two_minus_y = IntPoly((2, -1))
    powers = [IntPoly.one()]
    for _ in range(k):
        powers.append(powers[-1] * two_minus_y)
    shifted = powers[k]
    for i in range(k):
        shifted = shifted - powers[i]
    reversed_poly = shifted.reverse(k)
    return [-1] + [-reversed_poly.coeff(k - i) for i in range(1, k + 1)]


def diff_row_from_binomial(n: int) -> list[int]:
    """Row n of the difference triangle as the coefficients of X*(2-X)**(n-1).

    Independent of the recursion; must agree with diff_row(n) for n >= 1.
    """
    if n < 1:
        raise NegativeRow(f"binomial construction needs row >= 1, got {n}")
    poly = IntPoly((0, 1)) * IntPoly((2, -1)) ** (n - 1)
    return [poly.coeff(j) for j in range(n + 1)]


def column_one_closed_form(n: int) -> bool:
    """True iff C[n][1] == 2**n - 1 and D[n][1] == 2**(n-1)."""
    if n < 1:
        raise NegativeRow(f"closed form needs row >= 1, got {n}")
    return coeff_entry(n, 1) == 2**n - 1 and diff_entry(n, 1) == 2 ** (n - 1)
