"""Unit tests for the divisibility certificate machinery."""

import re

import pytest

from kbonacci.errors import ColumnOutOfRange, EmptyCoefficients, OrderTooSmall
from kbonacci.intpoly import IntPoly
from kbonacci.prover import (
    CASE_LABELS,
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
from kbonacci.triangles import coeff_entry, diff_entry

# Ascending coefficients of the order-5 quotient (degree 20, 13 nonzero terms).
QUOTIENT_5 = IntPoly(
    (1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0, -15, 8, 4, 2, 1, 1)
)


class TestPolynomials:
    @pytest.mark.parametrize(
        "k, text",
        [
            (2, "X^2-X-1"),
            (3, "X^3-X^2-X-1"),
            (5, "X^5-X^4-X^3-X^2-X-1"),
        ],
    )
    def test_base_charpoly(self, k, text):
        assert str(base_charpoly(k)) == text

    @pytest.mark.parametrize(
        "k, text",
        [
            (2, "X^2-3X+1"),
            (4, "X^4-15X^3+17X^2-7X+1"),
            (5, "X^5-31X^4+49X^3-31X^2+9X-1"),
        ],
    )
    def test_stride_charpoly(self, k, text):
        assert str(stride_charpoly(k)) == text

    def test_quotient_poly_order_two(self):
        assert quotient_poly(2) == IntPoly((-1, 1, 1))  # X^2 + X - 1

    def test_quotient_poly_order_three(self):
        # brute-force long division is the oracle for the assembled quotient
        composed = stride_charpoly(3).compose_power(3)
        division_quotient, remainder = divmod(composed, base_charpoly(3))
        assert remainder.is_zero()
        assert quotient_poly(3) == division_quotient
        assert str(quotient_poly(3)) == "X^6+X^5+2X^4-3X^3-X+1"

    def test_quotient_poly_order_five(self):
        assert quotient_poly(5) == QUOTIENT_5

    @pytest.mark.parametrize("k", [0, 1])
    def test_order_too_small(self, k):
        for fn in (base_charpoly, stride_charpoly, quotient_poly, identity_coefficients):
            with pytest.raises(OrderTooSmall):
                fn(k)


class TestIdentityCoefficients:
    @pytest.mark.parametrize(
        "k, expected",
        [
            (2, [3, -1]),
            (3, [7, -5, 1]),
            (4, [15, -17, 7, -1]),
        ],
    )
    def test_known_orders(self, k, expected):
        assert identity_coefficients(k) == expected

    def test_identity_charpoly(self):
        assert identity_charpoly([1, 1]) == IntPoly((-1, -1, 1))
        assert identity_charpoly([3, -1]) == IntPoly((1, -3, 1))
        assert identity_charpoly([5]) == IntPoly((-5, 1))

    def test_identity_charpoly_empty(self):
        with pytest.raises(EmptyCoefficients):
            identity_charpoly([])


class TestClassification:
    def test_order_five_case_row(self):
        assert "".join(classify_column(5, c) for c in range(26)) == (
            "ABBBBCEBBBCEEBBCEEEBDDDDDA"
        )

    def test_order_two_case_row(self):
        assert "".join(classify_column(2, c) for c in range(5)) == "ABDDA"

    def test_out_of_range(self):
        with pytest.raises(ColumnOutOfRange):
            classify_column(3, 10)
        with pytest.raises(ColumnOutOfRange):
            classify_column(3, -1)

    def test_total_and_counts(self):
        # every column gets exactly one label; family sizes follow the ranges
        for k in range(2, 51):
            labels = [classify_column(k, c) for c in range(k * k + 1)]
            counts = {label: labels.count(label) for label in CASE_LABELS}
            assert counts["A"] == 2
            assert counts["D"] == k
            assert counts["C"] == k - 2
            assert counts["B"] == k * (k - 1) // 2
            assert counts["E"] == (k - 2) * (k - 1) // 2
            assert sum(counts.values()) == k * k + 1


class TestMatrix:
    def test_order_two_matrix(self):
        matrix = build_matrix(2)
        assert matrix.rows == (
            (-1, 1, 1, 0, 0),
            (0, -1, 1, 1, 0),
            (0, 0, 1, -1, -1),
        )
        assert matrix.column_sums == (-1, 0, 3, 0, -1)

    def test_order_five_first_row(self):
        matrix = build_matrix(5)
        assert matrix.rows[0][:15] == (
            1, -1, 0, 0, 0, -7, 6, 1, 0, 0, 17, -12, -4, -1, 0,
        )

    def test_order_five_sum_row_at_block_columns(self):
        matrix = build_matrix(5)
        assert [matrix.column_sums[c] for c in (0, 5, 10, 15, 20, 25)] == [
            1, -9, 31, -49, 31, -1,
        ]

    def test_column_sums_reproduce_composed_polynomial(self):
        for k in range(2, 13):
            matrix = build_matrix(k)
            target = -(stride_charpoly(k).compose_power(k))
            assert list(matrix.column_sums) == [
                target.coeff(c) for c in range(k * k + 1)
            ]

    def test_block_column_sums_are_triangle_entries(self):
        for k in range(2, 11):
            matrix = build_matrix(k)
            for j in range(k):
                assert matrix.column_sums[j * k] == coeff_entry(k, k - j)
            assert matrix.column_sums[k * k] == -1


LABEL = re.compile(r"^(-?)([CD])\((\d+),(\d+)\)$")


def resolve_label(label: str) -> int:
    if label == "":
        return 0
    if label == "1":
        return 1
    if label == "-1":
        return -1
    match = LABEL.match(label)
    assert match, f"unparseable cell label {label!r}"
    sign = -1 if match.group(1) else 1
    lookup = coeff_entry if match.group(2) == "C" else diff_entry
    return sign * lookup(int(match.group(3)), int(match.group(4)))


class TestSymbolicMatrix:
    def test_order_five_known_cells(self):
        cells = symbolic_matrix(5)
        assert cells[0][0] == "-C(4,4)"
        assert cells[0][1] == "D(4,4)"
        assert cells[0][10] == "-C(4,2)"
        assert cells[0][20] == "1"
        assert cells[2][15] == "D(2,2)"
        assert cells[5][5] == "C(4,4)"
        assert cells[5][16] == "-D(4,2)"
        assert cells[5][25] == "-1"
        assert cells[0][8] == ""

    def test_labels_resolve_to_numeric_matrix(self):
        for k in range(2, 9):
            numeric = build_matrix(k)
            cells = symbolic_matrix(k)
            for r in range(k + 1):
                for c in range(k * k + 1):
                    assert resolve_label(cells[r][c]) == numeric.rows[r][c], (
                        k, r, c, cells[r][c],
                    )


class TestCaseSums:
    def test_order_five_expected_values(self):
        assert expected_column_sum(5, 0) == 1  # equals C[5][5]
        assert expected_column_sum(5, 15) == -49
        assert expected_column_sum(5, 16) == 0

    def test_order_five_group_decomposition(self):
        assert case_e_group_sums(5, 16) == (-15, 12, 8, -5)
        assert case_e_group_sums(5, 6) == (-7, 1, 6, 0)

    def test_group_sums_only_for_e_columns(self):
        with pytest.raises(ValueError):
            case_e_group_sums(5, 5)

    def test_no_failures_up_to_order_twelve(self):
        for k in range(2, 13):
            tallies = verify_case_sums(k)
            assert all(t.failed == 0 for t in tallies.values()), (k, tallies)
            assert sum(t.passed for t in tallies.values()) == k * k + 1


class TestCertificate:
    def test_order_two(self):
        cert = certify_divisibility(2)
        assert cert.ok
        assert cert.quotient == IntPoly((-1, 1, 1))
        assert cert.remainder.is_zero()

    def test_order_five_quotient_matches_reference(self):
        cert = certify_divisibility(5)
        assert cert.ok
        assert cert.quotient == QUOTIENT_5

    def test_order_twenty_five(self):
        assert certify_divisibility(25).ok

    def test_product_and_division_both_directions(self):
        for k in range(2, 13):
            base = base_charpoly(k)
            quotient = quotient_poly(k)
            composed = stride_charpoly(k).compose_power(k)
            assert (-base) * quotient == -composed
            assert divmod(composed, base) == (quotient, IntPoly.zero())
