"""Command-line front end: triangles, certificates, numeric checks, decimation.

Subcommands: triangle, prove, verify, decimate, sweep.  Every command
takes --format {tsv|markdown|json} (default markdown).  Markdown mirrors
the human-readable tables (triangles padded with zeros to a rectangle,
matrix cells blank where structurally zero); tsv emits bare data rows;
json emits stable, sorted-key documents with polynomials as ascending
coefficient arrays.

Exit codes: 0 when every requested check passed, 1 on a verification
failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decimation import decimated_charpoly, recurrence_coefficients
from .errors import NegativeRow, NotMonic, OrderTooSmall
from .intpoly import IntPoly
from .prover import (
    CASE_LABELS,
    Certificate,
    ProductMatrix,
    base_charpoly,
    build_matrix,
    certify_divisibility,
    identity_coefficients,
    stride_charpoly,
)
from .sequences import IdentityReport, check_identity, kbonacci, random_kbonacci
from .triangles import coeff_rows, diff_rows

FORMATS = ("tsv", "markdown", "json")


def _dump_json(obj: object) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _markdown_table(header: list[str], rows: list[list[str]]) -> list[str]:
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("| " + " | ".join("---" for _ in header) + " |")
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return lines


def _tsv_rows(rows: list[list[str]]) -> list[str]:
    return ["\t".join(row) for row in rows]


def _identity_text(k: int, coefficients: list[int], stride: int) -> str:
    terms = " ".join(
        f"{'-' if c < 0 else '+'} {abs(c)}*F(n-{stride * i})"
        for i, c in enumerate(coefficients, start=1)
    )
    return "F(n) = " + terms.lstrip("+ ")


# --- triangle ---------------------------------------------------------------


def _cmd_triangle(args: argparse.Namespace) -> int:
    rows = coeff_rows(args.rows) if args.kind == "p" else diff_rows(args.rows)
    if args.format == "json":
        print(_dump_json(rows))
    elif args.format == "tsv":
        for line in _tsv_rows([[str(v) for v in row] for row in rows]):
            print(line)
    else:
        width = args.rows + 1
        header = ["row/col"] + [str(j) for j in range(width)]
        body = [
            [str(i)] + [str(row[j]) if j < len(row) else "0" for j in range(width)]
            for i, row in enumerate(rows)
        ]
        for line in _markdown_table(header, body):
            print(line)
    return 0


# --- prove ------------------------------------------------------------------


def _matrix_cells(matrix: ProductMatrix) -> list[list[str]]:
    labels = matrix.row_labels
    cells = []
    for label, row in zip(labels, matrix.rows):
        cells.append([label] + [str(v) if v else "" for v in row])
    cells.append(["SUM"] + [str(s) for s in matrix.column_sums])
    return cells


def _matrix_json(matrix: ProductMatrix) -> dict:
    return {
        "k": matrix.k,
        "case_row": list(matrix.column_cases),
        "row_labels": list(matrix.row_labels),
        "rows": [list(row) for row in matrix.rows],
        "column_sums": list(matrix.column_sums),
    }


def _certificate_fields(cert: Certificate) -> list[tuple[str, str]]:
    composed = cert.stride_poly.compose_power(cert.k)
    tallies = ", ".join(
        f"{label} {t.passed}/{t.total}" for label, t in cert.case_tallies.items()
    )
    identity = _identity_text(cert.k, identity_coefficients(cert.k), cert.k)
    verdict = "PASS" if cert.ok else "FAIL"
    return [
        ("order", str(cert.k)),
        ("recurrence polynomial", str(cert.base_poly)),
        ("subsequence polynomial", str(cert.stride_poly)),
        ("identity polynomial", str(composed)),
        ("explicit quotient", str(cert.quotient)),
        ("division remainder", str(cert.remainder)),
        ("division quotient matches", "yes" if cert.division_matches else "NO"),
        ("re-multiplication matches", "yes" if cert.product_matches else "NO"),
        ("matrix column sums verified", "yes" if cert.matrix_verified else "NO"),
        ("case checks (passed/total)", tallies),
        ("certified identity", identity),
        ("verdict", verdict),
    ]


def _cmd_prove(args: argparse.Namespace) -> int:
    cert = certify_divisibility(args.k)
    matrix = build_matrix(args.k) if args.show_matrix else None
    if args.format == "json":
        doc = {
            "k": cert.k,
            "base_ascending": list(cert.base_poly),
            "stride_ascending": list(cert.stride_poly),
            "quotient_ascending": list(cert.quotient),
            "remainder_ascending": list(cert.remainder),
            "division_matches": cert.division_matches,
            "product_matches": cert.product_matches,
            "matrix_verified": cert.matrix_verified,
            "cases": {
                label: {"passed": t.passed, "failed": t.failed}
                for label, t in cert.case_tallies.items()
            },
            "verdict": "PASS" if cert.ok else "FAIL",
        }
        if matrix is not None:
            doc["matrix"] = _matrix_json(matrix)
        print(_dump_json(doc))
    elif args.format == "tsv":
        lines = _tsv_rows([[key, value] for key, value in _certificate_fields(cert)])
        if matrix is not None:
            lines.append("\t".join(["case"] + list(matrix.column_cases)))
            lines.extend(_tsv_rows(_matrix_cells(matrix)))
        for line in lines:
            print(line)
    else:
        print(f"# Divisibility certificate, order {cert.k}")
        print()
        for key, value in _certificate_fields(cert):
            print(f"- {key}: {value}")
        if matrix is not None:
            print()
            header = ["case"] + list(matrix.column_cases)
            body = [["col"] + [f"X^{c}" for c in range(matrix.width)]]
            body.extend(_matrix_cells(matrix))
            for line in _markdown_table(header, body):
                print(line)
    return 0 if cert.ok else 1


# --- verify -----------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    k = args.k
    if args.n_from > args.n_to:
        raise _UsageError("--n-from must not exceed --n-to")
    rec = kbonacci(k) if args.seed is None else random_kbonacci(k, args.seed)
    coefficients = identity_coefficients(k)
    report = check_identity(rec, coefficients, k, args.n_from, args.n_to)
    tallies = report.residue_tallies(k)
    verdict = "PASS" if report.ok else "FAIL"
    if args.format == "json":
        doc = {
            "k": k,
            "seed": args.seed,
            "initial": list(rec.initial),
            "coefficients": coefficients,
            "stride": k,
            "n_from": args.n_from,
            "n_to": args.n_to,
            "checked": report.checked,
            "failures": [list(f) for f in report.failures],
            "residues": {
                str(r): {"checked": c, "failed": f} for r, (c, f) in tallies.items()
            },
            "verdict": verdict,
        }
        print(_dump_json(doc))
    elif args.format == "tsv":
        rows = [[str(r), str(c), str(f)] for r, (c, f) in tallies.items()]
        rows.append(["total", str(report.checked), str(len(report.failures))])
        rows.append(["verdict", verdict, ""])
        for line in _tsv_rows(rows):
            print(line)
    else:
        seeds = ", ".join(str(v) for v in rec.initial)
        source = (
            f"{k}-step sequence, seeds {seeds}"
            if args.seed is None
            else f"{k}-step sequence, random seeds from seed {args.seed}: {seeds}"
        )
        print(f"# Identity check, order {k}")
        print()
        print(f"- sequence: {source}")
        print(f"- identity: {_identity_text(k, coefficients, k)}")
        print(f"- range: n in [{args.n_from}, {args.n_to}], {report.checked} indices")
        print()
        header = [f"residue mod {k}", "checked", "failed"]
        body = [[str(r), str(c), str(f)] for r, (c, f) in tallies.items()]
        for line in _markdown_table(header, body):
            print(line)
        print()
        if report.first_counterexample is not None:
            n, actual, predicted = report.first_counterexample
            print(f"- first counterexample: n={n}, value {actual}, identity gives {predicted}")
        print(f"verdict: {verdict}")
    return 0 if report.ok else 1


# --- decimate ---------------------------------------------------------------


def _parse_charpoly(text: str) -> IntPoly:
    try:
        descending = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise _UsageError(f"--charpoly must be comma-separated integers: {exc}")
    poly = IntPoly.from_descending(descending)
    if poly.is_zero() or not poly.is_monic or poly.degree < 1:
        raise _UsageError(
            "--charpoly must be monic of degree >= 1 "
            "(descending coefficients starting with 1)"
        )
    if len(descending) != poly.degree + 1:
        raise _UsageError("--charpoly must start with the leading coefficient 1")
    return poly


def _cmd_decimate(args: argparse.Namespace) -> int:
    poly = _parse_charpoly(args.charpoly)
    decimated = decimated_charpoly(poly, args.stride)
    coefficients = recurrence_coefficients(decimated)
    if args.format == "json":
        doc = {
            "stride": args.stride,
            "input_ascending": list(poly),
            "decimated_ascending": list(decimated),
            "recurrence": coefficients,
        }
        print(_dump_json(doc))
    elif args.format == "tsv":
        rows = [
            ["decimated", str(decimated)],
            ["recurrence", ",".join(str(c) for c in coefficients)],
        ]
        for line in _tsv_rows(rows):
            print(line)
    else:
        print(f"- input: {poly} (stride {args.stride})")
        print(f"- decimated characteristic polynomial: {decimated}")
        print(
            "- recurrence coefficients: "
            + ", ".join(str(c) for c in coefficients)
        )
    return 0


# --- sweep ------------------------------------------------------------------


def _sweep_row(k: int) -> dict:
    cert = certify_divisibility(k)
    oracle_ok = decimated_charpoly(base_charpoly(k), k) == stride_charpoly(k)
    numeric = check_identity(kbonacci(k), identity_coefficients(k), k, -20, 60)
    return {
        "k": k,
        "divisibility": cert.division_matches and cert.product_matches,
        "cases": cert.matrix_verified,
        "oracle": oracle_ok,
        "numeric": numeric.ok,
    }


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.k_min < 2:
        raise _UsageError("--k-min must be >= 2")
    if args.k_min > args.k_max:
        raise _UsageError("--k-min must not exceed --k-max")
    results = [_sweep_row(k) for k in range(args.k_min, args.k_max + 1)]
    all_ok = all(
        row["divisibility"] and row["cases"] and row["oracle"] and row["numeric"]
        for row in results
    )
    verdict = "PASS" if all_ok else "FAIL"
    columns = ("divisibility", "cases", "oracle", "numeric")
    if args.format == "json":
        print(_dump_json({"results": results, "verdict": verdict}))
    elif args.format == "tsv":
        rows = [
            [str(row["k"])] + ["PASS" if row[c] else "FAIL" for c in columns]
            for row in results
        ]
        rows.append(["verdict", verdict, "", "", ""])
        for line in _tsv_rows(rows):
            print(line)
    else:
        header = ["k", *columns]
        body = [
            [str(row["k"])] + ["PASS" if row[c] else "FAIL" for c in columns]
            for row in results
        ]
        for line in _markdown_table(header, body):
            print(line)
        print()
        print(f"verdict: {verdict}")
    return 0 if all_ok else 1


# --- parser -----------------------------------------------------------------


class _UsageError(Exception):
    """Semantic usage error; reported through argparse (exit code 2)."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbonacci",
        description=(
            "Exact-arithmetic toolkit for the stride self-similarity "
            "identities of k-step Fibonacci sequences."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default="markdown",
        help="output format (default: markdown)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser(
        "triangle",
        parents=[common],
        help="print rows of the coefficient (p) or difference (q) triangle",
    )
    tri.add_argument("kind", choices=("p", "q"))
    tri.add_argument("--rows", type=int, required=True, help="last row to print")
    tri.set_defaults(handler=_cmd_triangle)

    prove = sub.add_parser(
        "prove",
        parents=[common],
        help="certify the stride-k identity by exact polynomial division",
    )
    prove.add_argument("--k", type=int, required=True, help="recurrence order, >= 2")
    prove.add_argument(
        "--show-matrix",
        action="store_true",
        help="also print the product matrix with case header and SUM row",
    )
    prove.set_defaults(handler=_cmd_prove)

    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="check the stride-k identity numerically over an index range",
    )
    verify.add_argument("--k", type=int, required=True, help="recurrence order, >= 2")
    verify.add_argument("--n-from", type=int, required=True)
    verify.add_argument("--n-to", type=int, required=True)
    verify.add_argument(
        "--seed",
        type=int,
        default=None,
        help="use random seed values drawn from this seed instead of 0,..,0,1",
    )
    verify.set_defaults(handler=_cmd_verify)

    dec = sub.add_parser(
        "decimate",
        parents=[common],
        help="characteristic polynomial of a stride-s subsequence",
    )
    dec.add_argument(
        "--charpoly",
        required=True,
        help="comma-separated descending coefficients, leading 1 first",
    )
    dec.add_argument("--stride", type=int, required=True)
    dec.set_defaults(handler=_cmd_decimate)

    sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="run certificate, oracle and numeric checks over a range of k",
    )
    sweep.add_argument("--k-min", type=int, required=True)
    sweep.add_argument("--k-max", type=int, required=True)
    sweep.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (_UsageError, NegativeRow, NotMonic, OrderTooSmall) as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")  # parser.error always exits


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
