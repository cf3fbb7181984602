"""Command-line front end.

Subcommands: ``gen`` (write a matrix as CSV), ``det`` (closed-form vs oracle
determinant), ``inv`` (closed-form inverse as CSV, refusing singular
requests), ``verify`` (run a named suite, emit a JSON report), ``spectrum``
(claimed vs computed factorization) and ``bench`` (structured inverse
assembly vs generic Gauss-Jordan).

Exit codes: 0 success, 1 usage error, 2 mathematically singular request,
3 verification failure.  Rationals serialize as ``p/q`` (plain ``p`` for
integers); matrix CSV is headerless with comma-separated rows.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import closed_form as cf
from . import graphs as gr
from . import spectra as sp
from .linalg import (
    RationalMatrix,
    aibj_analysis,
    det_exact,
    inverse_exact,
    rational_str,
)
from .rng import Lcg, random_tree_edges
from .suites import SUITE_ORDER, run_suite

FAMILIES = ("tn", "tn-book", "kmn", "star", "tree", "k4")
KINDS = ("dist", "lap", "rmat")
# Generic exact inversion above this order is not worth waiting for; bench
# reports it as skipped instead.
BENCH_GAUSS_ORDER_CAP = 120


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cpdist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, family=False, json_flag=False, out=False):
        if family:
            p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--n", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--seed", type=int, default=42)
        if json_flag:
            p.add_argument("--json", metavar="PATH|-")
        if out:
            p.add_argument("--out", metavar="PATH")

    p_gen = sub.add_parser("gen", help="write a distance/Laplacian/correction matrix as CSV")
    add_common(p_gen, family=True, out=True)
    p_gen.add_argument("--kind", choices=KINDS, default="dist")

    p_det = sub.add_parser("det", help="closed-form determinant vs Bareiss oracle")
    add_common(p_det, family=True, json_flag=True)

    p_inv = sub.add_parser("inv", help="closed-form inverse as CSV (exit 2 when singular)")
    add_common(p_inv, family=True, out=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=("all",) + SUITE_ORDER, default="all")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--json", metavar="PATH|-")

    p_spec = sub.add_parser("spectrum", help="claimed vs computed eigenvalue factorization")
    add_common(p_spec, family=True, json_flag=True)
    p_spec.add_argument("--part", choices=sp.PARTS)

    p_bench = sub.add_parser("bench", help="structured inverse assembly vs generic inversion")
    add_common(p_bench, family=True, json_flag=True)
    return parser


def _require(value, name: str, minimum: int):
    if value is None:
        raise UsageError(f"--{name} is required for this family")
    if value < minimum:
        raise UsageError(f"--{name} must be at least {minimum}")
    return value


def _build_graph(args) -> gr.Graph:
    family = args.family
    if family == "tn":
        return gr.build_family(gr.TnSingle(_require(args.n, "n", 3)))
    if family == "tn-book":
        return gr.build_family(gr.TnBook(_require(args.n, "n", 3), _require(args.b, "b", 2)))
    if family == "kmn":
        return gr.build_family(
            gr.CompleteBipartite(_require(args.m, "m", 1), _require(args.n, "n", 1))
        )
    if family == "star":
        return gr.build_family(gr.Star(_require(args.n, "n", 1)))
    if family == "tree":
        n = _require(args.n, "n", 2)
        return gr.build_family(gr.Tree(random_tree_edges(n, Lcg(args.seed))))
    if family == "k4":
        return gr.build_family(gr.K4())
    raise UsageError("--family is required")


def _matrix_csv(m: RationalMatrix) -> str:
    return "\n".join(",".join(rational_str(e) for e in row) for row in m.data) + "\n"


def _write_text(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _write_json(payload: dict, path) -> None:
    _write_text(json.dumps(payload, indent=2) + "\n", path)


def _cmd_gen(args) -> int:
    family = args.family
    if family is None:
        raise UsageError("--family is required")
    kind = args.kind
    if kind == "rmat":
        if family == "tn":
            matrix = cf.tn_rmat(_require(args.n, "n", 3))
        elif family == "tn-book":
            matrix = cf.tnb_structured(
                cf.MatrixKind.RMAT, _require(args.n, "n", 3), _require(args.b, "b", 2)
            ).materialize()
        else:
            raise UsageError("--kind rmat is defined only for tn and tn-book")
    elif family == "tn":
        n = _require(args.n, "n", 3)
        matrix = cf.tn_distance(n) if kind == "dist" else cf.tn_laplacian(n)
    elif family == "tn-book":
        n, b = _require(args.n, "n", 3), _require(args.b, "b", 2)
        which = cf.MatrixKind.DISTANCE if kind == "dist" else cf.MatrixKind.LAPLACIAN
        matrix = cf.tnb_structured(which, n, b).materialize()
    else:
        graph = _build_graph(args)
        matrix = gr.all_pairs_distances(graph) if kind == "dist" else gr.laplacian(graph)
    _write_text(_matrix_csv(matrix), args.out)
    return 0


def _closed_form_det(args) -> Fraction:
    family = args.family
    if family == "tn":
        return cf.tn_formulas(_require(args.n, "n", 3)).det
    if family == "tn-book":
        return cf.tnb_det(_require(args.n, "n", 3), _require(args.b, "b", 2))
    if family == "kmn":
        return cf.kmn_formulas(_require(args.m, "m", 1), _require(args.n, "n", 1)).det
    if family == "star":
        return cf.kmn_formulas(_require(args.n, "n", 1), 1).det
    if family == "tree":
        return cf.tree_det(_build_graph(args))
    if family == "k4":
        return aibj_analysis(-1, 1, 4).det
    raise UsageError("--family is required")


def _cmd_det(args) -> int:
    formula = _closed_form_det(args)
    oracle = det_exact(gr.all_pairs_distances(_build_graph(args)))
    match = formula == oracle
    if args.json is not None:
        _write_json(
            {
                "formula": rational_str(formula),
                "oracle": rational_str(oracle),
                "match": match,
            },
            args.json,
        )
    else:
        print(
            f"formula={rational_str(formula)}, oracle={rational_str(oracle)}, "
            f"match={'true' if match else 'false'}"
        )
    return 0 if match else 3


def _closed_form_inverse(args) -> RationalMatrix:
    family = args.family
    if family == "tn":
        return cf.tn_formulas(_require(args.n, "n", 3)).inverse
    if family == "tn-book":
        return cf.tnb_inverse(_require(args.n, "n", 3), _require(args.b, "b", 2))
    if family in ("kmn", "star"):
        if family == "kmn":
            result = cf.kmn_formulas(_require(args.m, "m", 1), _require(args.n, "n", 1))
        else:
            result = cf.kmn_formulas(_require(args.n, "n", 1), 1)
        if result.singular:
            raise cf.SingularFamilyError(result.reason or "singular")
        return result.inverse
    if family == "tree":
        return cf.tree_inverse(_build_graph(args))
    if family == "k4":
        return aibj_analysis(-1, 1, 4).inverse
    raise UsageError("--family is required")


def _cmd_inv(args) -> int:
    try:
        inverse = _closed_form_inverse(args)
    except cf.SingularFamilyError as err:
        print(f"singular: {err}", file=sys.stderr)
        return 2
    _write_text(_matrix_csv(inverse), args.out)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed)
    payload = report.to_json_dict()
    if args.json is not None:
        _write_json(payload, args.json)
    if args.json != "-":
        print(
            f"suite={report.suite} cells={len(report.grid)} passed={report.passed} "
            f"failed={report.failed} wall_time_ms={report.wall_time_ms}"
        )
        for failure in report.failures:
            print(f"  FAIL {failure['location']}: expected {failure['expected']}, "
                  f"got {failure['actual']}")
    return 3 if report.failed else 0


def _cmd_spectrum(args) -> int:
    if args.family not in (None, "tn-book"):
        raise UsageError("spectrum tables are defined for the tn-book family")
    if args.part is None:
        raise UsageError("--part is required")
    n = _require(args.n, "n", 3)
    b = _require(args.b, "b", 2)
    try:
        claim = sp.claimed_spectrum(args.part, n, b)
        matrix = sp.principal_submatrix(args.part, n, b)
    except ValueError as err:
        raise UsageError(str(err)) from None
    check = sp.verify_claim(matrix, claim)
    if args.json is not None:
        _write_json(
            {
                "part": args.part,
                "n": n,
                "b": b,
                "claimed_eigenvalues": [
                    {"value": rational_str(v), "multiplicity": m} for v, m in claim.pairs
                ],
                "quadratic_factor": str(claim.quadratic) if claim.quadratic else None,
                "claimed_char_poly": str(check.claimed),
                "computed_char_poly": str(check.computed),
                "match": check.ok,
            },
            args.json,
        )
    else:
        pairs = ", ".join(f"{rational_str(v)} (x{m})" for v, m in claim.pairs)
        print(f"claimed eigenvalues: {pairs}")
        if claim.quadratic is not None:
            print(f"quadratic factor: {claim.quadratic}")
        print(f"claimed char poly:  {check.claimed}")
        print(f"computed char poly: {check.computed}")
        print(f"match={'true' if check.ok else 'false'}")
    return 0 if check.ok else 3


def _cmd_bench(args) -> int:
    if args.family not in (None, "tn-book"):
        raise UsageError("bench runs on the tn-book family")
    n = args.n if args.n is not None else 8
    b = args.b if args.b is not None else 500
    if n < 3 or b < 2:
        raise UsageError("bench needs --n >= 3 and --b >= 2")
    order = b * (n - 1) + 1
    try:
        start = time.perf_counter()
        assembled = cf.tnb_inverse(n, b, verify_product=False)
        assembly_ms = int((time.perf_counter() - start) * 1000)
    except cf.SingularFamilyError as err:
        print(f"singular: {err}", file=sys.stderr)
        return 2
    gauss_ms = None
    skipped = None
    agree = None
    if order <= BENCH_GAUSS_ORDER_CAP:
        dist = cf.tnb_structured(cf.MatrixKind.DISTANCE, n, b).materialize()
        start = time.perf_counter()
        generic = inverse_exact(dist)
        gauss_ms = int((time.perf_counter() - start) * 1000)
        agree = generic == assembled
    else:
        skipped = (
            f"generic exact inversion skipped at order {order} "
            f"(cap {BENCH_GAUSS_ORDER_CAP}); rerun with a smaller --b for the comparison"
        )
    payload = {
        "n": n,
        "b": b,
        "order": order,
        "assembly_ms": assembly_ms,
        "gauss_ms": gauss_ms,
        "gauss_skipped": skipped,
        "agree": agree,
    }
    if args.json is not None:
        _write_json(payload, args.json)
    if args.json != "-":
        line = f"order={order} assembly_ms={payload['assembly_ms']}"
        if gauss_ms is not None:
            line += f" gauss_ms={payload['gauss_ms']} agree={'true' if agree else 'false'}"
        else:
            line += " gauss=skipped"
        print(line)
        if skipped:
            print(skipped)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "det": _cmd_det,
    "inv": _cmd_inv,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except gr.GraphError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
