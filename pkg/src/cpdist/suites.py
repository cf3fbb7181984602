"""Verification suites: every closed-form claim in the package checked
against the brute-force oracles, cell by cell.

A cell is one parameter tuple plus a thunk that raises ``CellFailure`` on the
first mismatch.  Suites aggregate cells into a ``VerificationReport`` whose
JSON form is stable (fixed key order, rationals as strings); only the
wall-time field varies between runs.  ``CPDIST_THREADS`` caps an optional
thread pool over cells; results are merged in cell order either way.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import closed_form as cf
from . import graphs as gr
from . import spectra as sp
from .linalg import (
    CharPoly,
    RationalMatrix,
    aibj_analysis,
    char_poly_exact,
    det_exact,
    imat,
    inverse_exact,
    jmat,
    rank_one_update_inverse,
    schur_inverse,
    swap2,
    zmat,
)
from .rng import Lcg, random_invertible, random_matrix, random_rank_one, random_tree_edges

SUITE_ORDER = ("recognizer", "lemmas", "dets", "inverses", "spectra")
DEFAULT_SEED = 42


class CellFailure(Exception):
    def __init__(self, expected, actual, location: str):
        super().__init__(f"{location}: expected {expected}, got {actual}")
        self.expected = str(expected)
        self.actual = str(actual)
        self.location = location


def _expect(condition: bool, expected, actual, location: str) -> None:
    if not condition:
        raise CellFailure(expected, actual, location)


def _expect_equal(expected, actual, location: str) -> None:
    _expect(expected == actual, expected, actual, location)


@dataclass
class VerificationReport:
    suite: str
    grid: list
    passed: int
    failed: int
    failures: list
    wall_time_ms: int

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            "wall_time_ms": self.wall_time_ms,
        }


def _worker_count() -> int:
    raw = os.environ.get("CPDIST_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_one(cell):
    params, thunk = cell
    try:
        thunk()
    except CellFailure as failure:
        return {
            "params": params,
            "expected": failure.expected,
            "actual": failure.actual,
            "location": failure.location,
        }
    return None


def _run_cells(cells):
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, cells))
    return [_run_one(cell) for cell in cells]


def run_suite(name: str, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Run one named suite (or ``all``) and aggregate the outcome."""
    if name != "all" and name not in SUITE_ORDER:
        raise ValueError(f"unknown suite {name!r}; pick from {('all',) + SUITE_ORDER}")
    start = time.perf_counter()
    names = SUITE_ORDER if name == "all" else (name,)
    cells = []
    for sub in names:
        cells.extend(_SUITE_BUILDERS[sub](seed))
    failures = [out for out in _run_cells(cells) if out is not None]
    return VerificationReport(
        suite=name,
        grid=[params for params, _ in cells],
        passed=len(cells) - len(failures),
        failed=len(failures),
        failures=failures,
        wall_time_ms=int((time.perf_counter() - start) * 1000),
    )


# ---------------------------------------------------------------------------
# shared fixtures


def petersen_graph() -> gr.Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return gr.Graph.from_edges(10, outer + spokes + inner)


def complete_graph(n: int) -> gr.Graph:
    return gr.Graph.from_edges(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    )


def cycle_graph(n: int) -> gr.Graph:
    return gr.Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def seeded_trees(count: int = 50, max_n: int = 12, seed: int = DEFAULT_SEED):
    """The fixed corpus of random trees used by dets/inverses suites."""
    rng = Lcg(seed)
    out = []
    for index in range(count):
        n = rng.randint(2, max_n)
        out.append((index, gr.build_family(gr.Tree(random_tree_edges(n, rng)))))
    return out


def _cp_corpus(seed: int):
    """(params, graph, expected verdict) for the recognizer corpus."""
    entries = []
    for n in range(3, 9):
        for b in range(2, 5):
            entries.append((
                {"family": "tn-book", "n": n, "b": b},
                gr.build_family(gr.TnBook(n, b)),
                True,
            ))
    for m in range(1, 5):
        for n in range(1, 5):
            entries.append((
                {"family": "kmn", "m": m, "n": n},
                gr.build_family(gr.CompleteBipartite(m, n)),
                True,
            ))
    entries.append(({"family": "k4"}, gr.build_family(gr.K4()), True))
    path6 = gr.build_family(gr.Tree(tuple((i, i + 1) for i in range(1, 6))))
    entries.append(({"family": "tree", "shape": "path", "n": 6}, path6, True))
    rng = Lcg(seed)
    random_tree = gr.build_family(gr.Tree(random_tree_edges(9, rng)))
    entries.append(({"family": "tree", "shape": "seeded", "n": 9}, random_tree, True))
    entries.append(({"family": "cycle", "n": 4}, cycle_graph(4), True))
    entries.append(({"family": "complete", "n": 5}, complete_graph(5), False))
    entries.append(({"family": "petersen"}, petersen_graph(), False))
    return entries


# ---------------------------------------------------------------------------
# recognizer suite: graph construction, metrics, block structure, cp verdicts


def _check_metric_invariants(g: gr.Graph, location: str) -> None:
    dist = gr.all_pairs_distances(g)
    n = g.vertex_count
    _expect(dist.is_symmetric(), "symmetric", "asymmetric", f"{location}: distance symmetry")
    _expect(
        all(dist.data[i][i] == 0 for i in range(n)),
        "zero diagonal", "nonzero diagonal", f"{location}: distance diagonal",
    )
    _expect(
        all(e.denominator == 1 and e >= 0 for e in dist.entries()),
        "nonnegative integers", "other", f"{location}: distance entries",
    )
    if n <= 40:
        d = dist.data
        ok = all(
            d[i][j] <= d[i][k] + d[k][j]
            for i in range(n) for j in range(n) for k in range(n)
        )
        _expect(ok, "triangle inequality", "violated", f"{location}: triangle inequality")
    lap = gr.laplacian(g)
    _expect(
        all(sum(row) == 0 for row in lap.data),
        "zero row sums", "nonzero", f"{location}: laplacian row sums",
    )
    degrees = g.degrees()
    adjacency_ok = True
    for i in range(n):
        for j in range(n):
            expected = (
                Fraction(degrees[i]) if i == j
                else Fraction(-1) if (min(i + 1, j + 1), max(i + 1, j + 1)) in g.edges
                else Fraction(0)
            )
            if lap.data[i][j] != expected:
                adjacency_ok = False
    _expect(adjacency_ok, "diag(deg) - adjacency", "mismatch", f"{location}: laplacian form")


def _recognizer_cells(seed: int = DEFAULT_SEED):
    cells = []
    corpus = _cp_corpus(seed)

    for params, graph, _ in corpus:
        cell_params = {"check": "metric-invariants", **params}
        cells.append((
            cell_params,
            (lambda g=graph, loc=str(params): _check_metric_invariants(g, loc)),
        ))

    def tn_blockform(n: int):
        g = gr.build_family(gr.TnSingle(n))
        _expect_equal(cf.tn_distance(n), gr.all_pairs_distances(g), f"tn distance block form n={n}")
        _expect_equal(cf.tn_laplacian(n), gr.laplacian(g), f"tn laplacian block form n={n}")

    for n in range(3, 9):
        cells.append(({"check": "tn-blockform", "n": n}, lambda n=n: tn_blockform(n)))

    def kmn_blockform(m: int, n: int):
        g = gr.build_family(gr.CompleteBipartite(m, n))
        _expect_equal(cf.kmn_distance(m, n), gr.all_pairs_distances(g), f"kmn block form ({m},{n})")

    for m in range(1, 5):
        for n in range(1, 5):
            cells.append((
                {"check": "kmn-blockform", "m": m, "n": n},
                lambda m=m, n=n: kmn_blockform(m, n),
            ))

    def tnb_blockform(n: int, b: int):
        g = gr.build_family(gr.TnBook(n, b))
        dist = cf.tnb_structured(cf.MatrixKind.DISTANCE, n, b).materialize()
        _expect_equal(dist, gr.all_pairs_distances(g), f"book distance block form ({n},{b})")
        lap = cf.tnb_structured(cf.MatrixKind.LAPLACIAN, n, b).materialize()
        _expect_equal(lap, gr.laplacian(g), f"book laplacian block form ({n},{b})")
        _expect_equal(
            g.edge_count, b * (2 * n - 3), f"book edge count ({n},{b})"
        )

    for n in range(3, 9):
        for b in range(2, 5):
            cells.append((
                {"check": "tnb-blockform", "n": n, "b": b},
                lambda n=n, b=b: tnb_blockform(n, b),
            ))

    def tnb_blocks(n: int, b: int):
        g = gr.build_family(gr.TnBook(n, b))
        decomposition = gr.biconnected_blocks(g)
        hub = b * (n - 1) + 1
        _expect_equal(b, len(decomposition.blocks), f"book block count ({n},{b})")
        _expect(
            all(len(block) == n for block in decomposition.blocks),
            f"blocks of {n} vertices", [len(bl) for bl in decomposition.blocks],
            f"book block sizes ({n},{b})",
        )
        _expect_equal(frozenset({hub}), decomposition.cut_vertices, f"book cut vertex ({n},{b})")

    for n in range(3, 9):
        for b in range(2, 5):
            cells.append((
                {"check": "tnb-blocks", "n": n, "b": b},
                lambda n=n, b=b: tnb_blocks(n, b),
            ))

    def path_blocks():
        path = gr.build_family(gr.Tree(((1, 2), (2, 3), (3, 4))))
        decomposition = gr.biconnected_blocks(path)
        _expect_equal(3, len(decomposition.blocks), "path block count")
        _expect(
            all(len(block) == 2 for block in decomposition.blocks),
            "edge blocks", decomposition.blocks, "path block sizes",
        )
        _expect_equal(frozenset({2, 3}), decomposition.cut_vertices, "path cut vertices")

    cells.append(({"check": "path-blocks"}, path_blocks))

    def k4_blocks():
        decomposition = gr.biconnected_blocks(gr.build_family(gr.K4()))
        _expect_equal(((1, 2, 3, 4),), decomposition.blocks, "k4 single block")
        _expect_equal(frozenset(), decomposition.cut_vertices, "k4 cut vertices")

    cells.append(({"check": "k4-blocks"}, k4_blocks))

    def cp_verdict(graph: gr.Graph, expected: bool, location: str):
        verdict, certificate = gr.is_cp_graph(graph)
        _expect_equal(expected, verdict, f"{location}: cp verdict {certificate}")

    for params, graph, expected in corpus:
        cells.append((
            {"check": "cp-verdict", **params},
            (lambda g=graph, e=expected, loc=str(params): cp_verdict(g, e, loc)),
        ))
    return cells


# ---------------------------------------------------------------------------
# lemmas suite: generic exact-linalg facts


def _lemmas_cells(seed: int = DEFAULT_SEED):
    cells = []

    def aibj_cell(a: int, b: int, n: int):
        analysis = aibj_analysis(a, b, n)
        matrix = a * imat(n) + b * jmat(n, n)
        _expect_equal(det_exact(matrix), analysis.det, f"aI+bJ det ({a},{b},{n})")
        check = sp.verify_claim(matrix, analysis.eigs)
        _expect(check.ok, str(check.claimed), str(check.computed), f"aI+bJ spectrum ({a},{b},{n})")
        if a + n * b != 0:
            _expect_equal(
                imat(n), matrix * analysis.inverse, f"aI+bJ inverse ({a},{b},{n})"
            )
        else:
            _expect(analysis.inverse is None, "no inverse", "inverse", f"aI+bJ singular ({a},{b},{n})")

    for a in range(-3, 4):
        if a == 0:
            continue
        for b in range(-3, 4):
            for n in range(2, 7):
                cells.append((
                    {"check": "aibj", "a": a, "b": b, "n": n},
                    lambda a=a, b=b, n=n: aibj_cell(a, b, n),
                ))

    def swap_identities():
        a2 = swap2()
        _expect_equal(imat(2), a2 * a2, "swap squared")
        _expect_equal(jmat(2, 2), a2 * jmat(2, 2) * a2, "swap conjugates ones")

    cells.append(({"check": "swap-identities"}, swap_identities))

    def ones_identities(r: int, s: int, t: int):
        a2 = swap2()
        _expect_equal(jmat(2, s), a2 * jmat(2, s), f"swap absorbs ones ({s})")
        _expect_equal(jmat(r, 2), jmat(r, 2) * a2, f"ones absorbs swap ({r})")
        _expect_equal(t * jmat(r, s), jmat(r, t) * jmat(t, s), f"ones product ({r},{t},{s})")

    for r in range(2, 7):
        for s in range(2, 7):
            for t in range(2, 7):
                cells.append((
                    {"check": "ones-identities", "r": r, "s": s, "t": t},
                    lambda r=r, s=s, t=t: ones_identities(r, s, t),
                ))

    # Seeded instances are drawn eagerly at build time so the cells stay
    # independent of each other (and of the thread pool).

    def schur_cell(m: RationalMatrix, split: int, instance: int):
        head = list(range(split))
        rest = list(range(split, m.rows))
        assembled = schur_inverse(
            m.submatrix(head),
            m.submatrix(head, rest),
            m.submatrix(rest, head),
            m.submatrix(rest, rest),
        )
        _expect_equal(inverse_exact(m), assembled, f"schur oracle equivalence #{instance}")

    rng_schur = Lcg(seed)
    for instance in range(100):
        while True:
            order = rng_schur.randint(2, 6)
            split = rng_schur.randint(1, order - 1)
            m = random_matrix(rng_schur, order, order)
            if det_exact(m) != 0 and det_exact(m.submatrix(list(range(split)))) != 0:
                break
        cells.append((
            {"check": "schur", "instance": instance},
            lambda m=m, split=split, i=instance: schur_cell(m, split, i),
        ))

    def rank_one_cell(a: RationalMatrix, update: RationalMatrix, instance: int):
        result = rank_one_update_inverse(inverse_exact(a), update)
        _expect_equal(inverse_exact(a + update), result, f"rank-one oracle equivalence #{instance}")

    rng_rank_one = Lcg(seed + 1)
    for instance in range(100):
        order = rng_rank_one.randint(2, 6)
        a = random_invertible(rng_rank_one, order)
        while True:
            update = random_rank_one(rng_rank_one, order)
            if det_exact(a + update) != 0:
                break
        cells.append((
            {"check": "rank-one", "instance": instance},
            lambda a=a, u=update, i=instance: rank_one_cell(a, u, i),
        ))

    def block_triangular_cell(a, b, c, instance: int):
        m = RationalMatrix.block([[a, zmat(a.rows, b.cols)], [c, b]])
        _expect_equal(
            det_exact(a) * det_exact(b), det_exact(m), f"block triangular det #{instance}"
        )

    rng_block = Lcg(seed + 2)
    for instance in range(25):
        top = rng_block.randint(1, 4)
        bottom = rng_block.randint(1, 4)
        cells.append((
            {"check": "block-triangular-det", "instance": instance},
            lambda a=random_matrix(rng_block, top, top),
                   b=random_matrix(rng_block, bottom, bottom),
                   c=random_matrix(rng_block, bottom, top),
                   i=instance: block_triangular_cell(a, b, c, i),
        ))

    def det_product_cell(a, b, instance: int):
        _expect_equal(
            det_exact(a) * det_exact(b), det_exact(a * b), f"det multiplicativity #{instance}"
        )

    rng_prod = Lcg(seed + 3)
    for instance in range(25):
        order = rng_prod.randint(1, 6)
        cells.append((
            {"check": "det-multiplicative", "instance": instance},
            lambda a=random_matrix(rng_prod, order, order),
                   b=random_matrix(rng_prod, order, order),
                   i=instance: det_product_cell(a, b, i),
        ))

    def inverse_roundtrip_cell(a: RationalMatrix, instance: int):
        inv = inverse_exact(a)
        _expect_equal(imat(a.rows), a * inv, f"inverse right product #{instance}")
        _expect_equal(imat(a.rows), inv * a, f"inverse left product #{instance}")

    rng_inv = Lcg(seed + 4)
    for instance in range(100):
        order = rng_inv.randint(1, 8)
        cells.append((
            {"check": "inverse-roundtrip", "instance": instance},
            lambda a=random_invertible(rng_inv, order), i=instance: inverse_roundtrip_cell(a, i),
        ))

    def charpoly_cell(m: RationalMatrix, instance: int):
        order = m.rows
        poly = char_poly_exact(m)
        _expect_equal(
            Fraction((-1) ** order) * det_exact(m), poly.coeffs[0],
            f"charpoly constant term #{instance}",
        )
        _expect_equal(-m.trace(), poly.coeffs[order - 1], f"charpoly trace term #{instance}")
        for x in (-2, 1, 3):
            shifted = x * imat(order) - m
            _expect_equal(
                det_exact(shifted), poly.evaluate(x), f"charpoly eval x={x} #{instance}"
            )

    rng_charpoly = Lcg(seed + 5)
    for instance in range(25):
        order = rng_charpoly.randint(1, 6)
        cells.append((
            {"check": "charpoly-consistency", "instance": instance},
            lambda m=random_matrix(rng_charpoly, order, order), i=instance: charpoly_cell(m, i),
        ))
    return cells


# ---------------------------------------------------------------------------
# dets suite: every determinant formula against the Bareiss oracle


def _dets_cells(seed: int = DEFAULT_SEED):
    cells = []

    def tn_det(n: int):
        dist = gr.all_pairs_distances(gr.build_family(gr.TnSingle(n)))
        _expect_equal(det_exact(dist), cf.tn_formulas(n).det, f"tn det n={n}")

    for n in range(3, 13):
        cells.append(({"check": "tn-det", "n": n}, lambda n=n: tn_det(n)))

    def kmn_det(m: int, n: int):
        dist = gr.all_pairs_distances(gr.build_family(gr.CompleteBipartite(m, n)))
        result = cf.kmn_formulas(m, n)
        oracle = det_exact(dist)
        _expect_equal(oracle, result.det, f"kmn det ({m},{n})")
        _expect_equal((m, n) == (2, 2), result.det == 0, f"kmn singularity ({m},{n})")

    for m in range(1, 9):
        for n in range(1, 9):
            cells.append((
                {"check": "kmn-det", "m": m, "n": n},
                lambda m=m, n=n: kmn_det(m, n),
            ))

    def tnb_det_cell(n: int, b: int):
        dist = gr.all_pairs_distances(gr.build_family(gr.TnBook(n, b)))
        value = cf.tnb_det(n, b)
        _expect_equal(det_exact(dist), value, f"book det ({n},{b})")
        _expect_equal(n == 6, value == 0, f"book singularity ({n},{b})")

    for n in range(3, 11):
        for b in range(2, 6):
            cells.append((
                {"check": "tnb-det", "n": n, "b": b},
                lambda n=n, b=b: tnb_det_cell(n, b),
            ))

    def tree_det_cell(index: int, tree: gr.Graph):
        dist = gr.all_pairs_distances(tree)
        _expect_equal(det_exact(dist), cf.tree_det(tree), f"tree det #{index}")

    for index, tree in seeded_trees(seed=seed):
        cells.append((
            {"check": "tree-det", "instance": index, "n": tree.vertex_count},
            lambda i=index, t=tree: tree_det_cell(i, t),
        ))
    return cells


# ---------------------------------------------------------------------------
# inverses suite: every inverse formula, identity and block identity


def _inverses_cells(seed: int = DEFAULT_SEED):
    cells = []

    def tn_inverse(n: int):
        g = gr.build_family(gr.TnSingle(n))
        dist = gr.all_pairs_distances(g)
        formulas = cf.tn_formulas(n)
        _expect_equal(imat(n), dist * formulas.inverse, f"tn inverse product n={n}")
        _expect_equal(inverse_exact(dist), formulas.inverse, f"tn inverse oracle n={n}")
        combined = -gr.laplacian(g) / 2 + jmat(n, n) / 2 + formulas.rmat / 2
        _expect_equal(combined, formulas.inverse, f"tn inverse identity n={n}")
        recovered = 2 * formulas.inverse + gr.laplacian(g) - jmat(n, n)
        _expect_equal(formulas.rmat, recovered, f"tn correction identity n={n}")

    for n in range(3, 13):
        cells.append(({"check": "tn-inverse", "n": n}, lambda n=n: tn_inverse(n)))

    def kmn_inverse(m: int, n: int):
        result = cf.kmn_formulas(m, n)
        if (m, n) == (2, 2):
            _expect(result.singular, "singular", "nonsingular", "kmn (2,2) must be singular")
            return
        dist = gr.all_pairs_distances(gr.build_family(gr.CompleteBipartite(m, n)))
        _expect_equal(imat(m + n), dist * result.inverse, f"kmn inverse product ({m},{n})")

    for m in range(1, 9):
        for n in range(1, 9):
            cells.append((
                {"check": "kmn-inverse", "m": m, "n": n},
                lambda m=m, n=n: kmn_inverse(m, n),
            ))

    def tnb_inverse_cell(n: int, b: int):
        order = b * (n - 1) + 1
        x = cf.tnb_inverse(n, b, verify_product=False)
        dist = cf.tnb_structured(cf.MatrixKind.DISTANCE, n, b).materialize()
        _expect_equal(imat(order), dist * x, f"book inverse product ({n},{b})")
        _expect_equal(inverse_exact(dist), x, f"book inverse oracle ({n},{b})")
        _expect_equal(
            cf.tnb_xblocks(n, b).materialize(), x, f"book inverse block display ({n},{b})"
        )

    def tnb_block_identities(n: int, b: int):
        dblocks = cf.tnb_structured(cf.MatrixKind.DISTANCE, n, b)
        xblocks = cf.tnb_xblocks(n, b)
        size = n - 1
        d1, d2, d3 = dblocks.diag_block, dblocks.offdiag_block, dblocks.border_col
        x1, x2, x3 = xblocks.diag_block, xblocks.offdiag_block, xblocks.border_col
        x = xblocks.corner
        _expect_equal(
            imat(size), d1 * x1 + (b - 1) * (d2 * x2) + d3 * x3.transpose(),
            f"diagonal block identity ({n},{b})",
        )
        _expect_equal(
            zmat(size, size),
            d1 * x2 + d2 * x1 + (b - 2) * (d2 * x2) + d3 * x3.transpose(),
            f"off-diagonal block identity ({n},{b})",
        )
        _expect_equal(
            zmat(1, size), d3.transpose() * x1 + (b - 1) * (d3.transpose() * x2),
            f"hub row identity ({n},{b})",
        )
        _expect_equal(
            zmat(size, 1), d1 * x3 + (b - 1) * (d2 * x3) + x * d3,
            f"hub column identity ({n},{b})",
        )
        _expect_equal(
            RationalMatrix.from_rows([[1]]), b * (d3.transpose() * x3),
            f"hub corner identity ({n},{b})",
        )

    for n in (3, 4, 5, 7, 8, 9, 10):
        for b in range(2, 6):
            cells.append((
                {"check": "tnb-inverse", "n": n, "b": b},
                lambda n=n, b=b: tnb_inverse_cell(n, b),
            ))
            cells.append((
                {"check": "tnb-block-identities", "n": n, "b": b},
                lambda n=n, b=b: tnb_block_identities(n, b),
            ))

    def tnb_singular(b: int):
        try:
            cf.tnb_inverse(6, b)
        except cf.SingularFamilyError:
            return
        raise CellFailure("SingularFamilyError", "no error", f"book inverse n=6 b={b}")

    for b in range(2, 6):
        cells.append(({"check": "tnb-singular", "n": 6, "b": b}, lambda b=b: tnb_singular(b)))

    def tree_inverse_cell(index: int, tree: gr.Graph):
        dist = gr.all_pairs_distances(tree)
        inv = cf.tree_inverse(tree)
        _expect_equal(imat(tree.vertex_count), dist * inv, f"tree inverse product #{index}")
        _expect_equal(inverse_exact(dist), inv, f"tree inverse oracle #{index}")

    for index, tree in seeded_trees(seed=seed):
        cells.append((
            {"check": "tree-inverse", "instance": index, "n": tree.vertex_count},
            lambda i=index, t=tree: tree_inverse_cell(i, t),
        ))
    return cells


# ---------------------------------------------------------------------------
# spectra suite: eigenvalue tables against exact characteristic polynomials


def _spectra_cells(seed: int = DEFAULT_SEED):
    cells = []

    def part_order(part: str, n: int, b: int) -> int:
        return {"B": 2 * b, "N": b * (n - 3), "NC": b * (n - 3) + 1}[part]

    def linear_factor_product(claim) -> CharPoly:
        poly = CharPoly.one()
        for value, mult in claim.pairs:
            poly = poly * (CharPoly.linear(value) ** mult)
        return poly

    def spectrum_cell(part: str, n: int, b: int):
        claim = sp.claimed_spectrum(part, n, b)
        _expect_equal(
            part_order(part, n, b), claim.total_order, f"claim degree {part} ({n},{b})"
        )
        matrix = sp.principal_submatrix(part, n, b)
        _expect_equal(matrix.trace(), claim.trace_sum(), f"claim trace {part} ({n},{b})")
        check = sp.verify_claim(matrix, claim)
        _expect(
            check.ok, str(check.claimed), str(check.computed), f"spectrum {part} ({n},{b})"
        )
        if claim.quadratic is not None:
            quotient, remainder = check.computed.divide_by(claim.quadratic)
            _expect(
                all(c == 0 for c in remainder), "zero remainder", remainder,
                f"quadratic division {part} ({n},{b})",
            )
            _expect_equal(
                linear_factor_product(claim), quotient, f"quadratic quotient {part} ({n},{b})"
            )

    for n in range(3, 11):
        for b in range(2, 6):
            cells.append((
                {"check": "spectrum", "part": "B", "n": n, "b": b},
                lambda n=n, b=b: spectrum_cell("B", n, b),
            ))
    for part in ("N", "NC"):
        for n in range(4, 11):
            for b in range(2, 6):
                cells.append((
                    {"check": "spectrum", "part": part, "n": n, "b": b},
                    lambda p=part, n=n, b=b: spectrum_cell(p, n, b),
                ))

    def single_fan_base(n: int):
        rmat = cf.tn_rmat(n)
        base = rmat.submatrix([0, 1])
        expected = CharPoly.linear(n - 2) * CharPoly.linear(-(n - 2))
        _expect_equal(expected, char_poly_exact(base), f"single-fan base spectrum n={n}")

    def single_fan_nonbase(n: int):
        rmat = cf.tn_rmat(n)
        nonbase = rmat.submatrix(list(range(2, n)))
        expected = (CharPoly.linear(1) ** (n - 3)) * CharPoly.linear(3 - n)
        _expect_equal(expected, char_poly_exact(nonbase), f"single-fan nonbase spectrum n={n}")

    for n in range(3, 11):
        cells.append((
            {"check": "single-fan-spectrum", "part": "B", "n": n},
            lambda n=n: single_fan_base(n),
        ))
    for n in range(4, 11):
        cells.append((
            {"check": "single-fan-spectrum", "part": "N", "n": n},
            lambda n=n: single_fan_nonbase(n),
        ))
    return cells


_SUITE_BUILDERS = {
    "recognizer": _recognizer_cells,
    "lemmas": _lemmas_cells,
    "dets": _dets_cells,
    "inverses": _inverses_cells,
    "spectra": _spectra_cells,
}
