"""Closed-form determinants and inverses for the supported graph families.

Every formula here has an independent brute-force counterpart in
``cpdist.linalg``; the test suites compare the two exactly.  Block displays
are assembled from the dedicated constructors ``imat``/``jmat``/``ones_col``/
``swap2`` so each builder can be audited line by line against the matrix it
claims to produce.

The book family T_n^(b) (b triangle-fan blocks sharing one hub vertex) is
handled through ``StructuredBlockForm``: one diagonal block, one off-diagonal
block, one border column and a corner scalar, materialized by block
replication.  That keeps inverse assembly linear in the output size, which
is what makes the large benchmark instances feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .graphs import Graph, is_tree, laplacian
from .linalg import (
    RationalMatrix,
    imat,
    jmat,
    ones_col,
    swap2,
    zmat,
)


class SingularFamilyError(ValueError):
    """A closed-form inverse was requested where the family is singular."""


# Test-only hook: the verification suites must notice a mutated formula
# constant, so this offset is added to the book-family determinant.
_DET_FAULT = 0


class MatrixKind(Enum):
    DISTANCE = "distance"
    LAPLACIAN = "laplacian"
    RMAT = "rmat"
    XMAT = "xmat"


@dataclass(frozen=True)
class FormulaResult:
    det: Fraction
    inverse: Optional[RationalMatrix]
    singular: bool = False
    reason: Optional[str] = None

    def __post_init__(self):
        if self.singular != (self.inverse is None):
            raise ValueError("inverse must be present exactly when nonsingular")


@dataclass(frozen=True)
class TnFormulas:
    """Determinant, inverse and correction matrix of one triangle fan."""

    det: Fraction
    inverse: RationalMatrix
    rmat: RationalMatrix


@dataclass(frozen=True)
class StructuredBlockForm:
    """Block-repeating, hub-bordered matrix of order b*(n-1)+1.

    The full matrix has ``diag_block`` on the b diagonal positions,
    ``offdiag_block`` everywhere else, ``border_col`` along the hub column
    (and its transpose along the hub row) and ``corner`` at the hub."""

    kind: MatrixKind
    n: int
    b: int
    diag_block: RationalMatrix
    offdiag_block: RationalMatrix
    border_col: RationalMatrix
    corner: Fraction

    @property
    def order(self) -> int:
        return self.b * (self.n - 1) + 1

    def materialize(self) -> RationalMatrix:
        """Expand to the dense matrix by block replication.

        Rows are built with list repetition and slice assignment so the cost
        is one pointer copy per output entry; Fraction objects are shared."""
        size = self.n - 1
        b = self.b
        diag_rows = self.diag_block.data
        off_rows = self.offdiag_block.data
        border = [row[0] for row in self.border_col.data]
        data = []
        for k in range(b):
            lo = k * size
            for i in range(size):
                row = off_rows[i] * b
                row[lo:lo + size] = diag_rows[i]
                row.append(border[i])
                data.append(row)
        data.append(border * b + [self.corner])
        order = b * size + 1
        return RationalMatrix(order, order, data)


def _require_tn(n: int) -> None:
    if n < 3:
        raise ValueError("triangle fan requires n >= 3")


def _require_book(n: int, b: int) -> None:
    _require_tn(n)
    if b < 2:
        raise ValueError("book family requires b >= 2 (a single block is the plain fan)")


def tn_distance(n: int) -> RationalMatrix:
    """Distance matrix of the triangle fan in its canonical block form."""
    _require_tn(n)
    return RationalMatrix.block([
        [swap2(), jmat(2, n - 2)],
        [jmat(n - 2, 2), 2 * (jmat(n - 2, n - 2) - imat(n - 2))],
    ])


def tn_laplacian(n: int) -> RationalMatrix:
    _require_tn(n)
    return RationalMatrix.block([
        [(n - 1) * imat(2) - swap2(), -jmat(2, n - 2)],
        [-jmat(n - 2, 2), 2 * imat(n - 2)],
    ])


def tn_rmat(n: int) -> RationalMatrix:
    """Correction matrix R(T_n) in the single-block inverse identity
    D^-1 = -L/2 + J/2 + R/2."""
    _require_tn(n)
    return RationalMatrix.block([
        [-(n - 2) * swap2(), -jmat(2, n - 2)],
        [-jmat(n - 2, 2), imat(n - 2) - jmat(n - 2, n - 2)],
    ])


def tn_formulas(n: int) -> TnFormulas:
    """Closed forms for the triangle fan: det = (-1)^(n-1) * 2^(n-2) and the
    four-block inverse with A_2 - (n-2)/2 * J_2 in the leading corner."""
    _require_tn(n)
    det = Fraction((-1) ** (n - 1) * 2 ** (n - 2))
    inverse = RationalMatrix.block([
        [swap2() - Fraction(n - 2, 2) * jmat(2, 2), jmat(2, n - 2) / 2],
        [jmat(n - 2, 2) / 2, -imat(n - 2) / 2],
    ])
    return TnFormulas(det, inverse, tn_rmat(n))


def kmn_distance(m: int, n: int) -> RationalMatrix:
    """Distance matrix of K_{m,n}: 2(J-I) within parts, ones across."""
    if m < 1 or n < 1:
        raise ValueError("parts must be nonempty")
    return RationalMatrix.block([
        [2 * (jmat(m, m) - imat(m)), jmat(m, n)],
        [jmat(n, m), 2 * (jmat(n, n) - imat(n))],
    ])


def _star_inverse(leaves: int) -> RationalMatrix:
    """Inverse of D(K_{leaves,1}) with the leaf part leading."""
    k = leaves
    return RationalMatrix.block([
        [jmat(k, k) / (2 * k) - imat(k) / 2, ones_col(k) / k],
        [ones_col(k).transpose() / k, RationalMatrix.from_rows([[Fraction(-2 * (k - 1), k)]])],
    ])


def kmn_formulas(m: int, n: int) -> FormulaResult:
    """Determinant and inverse of the complete bipartite distance matrix.

    det = (-2)^(m+n-2) * (4(m-1)(n-1) - mn), zero exactly at (2, 2).  The
    inverse uses the star block form when either part is a single vertex and
    the general four-block form otherwise; the product D * D^-1 = I is
    checked before returning.
    """
    if m < 1 or n < 1:
        raise ValueError("parts must be nonempty")
    det = Fraction((-2) ** (m + n - 2) * (4 * (m - 1) * (n - 1) - m * n))
    if (m, n) == (2, 2):
        return FormulaResult(det, None, singular=True, reason="singular at m=n=2")
    if (m, n) == (1, 1):
        inverse = swap2()
    elif n == 1:
        inverse = _star_inverse(m)
    elif m == 1:
        blocks = _star_inverse(n)
        # Hub-first layout: swap the roles so part-1 vertices stay first.
        hub = blocks.submatrix([n], [n])
        row = blocks.submatrix([n], list(range(n)))
        col = blocks.submatrix(list(range(n)), [n])
        body = blocks.submatrix(list(range(n)), list(range(n)))
        inverse = RationalMatrix.block([[hub, row], [col, body]])
    else:
        q = 3 * m * n - 4 * (m + n - 1)
        inverse = RationalMatrix.block([
            [Fraction(3 * n - 4, 2 * q) * jmat(m, m) - imat(m) / 2, -jmat(m, n) / q],
            [-jmat(n, m) / q, Fraction(3 * m - 4, 2 * q) * jmat(n, n) - imat(n) / 2],
        ])
    product = kmn_distance(m, n) * inverse
    if product != imat(m + n):
        raise ArithmeticError(f"bipartite inverse failed the product check at ({m}, {n})")
    return FormulaResult(det, inverse)


def tree_det(tree: Graph) -> Fraction:
    """Determinant of a tree's distance matrix: (-1)^(n-1) * (n-1) * 2^(n-2)
    (the classical Graham-Pollak value, structure-independent)."""
    if not is_tree(tree):
        raise ValueError("graph is not a tree")
    n = tree.vertex_count
    return Fraction((-1) ** (n - 1) * (n - 1) * 2 ** (n - 2))


def tree_inverse(tree: Graph) -> RationalMatrix:
    """Graham-Lovasz inverse: D^-1 = -L/2 + tau tau^t / (2(n-1)) with
    tau_i = 2 - degree(i)."""
    if not is_tree(tree):
        raise ValueError("graph is not a tree")
    n = tree.vertex_count
    tau = RationalMatrix(n, 1, [[Fraction(2 - d)] for d in tree.degrees()])
    return -laplacian(tree) / 2 + (tau * tau.transpose()) / (2 * (n - 1))


def tnb_det(n: int, b: int) -> Fraction:
    """Determinant of the book-family distance matrix:
    (-1)^(b(n-4)+1) * 2^(b(n-3)+1) * b * (n-6)^(b-1)."""
    _require_book(n, b)
    sign = -1 if (b * (n - 4) + 1) % 2 else 1
    return Fraction(
        sign * 2 ** (b * (n - 3) + 1) * b * (n - 6) ** (b - 1) + _DET_FAULT
    )


def tnb_structured(kind: MatrixKind, n: int, b: int) -> StructuredBlockForm:
    """Block description of the book family's distance, Laplacian or
    correction matrix, with separate n = 3 and n >= 4 branches."""
    _require_book(n, b)
    if kind is MatrixKind.DISTANCE:
        if n == 3:
            d1 = swap2()
            d2 = 2 * jmat(2, 2)
            d3 = ones_col(2)
        else:
            d1 = RationalMatrix.block([
                [swap2(), jmat(2, n - 3)],
                [jmat(n - 3, 2), 2 * (jmat(n - 3, n - 3) - imat(n - 3))],
            ])
            d2 = RationalMatrix.block([
                [2 * jmat(2, 2), 3 * jmat(2, n - 3)],
                [3 * jmat(n - 3, 2), 4 * jmat(n - 3, n - 3)],
            ])
            d3 = RationalMatrix.block([[ones_col(2)], [2 * ones_col(n - 3)]])
        return StructuredBlockForm(kind, n, b, d1, d2, d3, Fraction(0))

    if kind is MatrixKind.LAPLACIAN:
        if n == 3:
            l1 = 2 * imat(2) - swap2()
            l2 = -ones_col(2)
        else:
            l1 = RationalMatrix.block([
                [(n - 1) * imat(2) - swap2(), -jmat(2, n - 3)],
                [-jmat(n - 3, 2), 2 * imat(n - 3)],
            ])
            l2 = RationalMatrix.block([[-ones_col(2)], [zmat(n - 3, 1)]])
        return StructuredBlockForm(kind, n, b, l1, zmat(n - 1, n - 1), l2, Fraction(2 * b))

    if kind is MatrixKind.RMAT:
        if n == 3:
            r1 = -2 * (b - 1) * imat(2) + (b + 2) * swap2()
            r2 = 2 * jmat(2, 2)
            r3 = 3 * b * ones_col(2)
            corner = Fraction(-6 * (b - 1) ** 2)
        else:
            r1 = RationalMatrix.block([
                [
                    (n - 5) * (n - 2) * (b - 1) * imat(2)
                    + (n - 2) * (b - (n - 5)) * swap2(),
                    -((n - 4) * b - 2) * jmat(2, n - 3),
                ],
                [
                    -((n - 4) * b - 2) * jmat(n - 3, 2),
                    b * (n - 6) * imat(n - 3) + (b - (n - 5)) * jmat(n - 3, n - 3),
                ],
            ])
            r2 = RationalMatrix.block([
                [-(n - 5) * (n - 2) * jmat(2, 2), 2 * jmat(2, n - 3)],
                [2 * jmat(n - 3, 2), -(n - 5) * jmat(n - 3, n - 3)],
            ])
            r3 = RationalMatrix.block([
                [(n - 6) * ((n - 4) * b - (n - 3)) * ones_col(2)],
                [-b * (n - 6) * ones_col(n - 3)],
            ])
            corner = Fraction(-(n - 5) * (n - 6) * (b - 1) ** 2)
        return StructuredBlockForm(kind, n, b, r1, r2, r3, corner)

    raise ValueError(f"no structured builder for kind {kind!r}")


def tnb_inverse(n: int, b: int, verify_product: bool = True) -> RationalMatrix:
    """Inverse of the book-family distance matrix for n != 6:
    D^-1 = -L/2 + J/(2b) + R/(2(n-6)b), combined block by block and then
    replicated.

    With ``verify_product`` the exact product D * X = I is checked before
    returning (cubic in the order, fine at desk scale); the large-instance
    benchmark disables it.
    """
    blocks = _tnb_inverse_blocks(n, b)
    x = blocks.materialize()
    if verify_product:
        d = tnb_structured(MatrixKind.DISTANCE, n, b).materialize()
        if d * x != imat(blocks.order):
            raise ArithmeticError(
                f"book-family inverse failed the product check at ({n}, {b})"
            )
    return x


def _tnb_inverse_blocks(n: int, b: int) -> StructuredBlockForm:
    _require_book(n, b)
    if n == 6:
        raise SingularFamilyError("distance matrix singular (n=6, b>=2)")
    lap = tnb_structured(MatrixKind.LAPLACIAN, n, b)
    rmat = tnb_structured(MatrixKind.RMAT, n, b)
    size = n - 1
    j_weight = Fraction(1, 2 * b)
    r_weight = Fraction(1, 2 * (n - 6) * b)
    x1 = -lap.diag_block / 2 + j_weight * jmat(size, size) + r_weight * rmat.diag_block
    x2 = j_weight * jmat(size, size) + r_weight * rmat.offdiag_block
    x3 = -lap.border_col / 2 + j_weight * ones_col(size) + r_weight * rmat.border_col
    corner = -lap.corner / 2 + j_weight + r_weight * rmat.corner
    return StructuredBlockForm(MatrixKind.XMAT, n, b, x1, x2, x3, corner)


def tnb_xblocks(n: int, b: int) -> StructuredBlockForm:
    """The inverse's block description written out directly (the X displays),
    rather than combined from L, J and R.  Materializes to the same matrix as
    ``tnb_inverse``; the suites assert that equality."""
    _require_book(n, b)
    if n == 6:
        raise SingularFamilyError("distance matrix singular (n=6, b>=2)")
    if n == 3:
        x1 = -(Fraction(1, 6 * b)) * ((4 * b - 1) * jmat(2, 2) - 6 * b * swap2())
        x2 = jmat(2, 2) / (6 * b)
        x3 = ones_col(2) / (2 * b)
        corner = Fraction(3 - 4 * b, 2 * b)
        return StructuredBlockForm(MatrixKind.XMAT, n, b, x1, x2, x3, corner)
    scale = Fraction(1, 2 * b * (n - 6))
    x1 = scale * RationalMatrix.block([
        [
            (4 * b - (n - 4) ** 2) * jmat(2, 2) + 2 * b * (n - 6) * swap2(),
            (n - 4 - 2 * b) * jmat(2, n - 3),
        ],
        [
            (n - 4 - 2 * b) * jmat(n - 3, 2),
            -(n - 6) * b * imat(n - 3) + (b - 1) * jmat(n - 3, n - 3),
        ],
    ])
    x2 = scale * RationalMatrix.block([
        [-((n - 4) ** 2) * jmat(2, 2), (n - 4) * jmat(2, n - 3)],
        [(n - 4) * jmat(n - 3, 2), -jmat(n - 3, n - 3)],
    ])
    x3 = RationalMatrix.block([
        [(b * (n - 3) - (n - 4)) * ones_col(2)],
        [-(b - 1) * ones_col(n - 3)],
    ]) / (2 * b)
    corner = Fraction(-n * (b - 1) ** 2 + (3 * b * b - 10 * b + 6), 2 * b)
    return StructuredBlockForm(MatrixKind.XMAT, n, b, x1, x2, x3, corner)
