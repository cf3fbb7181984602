"""Exact rational dense linear algebra.

Everything in here is tolerance-free: entries are ``fractions.Fraction``
values, determinants come from fraction-free Bareiss elimination on a
denominator-cleared integer matrix, inverses from exact Gauss-Jordan, and
characteristic polynomials from the Faddeev-LeVerrier recursion carried out
in integer arithmetic.  These routines double as the brute-force oracles for
every closed-form formula in the package, so they deliberately avoid any
shortcut shared with the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Entry = Union[int, Fraction]


class SingularMatrixError(ValueError):
    """Exact inverse requested for a singular matrix; carries the rank."""

    def __init__(self, message: str, rank: int):
        super().__init__(f"{message} (rank {rank})")
        self.rank = rank


def rational_str(q: Fraction) -> str:
    """Serialize exactly: ``p/q``, or just ``p`` for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class RationalMatrix:
    """Dense matrix of ``Fraction`` entries stored as a list of row lists.

    The plain constructor trusts its input (used on hot paths where entries
    are already Fractions); ``from_rows`` coerces ints.  Indices are 0-based;
    graph-facing code translates 1-based vertex labels at its boundary.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list):
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "RationalMatrix":
        data = [[Fraction(e) for e in row] for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and column")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols, data)

    @classmethod
    def block(cls, grid: Sequence[Sequence["RationalMatrix"]]) -> "RationalMatrix":
        """Assemble from a 2-d grid of conformal blocks."""
        data: list[list[Fraction]] = []
        cols = None
        for block_row in grid:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise ValueError("block row heights differ")
            for i in range(height):
                row: list[Fraction] = []
                for b in block_row:
                    row.extend(b.data[i])
                data.append(row)
            if cols is None:
                cols = len(data[0])
            elif len(data[-1]) != cols:
                raise ValueError("block column widths differ")
        return cls(len(data), cols or 0, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    __hash__ = None  # mutable payload

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            body = "; ".join(
                " ".join(rational_str(e) for e in row) for row in self.data
            )
            return f"RationalMatrix({self.rows}x{self.cols}: {body})"
        return f"RationalMatrix({self.rows}x{self.cols})"

    def __getitem__(self, key: tuple) -> Fraction:
        i, j = key
        return self.data[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        d = self.data
        return all(
            d[i][j] == d[j][i] for i in range(self.rows) for j in range(i)
        )

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows, [list(col) for col in zip(*self.data)]
        )

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def submatrix(self, row_idx: Sequence[int], col_idx: Optional[Sequence[int]] = None) -> "RationalMatrix":
        if col_idx is None:
            col_idx = row_idx
        data = [[self.data[i][j] for j in col_idx] for i in row_idx]
        return RationalMatrix(len(row_idx), len(col_idx), data)

    def entries(self) -> Iterable[Fraction]:
        for row in self.data:
            yield from row

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._conform(other)
        return RationalMatrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._conform(other)
        return RationalMatrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(
            self.rows, self.cols, [[-e for e in row] for row in self.data]
        )

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            cols = list(zip(*other.data))
            data = [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.data
            ]
            return RationalMatrix(self.rows, other.cols, data)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def __truediv__(self, other):
        return self._scale(Fraction(1, 1) / Fraction(other))

    def _scale(self, factor) -> "RationalMatrix":
        f = Fraction(factor)
        return RationalMatrix(
            self.rows, self.cols, [[f * e for e in row] for row in self.data]
        )

    def _conform(self, other: "RationalMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix dimensions differ")


def imat(n: int) -> RationalMatrix:
    """Identity matrix of order n."""
    one, zero = Fraction(1), Fraction(0)
    return RationalMatrix(
        n, n, [[one if i == j else zero for j in range(n)] for i in range(n)]
    )


def jmat(rows: int, cols: int) -> RationalMatrix:
    """All-ones matrix."""
    one = Fraction(1)
    return RationalMatrix(rows, cols, [[one] * cols for _ in range(rows)])


def zmat(rows: int, cols: int) -> RationalMatrix:
    zero = Fraction(0)
    return RationalMatrix(rows, cols, [[zero] * cols for _ in range(rows)])


def ones_col(n: int) -> RationalMatrix:
    return jmat(n, 1)


def swap2() -> RationalMatrix:
    """The 2x2 exchange matrix (zero diagonal, ones off it)."""
    return RationalMatrix.from_rows([[0, 1], [1, 0]])


def diag(values: Sequence[Entry]) -> RationalMatrix:
    n = len(values)
    zero = Fraction(0)
    data = [[zero] * n for _ in range(n)]
    for i, v in enumerate(values):
        data[i][i] = Fraction(v)
    return RationalMatrix(n, n, data)


def _row_lcm(row: Sequence[Fraction]) -> int:
    l = 1
    for e in row:
        d = e.denominator
        l = l * d // gcd(l, d)
    return l


def det_exact(m: RationalMatrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination.

    Each row is scaled by the LCM of its denominators first, so the
    elimination itself runs in plain integers; the determinant is rescaled
    at the end.  Pivots are the first nonzero entry in each column.
    """
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    scale = 1
    a: list[list[int]] = []
    for row in m.data:
        l = _row_lcm(row)
        scale *= l
        a.append([e.numerator * (l // e.denominator) for e in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals by row echelon reduction."""
    a = [list(row) for row in m.data]
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, m.rows):
            f = a[i][c]
            if f:
                ratio = f / pivot
                a[i] = [x - ratio * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m.rows:
            break
    return r


def inverse_exact(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse via Gauss-Jordan; pivot is the first nonzero in column."""
    if not m.is_square:
        raise ValueError("inverse requires a square matrix")
    n = m.rows
    one, zero = Fraction(1), Fraction(0)
    aug = [
        list(row) + [one if i == j else zero for j in range(n)]
        for i, row in enumerate(m.data)
    ]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular matrix", rank(m))
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pivot = aug[k][k]
        if pivot != 1:
            aug[k] = [e / pivot for e in aug[k]]
        row_k = aug[k]
        for r in range(n):
            if r == k:
                continue
            f = aug[r][k]
            if f:
                aug[r] = [x - f * y for x, y in zip(aug[r], row_k)]
    return RationalMatrix(n, n, [row[n:] for row in aug])


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial with exact coefficients, ascending by degree."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @classmethod
    def linear(cls, root: Entry) -> "CharPoly":
        return cls((-Fraction(root), Fraction(1)))

    @classmethod
    def one(cls) -> "CharPoly":
        return cls((Fraction(1),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: Entry) -> Fraction:
        xq = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * xq + c
        return acc

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CharPoly(tuple(out))

    def __pow__(self, exponent: int) -> "CharPoly":
        result = CharPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def divide_by(self, divisor: "CharPoly") -> tuple:
        """Exact division by a monic divisor: (quotient, remainder coeffs)."""
        num = list(self.coeffs)
        d = divisor.coeffs
        dn = len(d) - 1
        if dn > self.degree:
            raise ValueError("divisor degree exceeds dividend degree")
        quot = [Fraction(0)] * (len(num) - dn)
        for i in range(len(num) - 1, dn - 1, -1):
            c = num[i]
            quot[i - dn] = c
            if c:
                for j in range(dn + 1):
                    num[i - dn + j] -= c * d[j]
        return CharPoly(tuple(quot)), tuple(num[:dn])

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = rational_str(abs(c))
            else:
                mag = abs(c)
                xpow = "x" if k == 1 else f"x^{k}"
                body = xpow if mag == 1 else f"{rational_str(mag)}*{xpow}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _int_mat_mul(a: list, b: list) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def char_poly_exact(m: RationalMatrix) -> CharPoly:
    """det(xI - m) via the Faddeev-LeVerrier recursion.

    The matrix is cleared to integers with a single global scalar s, the
    recursion runs in integer arithmetic (all intermediate traces divide
    exactly), and coefficients are rescaled: coeff_k = c_k / s^(n-k).
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = m.rows
    s = 1
    for row in m.data:
        for e in row:
            d = e.denominator
            s = s * d // gcd(s, d)
    b = [[e.numerator * (s // e.denominator) for e in row] for row in m.data]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = _int_mat_mul(b, mk)
        t = sum(am[i][i] for i in range(n))
        q, r = divmod(-t, k)
        assert r == 0, "Faddeev-LeVerrier trace must divide exactly"
        coeffs[n - k] = q
        if k < n:
            for i in range(n):
                am[i][i] += q
            mk = am
    return CharPoly(tuple(Fraction(coeffs[j], s ** (n - j)) for j in range(n + 1)))


@dataclass(frozen=True)
class SpectrumClaim:
    """Multiset of (eigenvalue, multiplicity) pairs plus an optional monic
    quadratic factor standing in for a conjugate irrational pair."""

    pairs: tuple
    quadratic: Optional[CharPoly] = None

    def __post_init__(self):
        if self.quadratic is not None and self.quadratic.degree != 2:
            raise ValueError("quadratic factor must have degree 2")
        if any(mult < 1 for _, mult in self.pairs):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def make(cls, pairs: Iterable, quadratic: Optional[CharPoly] = None) -> "SpectrumClaim":
        """Canonicalize: drop zero multiplicities, merge equal eigenvalues,
        sort ascending by eigenvalue."""
        merged: dict = {}
        for value, mult in pairs:
            if mult == 0:
                continue
            key = Fraction(value)
            merged[key] = merged.get(key, 0) + mult
        ordered = tuple(sorted(merged.items()))
        return cls(ordered, quadratic)

    @property
    def total_order(self) -> int:
        base = sum(mult for _, mult in self.pairs)
        return base + (2 if self.quadratic is not None else 0)

    def char_poly(self) -> CharPoly:
        poly = CharPoly.one()
        for value, mult in self.pairs:
            poly = poly * (CharPoly.linear(value) ** mult)
        if self.quadratic is not None:
            poly = poly * self.quadratic
        return poly

    def trace_sum(self) -> Fraction:
        total = sum((v * m for v, m in self.pairs), Fraction(0))
        if self.quadratic is not None:
            total += -self.quadratic.coeffs[1]  # root sum of monic quadratic
        return total


def schur_inverse(
    b11: RationalMatrix,
    b12: RationalMatrix,
    b21: RationalMatrix,
    b22: RationalMatrix,
) -> RationalMatrix:
    """Inverse of [[B11, B12], [B21, B22]] assembled through the Schur
    complement of the leading block."""
    if not b11.is_square or not b22.is_square:
        raise ValueError("diagonal blocks must be square")
    if b12.rows != b11.rows or b12.cols != b22.cols:
        raise ValueError("off-diagonal block B12 is not conformal")
    if b21.rows != b22.rows or b21.cols != b11.cols:
        raise ValueError("off-diagonal block B21 is not conformal")
    try:
        inv11 = inverse_exact(b11)
    except SingularMatrixError as err:
        raise SingularMatrixError("leading block singular", err.rank) from None
    complement = b22 - b21 * inv11 * b12
    try:
        inv_s = inverse_exact(complement)
    except SingularMatrixError as err:
        raise SingularMatrixError("schur complement singular", err.rank) from None
    top_right = inv11 * b12 * inv_s
    bottom_left = inv_s * b21 * inv11
    return RationalMatrix.block(
        [
            [inv11 + top_right * b21 * inv11, -top_right],
            [-bottom_left, inv_s],
        ]
    )


def rank_one_update_inverse(a_inv: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Inverse of A + B from A^-1 when B has rank one.

    With g = trace(B A^-1), the update is A^-1 - A^-1 B A^-1 / (1 + g);
    g = -1 exactly when A + B is singular.
    """
    if not a_inv.is_square or not b.is_square or a_inv.rows != b.rows:
        raise ValueError("matrices must be square and of equal order")
    if rank(b) != 1:
        raise ValueError("update matrix must have rank exactly 1")
    n = a_inv.rows
    g = sum(
        (b.data[i][j] * a_inv.data[j][i] for i in range(n) for j in range(n)),
        Fraction(0),
    )
    if g == -1:
        raise ValueError("update makes matrix singular")
    correction = a_inv * b * a_inv
    return a_inv - correction / (1 + g)


@dataclass(frozen=True)
class AibjAnalysis:
    """Spectrum, determinant and (optional) inverse of a*I + b*J."""

    eigs: SpectrumClaim
    det: Fraction
    inverse: Optional[RationalMatrix]


def aibj_analysis(a: Entry, b: Entry, n: int) -> AibjAnalysis:
    """Closed-form analysis of a*I_n + b*J_n for a != 0.

    Eigenvalues are a (multiplicity n-1) and a + n*b (multiplicity 1), the
    determinant is a^(n-1) * (a + n*b), and the inverse exists iff
    a + n*b != 0, in which case it equals (1/a) * (I - b/(a+n*b) * J).
    """
    aq, bq = Fraction(a), Fraction(b)
    if aq == 0:
        raise ValueError("scaled-identity coefficient a must be nonzero")
    if n < 1:
        raise ValueError("order must be positive")
    full = aq + n * bq
    eigs = SpectrumClaim.make([(aq, n - 1), (full, 1)])
    det = aq ** (n - 1) * full
    inverse = None
    if full != 0:
        inverse = (imat(n) - (bq / full) * jmat(n, n)) / aq
    return AibjAnalysis(eigs, det, inverse)
