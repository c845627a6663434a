"""Dense linear algebra over the symbol algebras.

Over a field the usual elimination story applies.  Over the ring of
binary polynomials mod M_p(x), elimination is unreliable (a pivot can be
a zero divisor even when the matrix is invertible), so invertibility,
rank, and solving are delegated to the factor fields GF(2)[x]/(f) for
the irreducible factors f of M_p(x) and glued back together with the
Chinese remainder theorem.  M_p(x) is squarefree, so the projection onto
the product of factor fields is an isomorphism and the delegation is
complete.

The determinant is computed separately by dynamic programming over
column subsets (in characteristic 2 the signs vanish, so this is the
permanent-style expansion).  It needs no division, works over the ring
directly, and serves as an independent cross-check of the CRT route.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _gf2poly as poly
from .algebra import Algebra, Element, Field, Ring, _Gf2mOps
from .errors import (
    AlgebraMismatchError,
    IndexOutOfRangeError,
    NotSquareError,
    ShapeMismatchError,
    SingularSystemError,
)


class Matrix:
    """Immutable dense matrix of elements from one algebra.

    Entries are stored as packed bit vectors (ints); `entry` wraps them
    back into Elements on demand.
    """

    __slots__ = ("algebra", "rows", "cols", "bits")

    def __init__(self, algebra: Algebra, bits: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in bits)
        ncols = len(rows[0]) if rows else 0
        limit = 1 << algebra.element_bits
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatchError("ragged rows in matrix literal")
            for v in r:
                if not 0 <= v < limit:
                    raise ValueError(f"entry 0x{v:x} out of range for {algebra}")
        self.algebra = algebra
        self.rows = len(rows)
        self.cols = ncols
        self.bits = rows

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[Element]]) -> "Matrix":
        if not rows or not rows[0]:
            raise ShapeMismatchError("matrix needs at least one entry")
        alg = rows[0][0].algebra
        for row in rows:
            for e in row:
                if e.algebra != alg:
                    raise AlgebraMismatchError(
                        f"mixed algebras in matrix: {e.algebra} vs {alg}")
        return cls(alg, [[e.bits for e in row] for row in rows])

    def entry(self, i: int, j: int) -> Element:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRangeError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.algebra.element(self.bits[i][j])

    def row_elements(self, i: int) -> list[Element]:
        if not 0 <= i < self.rows:
            raise IndexOutOfRangeError(f"row {i} outside [0, {self.rows})")
        return [self.algebra.element(v) for v in self.bits[i]]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.algebra == other.algebra
                and self.bits == other.bits)

    def __hash__(self) -> int:
        return hash((self.algebra, self.bits))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.algebra})"


def identity(algebra: Algebra, k: int) -> Matrix:
    return Matrix(algebra, [[1 if i == j else 0 for j in range(k)] for i in range(k)])


def _check_index_seq(ids: Sequence[int], bound: int, what: str) -> None:
    prev = -1
    for i in ids:
        if not 0 <= i < bound:
            raise IndexOutOfRangeError(f"{what} index {i} outside [0, {bound})")
        if i <= prev:
            raise IndexOutOfRangeError(
                f"{what} indices must be strictly increasing, got {i} after {prev}")
        prev = i


def submatrix(m: Matrix, row_ids: Sequence[int], col_ids: Sequence[int]) -> Matrix:
    """Rows and columns at the given strictly increasing index sets."""
    _check_index_seq(row_ids, m.rows, "row")
    _check_index_seq(col_ids, m.cols, "column")
    return Matrix(m.algebra, [[m.bits[i][j] for j in col_ids] for i in row_ids])


def determinant(m: Matrix) -> Element:
    """Exact determinant by subset dynamic programming, dimension <= 8.

    Division-free, hence valid over the ring.  Larger invertibility
    questions go through is_invertible instead.
    """
    if m.rows != m.cols:
        raise NotSquareError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    k = m.rows
    if k == 0:
        return m.algebra.one
    if k > 8:
        raise ValueError("determinant is limited to dimension 8; use is_invertible")
    mul = m.algebra.mul_bits
    full = (1 << k) - 1
    acc = [0] * (full + 1)
    acc[0] = 1
    for mask in range(full):
        v = acc[mask]
        if not v:
            continue
        row = m.bits[mask.bit_count()]
        for c in range(k):
            b = 1 << c
            if not mask & b and row[c]:
                acc[mask | b] ^= mul(v, row[c])
    return m.algebra.element(acc[full])


def _gauss_jordan(ops: _Gf2mOps, rows: list[list[int]], npivot: int) -> list[int]:
    """Reduced elimination in the field given by ops, mutating rows.

    Pivots are searched in columns [0, npivot) only; any extra columns
    ride along (augmented systems).  Pivot choice is the first nonzero
    scanning down, so the result is deterministic.  Returns the pivot
    column list.
    """
    nrows = len(rows)
    pivots = []
    pr = 0
    for c in range(npivot):
        hit = next((k for k in range(pr, nrows) if rows[k][c]), None)
        if hit is None:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        inv = ops.inv(rows[pr][c])
        if inv != 1:
            rows[pr] = [ops.mul(inv, v) for v in rows[pr]]
        prow = rows[pr]
        for k in range(nrows):
            f = rows[k][c]
            if k == pr or not f:
                continue
            rows[k] = [a ^ ops.mul(f, b) for a, b in zip(rows[k], prow)]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return pivots


def factor_ranks(m: Matrix) -> tuple[int, ...]:
    """Rank in each factor field; a 1-tuple over a field.

    Over the ring this is the complete rank story: one rank per
    irreducible factor of M_p(x).
    """
    if isinstance(m.algebra, Field):
        rows = [list(r) for r in m.bits]
        return (len(_gauss_jordan(m.algebra.ops, rows, m.cols)),)
    ring = m.algebra
    out = []
    for f, ops in zip(ring.factorization.factors, ring.factor_ops):
        rows = [[poly.mod(v, f) for v in r] for r in m.bits]
        out.append(len(_gauss_jordan(ops, rows, m.cols)))
    return tuple(out)


def rank(m: Matrix) -> int:
    """Row rank by elimination; fields only (rings report per factor)."""
    if isinstance(m.algebra, Ring):
        raise ValueError("rank over the ring is per-factor; use factor_ranks")
    return factor_ranks(m)[0]


def full_column_rank(m: Matrix) -> bool:
    """True iff the columns are linearly independent (in every factor)."""
    if m.cols > m.rows:
        return False
    return min(factor_ranks(m)) == m.cols


def is_invertible(m: Matrix) -> bool:
    if m.rows != m.cols:
        raise NotSquareError(f"invertibility needs a square matrix, got {m.rows}x{m.cols}")
    return full_column_rank(m)


def _solve_field_bits(ops: _Gf2mOps, rows: list[list[int]], b: list[int]):
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [v] for r, v in zip(rows, b)]
    pivots = _gauss_jordan(ops, aug, ncols)
    if len(pivots) < ncols:
        return "deficient", None
    for k in range(ncols, len(aug)):
        if aug[k][ncols]:
            return "inconsistent", None
    return "ok", [aug[i][ncols] for i in range(ncols)]


def solve_bits(algebra: Algebra, rows_bits: Sequence[Sequence[int]],
               b_bits: Sequence[int]):
    """Solve A·x = b for A with len(rows) >= ncols, on raw bit vectors.

    Returns (status, x): status "ok" with the unique solution,
    "deficient" when the columns are dependent, "inconsistent" when no
    solution exists.  Over the ring, deficiency in any factor field wins
    over inconsistency in another.
    """
    if len(rows_bits) != len(b_bits):
        raise ShapeMismatchError(
            f"{len(rows_bits)} equations but {len(b_bits)} right-hand values")
    ncols = len(rows_bits[0]) if rows_bits else 0
    if ncols == 0:
        return ("ok", []) if not any(b_bits) else ("inconsistent", None)
    if len(rows_bits) < ncols:
        return "deficient", None
    if isinstance(algebra, Field):
        return _solve_field_bits(algebra.ops, [list(r) for r in rows_bits], list(b_bits))
    ring = algebra
    partials = []
    inconsistent = False
    for f, ops in zip(ring.factorization.factors, ring.factor_ops):
        rows = [[poly.mod(v, f) for v in r] for r in rows_bits]
        rhs = [poly.mod(v, f) for v in b_bits]
        status, x = _solve_field_bits(ops, rows, rhs)
        if status == "deficient":
            return "deficient", None
        if status == "inconsistent":
            inconsistent = True
        partials.append(x)
    if inconsistent:
        return "inconsistent", None
    return "ok", [ring.crt_bits([part[i] for part in partials]) for i in range(ncols)]


def solve(m: Matrix, b: Sequence[Element]) -> list[Element]:
    """x with M·x = b for square invertible M."""
    if m.rows != m.cols:
        raise NotSquareError(f"solve needs a square matrix, got {m.rows}x{m.cols}")
    b_bits = [m.algebra._check(e) for e in b]
    status, x = solve_bits(m.algebra, m.bits, b_bits)
    if status != "ok":
        raise SingularSystemError(f"coefficient matrix is singular ({status})")
    return [m.algebra.element(v) for v in x]


def mul_vector(m: Matrix, vec: Sequence[Element]) -> list[Element]:
    """M·x as a list of Elements."""
    if len(vec) != m.cols:
        raise ShapeMismatchError(f"vector length {len(vec)} != {m.cols} columns")
    xb = [m.algebra._check(e) for e in vec]
    mul = m.algebra.mul_bits
    out = []
    for row in m.bits:
        acc = 0
        for a, x in zip(row, xb):
            if a and x:
                acc ^= mul(a, x)
        out.append(m.algebra.element(acc))
    return out
