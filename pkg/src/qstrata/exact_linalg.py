"""Exact linear algebra over Q and Z.

Everything here is exact: scalars are Python ints or ``fractions.Fraction``,
never floats.  Matrices are small (at most ~20x20 in practice), so dense
storage and textbook elimination are the right tools.

All functions are pure and all values immutable, so results can be shared
freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact entries (int or Fraction)."""

    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols, tuple(tuple(0 for _ in range(ncols))
                                       for _ in range(nrows)))

    def entry(self, i, j):
        return self.rows[i][j]

    def transpose(self):
        return Matrix(self.ncols, self.nrows,
                      tuple(zip(*self.rows)) if self.rows else ())

    def is_integer(self):
        return all(isinstance(x, int) or (isinstance(x, Fraction)
                                          and x.denominator == 1)
                   for row in self.rows for x in row)

    def is_skew_symmetric(self):
        if self.nrows != self.ncols:
            return False
        n = self.nrows
        return all(self.rows[i][j] == -self.rows[j][i]
                   for i in range(n) for j in range(i, n))

    def add(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(self.nrows, self.ncols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().rows
        return Matrix(self.nrows, other.ncols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows))

    def mul_vec(self, v):
        if len(v) != self.ncols:
            raise ValueError("length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def submatrix(self, row_idx, col_idx):
        row_idx = tuple(row_idx)
        col_idx = tuple(col_idx)
        return Matrix(len(row_idx), len(col_idx), tuple(
            tuple(self.rows[i][j] for j in col_idx) for i in row_idx))

    def to_lists(self):
        return [list(row) for row in self.rows]


def _rref(m):
    """Reduced row echelon form; returns (rows, pivot_columns).

    Pivot selection scans columns left to right, taking the first nonzero
    row, which keeps output deterministic.
    """
    rows = [[Fraction(x) for x in row] for row in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        pr = next((i for i in range(r, m.nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return rows, pivots


def rank_q(m):
    """Rank of m over Q, computed by exact Gaussian elimination."""
    return len(_rref(m)[1])


def kernel_dim_q(m):
    """dim_Q ker(m) = ncols - rank."""
    return m.ncols - rank_q(m)


def kernel_basis_q(m):
    """A basis of ker(m) over Q, as tuples of Fractions.

    One basis vector per free column of the reduced row echelon form;
    the free coordinate is set to 1.
    """
    rows, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def _normalize_sign(v):
    lead = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def integer_kernel_basis(m):
    """A Z-basis of {s in Z^ncols : m s = 0}.

    Column-style Hermite reduction with unimodular transform tracking: the
    tracked columns corresponding to zeroed-out columns of m generate the
    full integer kernel lattice, not just a finite-index sublattice.
    """
    if not m.is_integer():
        raise ValueError("integer matrix required")
    nr, nc = m.nrows, m.ncols
    cols = [[int(m.rows[i][j]) for i in range(nr)] for j in range(nc)]
    u = [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    pivot = 0
    for i in range(nr):
        live = [j for j in range(pivot, nc) if cols[j][i] != 0]
        while len(live) > 1:
            j0 = min(live, key=lambda j: (abs(cols[j][i]), j))
            for j in live:
                if j == j0:
                    continue
                q = cols[j][i] // cols[j0][i]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
                u[j] = [a - q * b for a, b in zip(u[j], u[j0])]
            live = [j for j in live if cols[j][i] != 0]
        if live:
            j0 = live[0]
            cols[pivot], cols[j0] = cols[j0], cols[pivot]
            u[pivot], u[j0] = u[j0], u[pivot]
            pivot += 1
    return [_normalize_sign(u[j]) for j in range(pivot, nc)]
