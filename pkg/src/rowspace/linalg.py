"""Exact rational dense linear algebra for adjacency-matrix work.

Everything here is exact: matrices hold arbitrary-precision ``Fraction``
entries, rank is computed by fraction-free (integer-preserving) Gaussian
elimination, and row-space membership answers come with a coefficient
certificate that is re-verified by exact multiplication before it is
returned.

Membership is decided over the rationals. That loses nothing against the
reals: a linear system with rational coefficients and rational right-hand
side that is solvable over R is solvable over Q, because Gaussian
elimination never leaves the ground field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        # Fraction() normalizes to lowest terms with positive denominator.
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> RationalMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(e for r in rows for e in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )


@dataclass(frozen=True)
class MembershipCertificate:
    """Coefficients c proving that A^t c equals ``target`` exactly."""

    coefficients: tuple[Fraction, ...]
    target: tuple[int, ...]


def adjacency_matrix(g: Graph) -> RationalMatrix:
    """Symmetric 0/1 matrix with zero diagonal, in the graph's vertex order."""
    entries = tuple(
        Fraction((g.adj[i] >> j) & 1) for i in range(g.n) for j in range(g.n)
    )
    return RationalMatrix(g.n, g.n, entries)


def integer_row_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    One-step Bareiss elimination: all intermediate entries are minors of the
    input, so they stay integral and growth is polynomial. The pivot is the
    first nonzero entry in column scan order, which makes the result
    deterministic. Returns the nonzero echelon rows and their pivot columns;
    the row space is preserved exactly.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    piv_r = 0
    prev = 1
    pivot_cols: list[int] = []
    for piv_c in range(ncols):
        pr = next((i for i in range(piv_r, nrows) if work[i][piv_c]), None)
        if pr is None:
            continue
        work[piv_r], work[pr] = work[pr], work[piv_r]
        pivot_row = work[piv_r]
        pivot = pivot_row[piv_c]
        tail = pivot_row[piv_c + 1 :]
        # The update is applied to every row below the pivot, including rows
        # with a zero in the pivot column: the exactness of the division by
        # the previous pivot needs all rows advanced in lockstep.
        for i in range(piv_r + 1, nrows):
            ri = work[i]
            fi = ri[piv_c]
            head = ri[:piv_c]  # already zero left of the pivot column
            if fi:
                if prev == 1:
                    body = [pivot * a - fi * b for a, b in zip(ri[piv_c + 1 :], tail)]
                else:
                    body = [
                        (pivot * a - fi * b) // prev
                        for a, b in zip(ri[piv_c + 1 :], tail)
                    ]
            elif pivot == prev:
                continue
            else:
                body = [pivot * a // prev for a in ri[piv_c + 1 :]]
            work[i] = head + [0] + body
        prev = pivot
        pivot_cols.append(piv_c)
        piv_r += 1
        if piv_r == nrows:
            break
    return work[:piv_r], pivot_cols


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    # Row scaling by the denominator lcm preserves rank and row space.
    out = []
    for i in range(M.rows):
        row = M.row(i)
        scale = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * scale) for e in row])
    return out


def rank(M: RationalMatrix) -> int:
    """Rank over the rationals via fraction-free Gaussian elimination."""
    if M.rows == 0 or M.cols == 0:
        return 0
    _, pivot_cols = integer_row_echelon(_integer_rows(M))
    return len(pivot_cols)


def nullity(g: Graph) -> int:
    """Vertex count minus adjacency rank."""
    return g.n - rank(adjacency_matrix(g))


def combine_rows(M: RationalMatrix, coefficients: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """The row-space element sum(coefficients[i] * row_i), i.e. M^t c."""
    if len(coefficients) != M.rows:
        raise ValueError("one coefficient per row required")
    out = [Fraction(0)] * M.cols
    for i, c in enumerate(coefficients):
        if c:
            row = M.row(i)
            for j in range(M.cols):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def solve_membership(M: RationalMatrix, x: Sequence[int]) -> MembershipCertificate | None:
    """Certificate c with M^t c = x if x lies in the row space of M, else None.

    The solution is the one produced by elimination order with all free
    variables set to zero, so identical inputs give identical certificates.
    The certificate is re-verified by exact multiplication before return.
    """
    if len(x) != M.cols:
        raise ValueError(f"vector has length {len(x)}, matrix has {M.cols} columns")
    ncoef = M.rows
    # Equation i: column i of M dotted with c equals x[i].
    aug = [
        [M.at(k, i) for k in range(ncoef)] + [Fraction(x[i])]
        for i in range(M.cols)
    ]
    piv_r = 0
    pivots: list[int] = []
    for piv_c in range(ncoef):
        pr = next((r for r in range(piv_r, len(aug)) if aug[r][piv_c]), None)
        if pr is None:
            continue
        aug[piv_r], aug[pr] = aug[pr], aug[piv_r]
        pivot_row = aug[piv_r]
        pivot = pivot_row[piv_c]
        for r in range(piv_r + 1, len(aug)):
            f = aug[r][piv_c]
            if f:
                aug[r] = [a - f / pivot * b for a, b in zip(aug[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
    for r in range(piv_r, len(aug)):
        if aug[r][ncoef] != 0:
            return None
    coeffs = [Fraction(0)] * ncoef
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        s = aug[r][ncoef]
        for j in range(pc + 1, ncoef):
            s -= aug[r][j] * coeffs[j]
        coeffs[pc] = s / aug[r][pc]
    if combine_rows(M, coeffs) != tuple(Fraction(e) for e in x):
        raise RuntimeError("certificate failed exact re-verification")
    return MembershipCertificate(tuple(coeffs), tuple(int(e) for e in x))


def is_row(M: RationalMatrix, x: Sequence[int]) -> int | None:
    """Smallest index of a row equal to x, or None."""
    if len(x) != M.cols:
        raise ValueError(f"vector has length {len(x)}, matrix has {M.cols} columns")
    target = tuple(Fraction(e) for e in x)
    for i in range(M.rows):
        if M.row(i) == target:
            return i
    return None
