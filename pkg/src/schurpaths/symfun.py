"""Determinantal symmetric functions over the exact polynomial ring.

Complete homogeneous polynomials, determinants of polynomial matrices
(Leibniz expansion at desk sizes, fraction-free Bareiss elimination beyond),
alternants, the Vandermonde product, the bialternant and factorial-Schur
quotients, falling factorial powers, and divided differences of powers.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations
from typing import Sequence

from .ring import (
    Monomial,
    Polynomial,
    Variable,
    apoly,
    exact_div,
    substitute_family,
    tpoly,
    xpoly,
    xvar,
    Family,
)

# Leibniz expansion is allocation-light up to this size; Bareiss keeps
# intermediates polynomial beyond it.
_LEIBNIZ_MAX = 6


class NotSquare(ValueError):
    """det was given a non-square matrix."""


class PolyMatrix:
    """An immutable row-major matrix of polynomials."""

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int, entries: Sequence[Polynomial]):
        if n_rows < 0 or n_cols < 0 or len(entries) != n_rows * n_cols:
            raise ValueError("entry count must equal n_rows * n_cols")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("all rows must have the same length")
        return cls(n_rows, n_cols, [entry for row in rows for entry in row])

    def entry(self, i: int, j: int) -> Polynomial:
        """0-based entry access."""
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"({i},{j}) outside a {self.n_rows}x{self.n_cols} matrix")
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i * self.n_cols : (i + 1) * self.n_cols]


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _det_leibniz(matrix: PolyMatrix) -> Polynomial:
    n = matrix.n_rows
    total = Polynomial.zero()
    for perm in permutations(range(n)):
        product = Polynomial.const(_permutation_sign(perm))
        for i in range(n):
            product = product * matrix.entry(i, perm[i])
            if product.is_zero():
                break
        total = total + product
    return total


def _det_bareiss(matrix: PolyMatrix) -> Polynomial:
    """Fraction-free elimination; every division is exact by construction."""
    n = matrix.n_rows
    if n == 0:
        return Polynomial.one()
    rows = [list(matrix.row(i)) for i in range(n)]
    sign = 1
    previous_pivot = Polynomial.one()
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not rows[r][k].is_zero()), None)
        if pivot_row is None:
            return Polynomial.zero()
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = exact_div(numerator, previous_pivot)
            rows[i][k] = Polynomial.zero()
        previous_pivot = rows[k][k]
    result = rows[n - 1][n - 1]
    return result if sign == 1 else -result


def det(matrix: PolyMatrix) -> Polynomial:
    """Exact determinant over the polynomial ring."""
    if matrix.n_rows != matrix.n_cols:
        raise NotSquare(f"matrix is {matrix.n_rows}x{matrix.n_cols}")
    if matrix.n_rows <= _LEIBNIZ_MAX:
        return _det_leibniz(matrix)
    return _det_bareiss(matrix)


def _checked_partition(shape: Sequence[int]) -> tuple[int, ...]:
    tup = tuple(int(p) for p in shape)
    for left, right in zip(tup, tup[1:]):
        if left < right:
            raise ValueError(f"shape must be weakly decreasing, got {tup}")
    if tup and tup[-1] < 0:
        raise ValueError(f"shape parts must be non-negative, got {tup}")
    while tup and tup[-1] == 0:
        tup = tup[:-1]
    return tup


def complete_homogeneous(k: int, n: int) -> Polynomial:
    """h_k: the sum of all degree-k monomials in x1..xn.

    h_0 = 1 and h_k = 0 for k < 0 (the convention the Jacobi-Trudi matrix
    needs).
    """
    if n < 1:
        raise ValueError("complete_homogeneous needs at least one variable")
    if k < 0:
        return Polynomial.zero()
    if k == 0:
        return Polynomial.one()
    accumulated: dict[Monomial, int] = {}
    for combo in combinations_with_replacement(range(1, n + 1), k):
        counts: dict[Variable, int] = {}
        for index in combo:
            v = xvar(index)
            counts[v] = counts.get(v, 0) + 1
        accumulated[Monomial.of(counts)] = 1
    return Polynomial(accumulated)


def jacobi_trudi(shape: Sequence[int], n: int) -> Polynomial:
    """det(h_{lambda_i - i + j}) over an r x r matrix, r = rows(lambda).

    The index orientation is the one that agrees with the tableau sum
    (S_(1,1) = h1^2 - h2); the printed transpose-like orientation with
    h_{lambda_i + i - j} fails already at lambda = (2,1).
    """
    shape = _checked_partition(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    r = len(shape)
    if r == 0:
        return Polynomial.one()
    matrix = PolyMatrix.from_rows(
        [
            [complete_homogeneous(shape[i] - i + j, n) for j in range(r)]
            for i in range(r)
        ]
    )
    return det(matrix)


def alternant(shape: Sequence[int], n: int) -> Polynomial:
    """det(x_i^(lambda_j + n - j)) with lambda padded to length n."""
    shape = _checked_partition(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    padded = shape + (0,) * (n - len(shape))
    matrix = PolyMatrix.from_rows(
        [
            [xpoly(i + 1) ** (padded[j] + n - (j + 1)) for j in range(n)]
            for i in range(n)
        ]
    )
    return det(matrix)


def vandermonde(n: int) -> Polynomial:
    """The expanded product of (x_i - x_j) over 1 <= i < j <= n.

    Built as an explicit product, never via a determinant, so that the
    determinant identities can be tested against a genuinely independent
    computation.
    """
    if n < 1:
        raise ValueError("vandermonde needs n >= 1")
    product = Polynomial.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            product = product * (xpoly(i) - xpoly(j))
    return product


def bialternant(shape: Sequence[int], n: int) -> Polynomial:
    """alternant(shape, n) / vandermonde(n); exact by the quotient identity.

    A NotDivisible escape here means an implementation bug, not a user error.
    """
    return exact_div(alternant(shape, n), vandermonde(n))


def falling_power(v: Variable, k: int) -> Polynomial:
    """(v | a)^k = (v - a_1)(v - a_2)...(v - a_k); 1 for k = 0."""
    if k < 0:
        raise ValueError("falling powers need k >= 0")
    product = Polynomial.one()
    base = Polynomial.variable(v)
    for index in range(1, k + 1):
        product = product * (base - apoly(index))
    return product


def factorial_alternant(shape: Sequence[int], n: int) -> Polynomial:
    """det of the n x n matrix with entry (i,j) = (x_j | a)^(lambda_i + n - i)."""
    shape = _checked_partition(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than {n} rows")
    padded = shape + (0,) * (n - len(shape))
    matrix = PolyMatrix.from_rows(
        [
            [falling_power(xvar(j + 1), padded[i] + n - (i + 1)) for j in range(n)]
            for i in range(n)
        ]
    )
    return det(matrix)


def factorial_schur_quotient(shape: Sequence[int], n: int) -> Polynomial:
    """factorial_alternant(shape, n) / vandermonde(n)."""
    return exact_div(factorial_alternant(shape, n), vandermonde(n))


def divided_difference(n_power: int, k: int) -> Polynomial:
    """The divided difference f[x_1, ..., x_k] of f(x) = x^n_power.

    Uses the table recursion f[x_1..x_k] = (f[x_1..x_{k-1}] - f[x_2..x_k])
    / (x_1 - x_k), where the shifted entry f[x_2..x_k] is produced from
    f[x_1..x_{k-1}] by shifting every x-index up by one.  The result equals
    the complete homogeneous polynomial h_{n_power - k + 1} in x1..xk, which
    the test suite checks against an independent oracle.
    """
    if n_power < 0:
        raise ValueError("the power must be non-negative")
    if not 1 <= k <= n_power + 1:
        raise ValueError(f"k must lie in 1..{n_power + 1}, got {k}")
    table = xpoly(1) ** n_power
    for width in range(2, k + 1):
        shifted = substitute_family(table, Family.X, Family.X, 1)
        table = exact_div(table - shifted, xpoly(1) - xpoly(width))
    return table


def newton_expand(n_power: int) -> Polynomial:
    """Assemble the Newton interpolation form of t^n_power and return it.

    The sum of f[x_1..x_{k+1}] * (t - x_1)...(t - x_k) over k = 0..n_power
    collapses exactly to t^n_power; callers can compare against tpoly()**n.
    """
    if n_power < 0:
        raise ValueError("the power must be non-negative")
    total = Polynomial.zero()
    basis = Polynomial.one()
    for k in range(n_power + 1):
        total = total + divided_difference(n_power, k + 1) * basis
        basis = basis * (tpoly() - xpoly(k + 1))
    return total
