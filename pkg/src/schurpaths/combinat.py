"""Partitions, semistandard Young tableaux, and tableau-sum Schur polynomials.

Partitions are canonical tuples of weakly decreasing positive ints (trailing
zeros stripped; the empty partition is ()).  A tableau of shape lambda is a
tuple of rows, row i holding lambda_i letters from 1..n, weakly increasing
along rows and strictly increasing down columns.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .ring import IndexUnderflow, Monomial, Polynomial, apoly, xpoly, xvar

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize and validate a partition (strip trailing zeros)."""
    tup = tuple(int(p) for p in parts)
    for left, right in zip(tup, tup[1:]):
        if left < right:
            raise ValueError(f"parts must be weakly decreasing, got {tup}")
    if tup and tup[-1] < 0:
        raise ValueError(f"parts must be non-negative, got {tup}")
    while tup and tup[-1] == 0:
        tup = tup[:-1]
    return tup


def partition_text(shape: Partition) -> str:
    """CLI text form, e.g. "[2,1]"; the empty partition is "[]"."""
    return "[" + ",".join(str(p) for p in shape) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the "[2,1]" text form."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [2,1], got {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = [int(chunk.strip()) for chunk in inner.split(",")]
    except ValueError:
        raise ValueError(f"partition parts must be integers, got {text!r}") from None
    return partition(parts)


def size(shape: Partition) -> int:
    return sum(shape)


def rows(shape: Partition) -> int:
    return sum(1 for p in shape if p > 0)


def conjugate(shape: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    shape = partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > i) for i in range(shape[0]))


def partitions_in_box(max_rows: int, max_cols: int) -> list[Partition]:
    """All partitions fitting in a max_rows x max_cols box.

    Ordered by size, then within a size by largest first part first; the
    count is C(max_rows + max_cols, max_rows).
    """
    if max_rows < 0 or max_cols < 0:
        raise ValueError("box dimensions must be non-negative")

    def generate(room: int, cap: int) -> Iterator[Partition]:
        yield ()
        if room == 0 or cap == 0:
            return
        for first in range(1, cap + 1):
            for rest in generate(room - 1, first):
                yield (first, *rest)

    return sorted(
        generate(max_rows, max_cols),
        key=lambda p: (sum(p), tuple(-part for part in p)),
    )


def ssyt_enumerate(shape: Partition, n: int) -> Iterator[Tableau]:
    """Yield every semistandard tableau of the shape with letters 1..n.

    Cells are filled row-major (left to right, top to bottom), smallest legal
    letter first, so the stream order is deterministic.  The stream is empty
    when the shape has more than n rows.
    """
    shape = partition(shape)
    if rows(shape) > n:
        return
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    grid = [[0] * width for width in shape]

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for letter in range(low, n + 1):
            grid[r][c] = letter
            yield from fill(k + 1)

    yield from fill(0)


def tableau_monomial(tableau: Tableau) -> Polynomial:
    """x^T: the product of x_i^(number of letters i in T)."""
    counts = Counter(letter for row in tableau for letter in row)
    monomial = Monomial.of({xvar(letter): count for letter, count in counts.items()})
    return Polynomial.term(monomial)


def schur_tableaux(shape: Partition, n: int) -> Polynomial:
    """The Schur polynomial as the sum of x^T over all SSYT of the shape.

    Returns 1 for the empty shape and 0 when the shape has more than n rows.
    """
    accumulated: dict[Monomial, int] = {}
    for tableau in ssyt_enumerate(shape, n):
        counts = Counter(letter for row in tableau for letter in row)
        monomial = Monomial.of({xvar(v): c for v, c in counts.items()})
        accumulated[monomial] = accumulated.get(monomial, 0) + 1
    return Polynomial(accumulated)


def factorial_tableau_weight(tableau: Tableau) -> Polynomial:
    """The cell-product weight of one tableau in the factorial Schur sum.

    The cell in row i, column j (1-based) with entry v contributes the factor
    x_v - a_{v + j - i}.  Column-strictness gives v >= i, so the parameter
    index v + j - i >= j >= 1 always; the underflow guard is defensive.
    """
    weight = Polynomial.one()
    for r0, row in enumerate(tableau):
        for c0, entry in enumerate(row):
            index = entry + (c0 + 1) - (r0 + 1)
            if index < 1:
                raise IndexUnderflow(
                    f"cell ({r0 + 1},{c0 + 1}) with entry {entry} gives parameter index {index}"
                )
            weight = weight * (xpoly(entry) - apoly(index))
    return weight


def factorial_schur_tableaux(shape: Partition, n: int) -> Polynomial:
    """The factorial Schur polynomial as a sum of cell-product weights.

    Setting every a-variable to zero recovers schur_tableaux(shape, n).
    """
    total = Polynomial.zero()
    for tableau in ssyt_enumerate(shape, n):
        total = total + factorial_tableau_weight(tableau)
    return total
