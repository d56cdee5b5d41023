"""Exact matrix types and enumeration for alternating sign matrices.

An alternating sign matrix (ASM) is a square matrix over {-1, 0, 1} whose
rows and columns each sum to 1 and whose nonzero entries alternate in sign
along every row and every column.  Equivalently, every row and column
prefix sum is 0 or 1.  ASMs are the vertices of the polytope the rest of
this package works with.  All arithmetic here is exact: entries are ints
or ``fractions.Fraction``, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction

DEFAULT_ENUMERATION_CAP = 6


class CapExceededError(ValueError):
    """The requested order lies above the configured enumeration cap."""


class AsmValidationError(ValueError):
    """Rejection from validate_asm identifying the first violated condition.

    ``condition`` is one of "not-square", "entry-domain", "row-sum",
    "column-sum", "row-alternation", "column-alternation".  ``row`` and
    ``col`` are 1-indexed where applicable.
    """

    def __init__(
        self,
        condition: str,
        message: str,
        row: int | None = None,
        col: int | None = None,
    ):
        super().__init__(message)
        self.condition = condition
        self.row = row
        self.col = col


def as_fraction(value: Union[int, Fraction, str]) -> Fraction:
    """Coerce to Fraction, refusing floats.

    Binary floats silently misrepresent decimals like 0.4; callers with
    decimal text must pass the string so conversion stays exact.
    """
    if isinstance(value, float):
        raise TypeError("refusing float input; pass a Fraction, int, or string")
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """A square matrix of exact rationals.

    ``entries`` is a tuple of row tuples.  ``entry(i, j)`` uses the
    1-indexed convention of the inequality description; plain Python
    indexing of ``entries`` is 0-based.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square and nonempty")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Union[int, Fraction, str]]]) -> "RationalMatrix":
        return cls(tuple(tuple(as_fraction(v) for v in row) for row in rows))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix) or other.n != self.n:
            return NotImplemented
        return RationalMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix) or other.n != self.n:
            return NotImplemented
        return RationalMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def scaled(self, k: Union[int, Fraction]) -> "RationalMatrix":
        k = as_fraction(k)
        return RationalMatrix(tuple(tuple(k * v for v in row) for row in self.entries))


@dataclass(frozen=True)
class AsmMatrix:
    """An alternating sign matrix with int entries.

    Construct through validate_asm (or the enumerator, which only builds
    valid matrices); the dataclass itself does not re-check the defining
    conditions.  Instances are hashable and compare by entries, and the
    natural sort key ``entries`` orders them row-major lexicographically
    with -1 < 0 < 1.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_permutation(self) -> bool:
        return all(v >= 0 for row in self.entries for v in row)

    def as_rational(self) -> RationalMatrix:
        return RationalMatrix(tuple(tuple(Fraction(v) for v in row) for row in self.entries))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]


MatrixLike = Union[RationalMatrix, AsmMatrix, Sequence[Sequence[Union[int, Fraction]]]]


def _rows_of(matrix: MatrixLike) -> list[list]:
    if isinstance(matrix, (RationalMatrix, AsmMatrix)):
        return [list(row) for row in matrix.entries]
    return [list(row) for row in matrix]


def validate_asm(matrix: MatrixLike) -> AsmMatrix:
    """Check the three defining ASM conditions and build an AsmMatrix.

    Conditions are checked in a fixed order (squareness, entry domain,
    row sums, column sums, row alternation, column alternation) and the
    first failure is raised as AsmValidationError with its 1-indexed
    location.
    """
    rows = _rows_of(matrix)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise AsmValidationError("not-square", "input is not a nonempty square matrix")
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=1):
            if v != -1 and v != 0 and v != 1:
                raise AsmValidationError(
                    "entry-domain", f"entry not in {{-1, 0, 1}} at ({i},{j})", row=i, col=j
                )
    for i, row in enumerate(rows, start=1):
        if sum(row) != 1:
            raise AsmValidationError("row-sum", f"row {i} does not sum to 1", row=i)
    for j in range(1, n + 1):
        if sum(rows[i][j - 1] for i in range(n)) != 1:
            raise AsmValidationError("column-sum", f"column {j} does not sum to 1", col=j)
    for i, row in enumerate(rows, start=1):
        last = 0
        for j, v in enumerate(row, start=1):
            if v != 0:
                if v == last:
                    raise AsmValidationError(
                        "row-alternation", f"sign alternation fails in row {i} at ({i},{j})",
                        row=i, col=j,
                    )
                last = v
    for j in range(1, n + 1):
        last = 0
        for i in range(1, n + 1):
            v = rows[i - 1][j - 1]
            if v != 0:
                if v == last:
                    raise AsmValidationError(
                        "column-alternation", f"sign alternation fails in column {j} at ({i},{j})",
                        row=i, col=j,
                    )
                last = v
    return AsmMatrix(tuple(tuple(int(v) for v in row) for row in rows))


def count_asms(n: int) -> int:
    """Number of order-n ASMs, as the exact product of factorial ratios.

    The count is prod_{j=0}^{n-1} (3j+1)!/(n+j)!; the running product is
    kept as an exact Fraction and must come out integral.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    total = Fraction(1)
    for j in range(n):
        total *= Fraction(factorial(3 * j + 1), factorial(n + j))
    if total.denominator != 1:
        raise AssertionError("count product failed to reduce to an integer")
    return total.numerator


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[AsmMatrix, ...]:
    # Row-by-row DFS.  The only cross-row state is the vector of column
    # prefix sums, each 0 or 1, held as an n-bit mask; valid rows out of
    # each mask are computed once and reused.
    full = (1 << n) - 1
    rows_from: dict[int, tuple[tuple[tuple[int, ...], int], ...]] = {}

    def rows_for(mask: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        cached = rows_from.get(mask)
        if cached is not None:
            return cached
        found: list[tuple[tuple[int, ...], int]] = []
        acc: list[int] = []

        def go(j: int, rprefix: int, m: int) -> None:
            if j == n:
                if rprefix == 1:
                    found.append((tuple(acc), m))
                return
            c = (m >> j) & 1
            for x in (-1, 0, 1):
                nr = rprefix + x
                if nr < 0 or nr > 1:
                    continue
                nc = c + x
                if nc < 0 or nc > 1:
                    continue
                acc.append(x)
                go(j + 1, nr, (m & ~(1 << j)) | (nc << j))
                acc.pop()

        go(0, 0, mask)
        result = tuple(found)
        rows_from[mask] = result
        return result

    out: list[AsmMatrix] = []
    chosen: list[tuple[int, ...]] = []

    def rec(depth: int, mask: int) -> None:
        if depth == n:
            if mask == full:
                out.append(AsmMatrix(tuple(chosen)))
            return
        for row, m2 in rows_for(mask):
            if depth == n - 1 and m2 != full:
                continue
            chosen.append(row)
            rec(depth + 1, m2)
            chosen.pop()

    rec(0, 0)
    return tuple(out)


def enumerate_asms(n: int, max_order: int = DEFAULT_ENUMERATION_CAP) -> tuple[AsmMatrix, ...]:
    """All order-n ASMs in row-major lexicographic order (-1 < 0 < 1).

    Enumeration above ``max_order`` is refused with CapExceededError;
    raise the cap explicitly for n = 7, which is the practical limit.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > max_order:
        raise CapExceededError(
            f"order {n} exceeds the enumeration cap {max_order}; pass a larger max_order"
        )
    return _enumerate(n)


@dataclass(frozen=True)
class PartialSumTableau:
    """Row and column prefix sums of a square rational matrix.

    r(i, j) = sum of the first j entries of row i, for i in 1..n and
    j in 0..n; c(i, j) = sum of the first i entries of column j, for
    i in 0..n and j in 1..n.  The boundary values r(i, 0) and c(0, j)
    are identically 0.  The defining recurrence ties the two families
    together: r(i, j) + c(i-1, j) = c(i, j) + r(i, j-1).
    """

    n: int
    row_sums: tuple[tuple[Fraction, ...], ...]
    col_sums: tuple[tuple[Fraction, ...], ...]

    def r(self, i: int, j: int) -> Fraction:
        return self.row_sums[i - 1][j]

    def c(self, i: int, j: int) -> Fraction:
        return self.col_sums[i][j - 1]

    def is_inner(self, kind: str, i: int, j: int) -> bool:
        """Whether the named partial sum lies strictly between 0 and 1."""
        v = self.r(i, j) if kind == "row" else self.c(i, j)
        # integer compare on numerator/denominator; the denominator is
        # always positive, so 0 < v < 1 means 0 < num < den
        return 0 < v.numerator < v.denominator

    def inner_count(self) -> int:
        total = 0
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if self.is_inner("row", i, j):
                    total += 1
                if self.is_inner("col", i, j):
                    total += 1
        return total


def partial_sums(matrix: Union[RationalMatrix, AsmMatrix]) -> PartialSumTableau:
    """Compute the full prefix-sum tableau of a matrix."""
    if isinstance(matrix, AsmMatrix):
        matrix = matrix.as_rational()
    n = matrix.n
    zero = Fraction(0)
    row_sums = []
    for row in matrix.entries:
        acc = [zero]
        running = zero
        for v in row:
            running += v
            acc.append(running)
        row_sums.append(tuple(acc))
    col_sums = [tuple(zero for _ in range(n))]
    running_cols = [zero] * n
    for row in matrix.entries:
        running_cols = [a + v for a, v in zip(running_cols, row)]
        col_sums.append(tuple(running_cols))
    return PartialSumTableau(n=n, row_sums=tuple(row_sums), col_sums=tuple(col_sums))
