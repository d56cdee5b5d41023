"""Text formats for matrices, grids, vectors, and decompositions.

Matrix format: first token is the order n, followed by n*n entries in
row-major order; the printed layout is one line for n and one line per
row.  Entries are exact rationals like "2/5" or "-1"; decimal literals
such as ".4" are accepted on input and converted exactly, but output
never contains decimals.  Grid format: first line n, then one line per
edge as "(i,j)->(i',j')" sorted by tail row, tail col, head row, head
col.  Vector format: one line of whitespace-separated rationals.
Decomposition format: one line per term holding the coefficient and the
term's matrix tokens inline, terms sorted lexicographically by matrix,
optionally followed by a checksum line "= <matrix tokens>" carrying the
exact recombined matrix.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Union

from .grids import FlowGrid, GridValidationError
from .matrices import AsmMatrix, RationalMatrix, validate_asm
from .membership import ConvexCombination


class FormatError(ValueError):
    """Input text does not parse under the documented formats."""


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational literal {token!r}") from exc


def format_rational(value: Union[int, Fraction]) -> str:
    return str(Fraction(value))


def _parse_matrix_tokens(tokens: Iterator[str]) -> RationalMatrix:
    try:
        head = next(tokens)
    except StopIteration:
        raise FormatError("empty matrix text") from None
    try:
        n = int(head)
    except ValueError:
        raise FormatError(f"matrix text must start with the order, got {head!r}") from None
    if n < 1:
        raise FormatError("matrix order must be at least 1")
    values = []
    for _ in range(n * n):
        try:
            values.append(parse_rational(next(tokens)))
        except StopIteration:
            raise FormatError(f"matrix text ended early: expected {n * n} entries") from None
    rows = tuple(tuple(values[i * n : (i + 1) * n]) for i in range(n))
    return RationalMatrix(rows)


def parse_matrix(text: str) -> RationalMatrix:
    tokens = iter(text.split())
    matrix = _parse_matrix_tokens(tokens)
    leftover = next(tokens, None)
    if leftover is not None:
        raise FormatError(f"unexpected trailing token {leftover!r} after matrix")
    return matrix


def format_matrix(matrix: Union[RationalMatrix, AsmMatrix], inline: bool = False) -> str:
    n = matrix.n
    rows = [" ".join(format_rational(v) for v in row) for row in matrix.entries]
    if inline:
        return " ".join([str(n)] + rows)
    return "\n".join([str(n)] + rows)


_EDGE_RE = re.compile(r"^\((\d+),(\d+)\)->\((\d+),(\d+)\)$")


def parse_grid(text: str) -> FlowGrid:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty grid text")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"grid text must start with the order, got {lines[0]!r}") from None
    edges = set()
    for line in lines[1:]:
        m = _EDGE_RE.match(line)
        if not m:
            raise FormatError(f"bad edge line {line!r}")
        a, b, c, d = (int(g) for g in m.groups())
        edges.add(((a, b), (c, d)))
    try:
        return FlowGrid(n, frozenset(edges))
    except GridValidationError as exc:
        raise FormatError(str(exc)) from exc


def format_grid(grid: FlowGrid) -> str:
    lines = [str(grid.n)]
    lines.extend(f"({a},{b})->({c},{d})" for (a, b), (c, d) in grid.sorted_edges())
    return "\n".join(lines)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    tokens = text.split()
    if not tokens:
        raise FormatError("empty vector text")
    return tuple(parse_rational(t) for t in tokens)


def format_vector(values) -> str:
    return " ".join(format_rational(v) for v in values)


def parse_decomposition(text: str) -> tuple[ConvexCombination, RationalMatrix | None]:
    """Parse a decomposition and its optional checksum matrix.

    Term lines must already be sorted as the format requires; the
    combination constructor re-validates coefficients and order.
    """
    terms = []
    checksum = None
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty decomposition text")
    for line in lines:
        tokens = iter(line.split())
        first = next(tokens)
        if first == "=":
            if checksum is not None:
                raise FormatError("multiple checksum lines")
            checksum = _parse_matrix_tokens(tokens)
        else:
            if checksum is not None:
                raise FormatError("term line after the checksum line")
            coeff = parse_rational(first)
            matrix = _parse_matrix_tokens(tokens)
            try:
                terms.append((coeff, validate_asm(matrix)))
            except ValueError as exc:
                raise FormatError(f"decomposition term is not an ASM: {exc}") from exc
        leftover = next(tokens, None)
        if leftover is not None:
            raise FormatError(f"unexpected trailing token {leftover!r}")
    try:
        combo = ConvexCombination(tuple(terms))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return combo, checksum


def format_decomposition(combo: ConvexCombination, checksum: bool = False) -> str:
    lines = [
        f"{format_rational(c)} {format_matrix(a, inline=True)}" for c, a in combo.terms
    ]
    if checksum:
        lines.append(f"= {format_matrix(combo.recombine(), inline=True)}")
    return "\n".join(lines)
