import sys
from fractions import Fraction as Q
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from asmpoly import AsmMatrix, Circuit, RationalMatrix, validate_asm


@pytest.fixture(scope="session")
def member5() -> RationalMatrix:
    """An interior point of the order-5 polytope with a known tableau."""
    return RationalMatrix.from_rows(
        [
            ["0", ".4", ".5", ".1", "0"],
            [".4", "-.4", ".5", "0", ".5"],
            [".6", ".4", "-.3", "-.1", ".4"],
            ["0", ".3", "-.3", ".9", ".1"],
            ["0", ".3", ".6", ".1", "0"],
        ]
    )


@pytest.fixture(scope="session")
def member5_row_sums() -> tuple:
    """Row-prefix tableau of member5, digit by digit."""
    return tuple(
        tuple(Q(v) for v in row)
        for row in [
            ["0", "0", ".4", ".9", "1", "1"],
            ["0", ".4", "0", ".5", ".5", "1"],
            ["0", ".6", "1", ".7", ".6", "1"],
            ["0", "0", ".3", "0", ".9", "1"],
            ["0", "0", ".3", ".9", "1", "1"],
        ]
    )


@pytest.fixture(scope="session")
def member5_col_sums() -> tuple:
    """Column-prefix tableau of member5, digit by digit."""
    return tuple(
        tuple(Q(v) for v in row)
        for row in [
            ["0", "0", "0", "0", "0"],
            ["0", ".4", ".5", ".1", "0"],
            [".4", "0", "1", ".1", ".5"],
            ["1", ".4", ".7", "0", ".9"],
            ["1", ".7", ".4", ".9", "1"],
            ["1", "1", "1", "1", "1"],
        ]
    )


@pytest.fixture(scope="session")
def long_circuit5() -> Circuit:
    """A ten-corner circuit of member5, built by hand."""
    return Circuit(
        corners=(
            (1, 2), (1, 4), (3, 4), (3, 3), (4, 3),
            (4, 2), (3, 2), (3, 1), (2, 1), (2, 2),
        ),
        corner_signs=(1, -1, 1, -1, 1, -1, 1, -1, 1, -1),
        traversed=(
            ("row", 1, 2), ("row", 1, 3), ("col", 1, 4), ("col", 2, 4),
            ("row", 3, 3), ("col", 3, 3), ("row", 4, 2), ("col", 3, 2),
            ("row", 3, 1), ("col", 2, 1), ("row", 2, 1), ("col", 1, 2),
        ),
    )


@pytest.fixture(scope="session")
def adjacent_vertices() -> tuple[AsmMatrix, AsmMatrix]:
    """Two order-5 vertices joined by an edge of the polytope."""
    a = validate_asm(
        [
            [0, 1, 0, 0, 0],
            [1, -1, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 1, -1, 0, 1],
            [0, 0, 1, 0, 0],
        ]
    )
    b = validate_asm(
        [
            [0, 1, 0, 0, 0],
            [1, -1, 1, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0],
        ]
    )
    return a, b


@pytest.fixture(scope="session")
def identity3() -> AsmMatrix:
    return validate_asm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture(scope="session")
def central3() -> AsmMatrix:
    """The unique order-3 vertex with a -1 entry."""
    return validate_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
