"""Membership testing and convex decomposition into ASM vertices.

A square rational matrix lies in the polytope exactly when all of its
row and column prefix sums stay within [0, 1] and every full row and
column sums to 1.  A member that is not itself an ASM has some prefix
sum strictly between 0 and 1 (an inner sum), and the prefix-sum
recurrence forces inner sums to chain together: walking from entry to
entry across inner sums must eventually close into a simple rectilinear
circuit.  Pushing the matrix as far as possible along the circuit in
each of the two directions writes it as a convex combination of two
members that each have strictly fewer inner sums, and iterating yields
an exact convex combination of ASMs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .matrices import (
    AsmMatrix,
    PartialSumTableau,
    RationalMatrix,
    partial_sums,
    validate_asm,
)

ROW_PREFIX_BELOW = "row-prefix-below-0"
ROW_PREFIX_ABOVE = "row-prefix-above-1"
COL_PREFIX_BELOW = "column-prefix-below-0"
COL_PREFIX_ABOVE = "column-prefix-above-1"
ROW_TOTAL = "row-total"
COL_TOTAL = "column-total"

VIOLATION_KINDS = (
    ROW_PREFIX_BELOW,
    ROW_PREFIX_ABOVE,
    COL_PREFIX_BELOW,
    COL_PREFIX_ABOVE,
    ROW_TOTAL,
    COL_TOTAL,
)


class NotAMemberError(ValueError):
    """decompose was handed a matrix outside the polytope."""

    def __init__(self, verdict: "MembershipVerdict"):
        super().__init__(f"matrix is not a member: {verdict.violated_constraint.describe()}")
        self.verdict = verdict


@dataclass(frozen=True)
class ConstraintViolation:
    """One violated defining constraint.

    For the prefix kinds both indices are set: (i, j) names the prefix
    sum through row i, column j.  For row-total only i is set, for
    column-total only j.
    """

    kind: str
    i: int | None = None
    j: int | None = None

    def describe(self) -> str:
        if self.kind == ROW_TOTAL:
            return f"{self.kind} at row {self.i}"
        if self.kind == COL_TOTAL:
            return f"{self.kind} at column {self.j}"
        return f"{self.kind} at ({self.i},{self.j})"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    violated_constraint: ConstraintViolation | None = None


def check_membership(matrix: Union[RationalMatrix, AsmMatrix]) -> MembershipVerdict:
    """Decide membership and report the first violated constraint.

    The scan order is fixed: row prefix sums row-major (below-0 before
    above-1 at each position), then column prefix sums column-major,
    then row totals, then column totals.  Because the totals are linearly
    dependent (rows and columns sum to the same grand total), a matrix
    reaching the totals phase with all row totals equal to 1 has all
    column totals equal to 1 as well, so the column-total descriptor is
    unreachable under this order; it stays in the vocabulary for
    completeness.
    """
    if isinstance(matrix, AsmMatrix):
        matrix = matrix.as_rational()
    t = partial_sums(matrix)
    n = t.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = t.r(i, j)
            if v < 0:
                return MembershipVerdict(False, ConstraintViolation(ROW_PREFIX_BELOW, i, j))
            if v > 1:
                return MembershipVerdict(False, ConstraintViolation(ROW_PREFIX_ABOVE, i, j))
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            v = t.c(i, j)
            if v < 0:
                return MembershipVerdict(False, ConstraintViolation(COL_PREFIX_BELOW, i, j))
            if v > 1:
                return MembershipVerdict(False, ConstraintViolation(COL_PREFIX_ABOVE, i, j))
    for i in range(1, n + 1):
        if t.r(i, n) != 1:
            return MembershipVerdict(False, ConstraintViolation(ROW_TOTAL, i=i))
    for j in range(1, n + 1):
        if t.c(n, j) != 1:
            return MembershipVerdict(False, ConstraintViolation(COL_TOTAL, j=j))
    return MembershipVerdict(True)


TableauPos = tuple[str, int, int]  # ("row", i, j) names r(i, j); ("col", i, j) names c(i, j)


@dataclass(frozen=True)
class Circuit:
    """A simple rectilinear circuit through inner partial sums.

    ``corners`` lists the matrix positions where the circuit turns, in
    cyclic order, with ``corner_signs`` alternating +1/-1 in step;
    consecutive corners share a row or a column, alternately.
    ``traversed`` lists the tableau positions crossed along the circuit,
    one per unit step, starting from the first corner; every one of them
    is inner in the tableau the circuit was found in.
    """

    corners: tuple[tuple[int, int], ...]
    corner_signs: tuple[int, ...]
    traversed: tuple[TableauPos, ...]

    def __post_init__(self):
        k = len(self.corners)
        if k < 4 or k % 2 != 0 or len(self.corner_signs) != k:
            raise ValueError("a circuit needs an even number of corners, at least 4")
        for s, t in zip(self.corner_signs, self.corner_signs[1:] + self.corner_signs[:1]):
            if s not in (-1, 1) or s == t:
                raise ValueError("corner signs must alternate between +1 and -1")
        share_row = self.corners[0][0] == self.corners[1][0]
        for a, b in zip(self.corners, self.corners[1:] + self.corners[:1]):
            if share_row:
                if a[0] != b[0] or a[1] == b[1]:
                    raise ValueError("consecutive corners must share a row here")
            else:
                if a[1] != b[1] or a[0] == b[0]:
                    raise ValueError("consecutive corners must share a column here")
            share_row = not share_row


def _first_inner(t: PartialSumTableau) -> Optional[TableauPos]:
    # Fixed scan: positions (i, j) in row-major order, the row sum before
    # the column sum at each position.
    for i in range(1, t.n + 1):
        for j in range(1, t.n + 1):
            if t.is_inner("row", i, j):
                return ("row", i, j)
            if t.is_inner("col", i, j):
                return ("col", i, j)
    return None


def _steps(i: int, j: int) -> tuple[tuple[TableauPos, tuple[int, int]], ...]:
    # From entry (i, j): candidate crossings in the fixed order right,
    # down, left, up, each as (tableau position crossed, next entry).
    return (
        (("row", i, j), (i, j + 1)),
        (("col", i, j), (i + 1, j)),
        (("row", i, j - 1), (i, j - 1)),
        (("col", i - 1, j), (i - 1, j)),
    )


def find_circuit(tableau: PartialSumTableau) -> Optional[Circuit]:
    """Find a circuit of inner sums, or None when no sum is inner.

    The walk starts at the entry left of (or above) the first inner sum
    in scan order, repeatedly crosses the first inner sum in the order
    right, down, left, up that is not the sum just crossed, and closes
    at the first revisited entry.  Determinism of the result follows
    from the fixed scan and step orders.
    """
    start = _first_inner(tableau)
    if start is None:
        return None
    kind, i, j = start
    sum_pos: TableauPos = (kind, i, j)
    target = (i, j + 1) if kind == "row" else (i + 1, j)
    walk: list[tuple[int, int]] = [(i, j)]
    index: dict[tuple[int, int], int] = {(i, j): 0}
    crossings: list[TableauPos] = []
    while True:
        crossings.append(sum_pos)
        if target in index:
            s = index[target]
            cycle = walk[s:]
            cycle_sums = crossings[s:]
            break
        index[target] = len(walk)
        walk.append(target)
        prev = sum_pos
        chosen = None
        for cand_sum, cand_target in _steps(*target):
            if cand_sum == prev:
                continue
            if tableau.is_inner(cand_sum[0], cand_sum[1], cand_sum[2]):
                chosen = (cand_sum, cand_target)
                break
        if chosen is None:
            raise RuntimeError("walk stuck with no inner continuation; tableau is inconsistent")
        sum_pos, target = chosen
    return _assemble(cycle, cycle_sums)


def _assemble(cycle: list[tuple[int, int]], cycle_sums: list[TableauPos]) -> Circuit:
    length = len(cycle)
    dirs = []
    for t in range(length):
        a = cycle[t]
        b = cycle[(t + 1) % length]
        dirs.append((b[0] - a[0], b[1] - a[1]))
    corner_ids = [t for t in range(length) if dirs[t - 1] != dirs[t]]
    if not corner_ids:
        raise RuntimeError("closed walk without corners; tableau is inconsistent")
    rot = corner_ids[0]
    cycle = cycle[rot:] + cycle[:rot]
    cycle_sums = cycle_sums[rot:] + cycle_sums[:rot]
    dirs = dirs[rot:] + dirs[:rot]
    corners = []
    for t in range(length):
        if dirs[t - 1] != dirs[t]:
            corners.append(cycle[t])
    signs = tuple(1 if k % 2 == 0 else -1 for k in range(len(corners)))
    return Circuit(corners=tuple(corners), corner_signs=signs, traversed=tuple(cycle_sums))


def _corner_matrix(circuit: Circuit, n: int) -> list[list[int]]:
    d = [[0] * n for _ in range(n)]
    for (i, j), s in zip(circuit.corners, circuit.corner_signs):
        d[i - 1][j - 1] += s
    return d


def _split_full(
    matrix: RationalMatrix, circuit: Circuit, tableau: Optional[PartialSumTableau] = None
) -> tuple[
    Fraction, RationalMatrix, PartialSumTableau, Fraction, RationalMatrix, PartialSumTableau
]:
    # Split core shared with decompose: also derives the children's
    # partial-sum tableaux from the parent's, touching only positions
    # where the circuit's prefix run is nonzero.
    n = matrix.n
    t = partial_sums(matrix) if tableau is None else tableau
    d = _corner_matrix(circuit, n)
    k1: Fraction | None = None
    k2: Fraction | None = None
    row_runs: list[tuple[int, int, int]] = []
    col_runs: list[tuple[int, int, int]] = []

    def tighten(p: int, s: Fraction) -> None:
        nonlocal k1, k2
        if p not in (-1, 1):
            raise RuntimeError("circuit corner prefixes must stay within -1..1")
        if not 0 < s < 1:
            raise RuntimeError("circuit traverses a partial sum that is not inner")
        b1 = 1 - s if p > 0 else s
        b2 = s if p > 0 else 1 - s
        k1 = b1 if k1 is None or b1 < k1 else k1
        k2 = b2 if k2 is None or b2 < k2 else k2

    rows_used = sorted({i for i, _ in circuit.corners})
    cols_used = sorted({j for _, j in circuit.corners})
    for i in rows_used:
        run = 0
        for j in range(1, n + 1):
            run += d[i - 1][j - 1]
            if run:
                row_runs.append((i, j, run))
                tighten(run, t.r(i, j))
    for j in cols_used:
        run = 0
        for i in range(1, n + 1):
            run += d[i - 1][j - 1]
            if run:
                col_runs.append((i, j, run))
                tighten(run, t.c(i, j))
    if k1 is None or k2 is None or k1 <= 0 or k2 <= 0:
        raise RuntimeError("degenerate circuit: no room to move in both directions")

    def shifted(k: Fraction, sign: int) -> tuple[RationalMatrix, PartialSumTableau]:
        rows = [list(row) for row in matrix.entries]
        for (i, j), s in zip(circuit.corners, circuit.corner_signs):
            rows[i - 1][j - 1] += sign * k * s
        rs = [list(row) for row in t.row_sums]
        for i, j, run in row_runs:
            rs[i - 1][j] += sign * k * run
        cs = [list(row) for row in t.col_sums]
        for i, j, run in col_runs:
            cs[i][j - 1] += sign * k * run
        child = RationalMatrix(tuple(tuple(row) for row in rows))
        child_t = PartialSumTableau(
            n=n,
            row_sums=tuple(tuple(row) for row in rs),
            col_sums=tuple(tuple(row) for row in cs),
        )
        return child, child_t

    x1, t1 = shifted(k1, +1)
    x2, t2 = shifted(k2, -1)
    return k1, x1, t1, k2, x2, t2


def split_on_circuit(
    matrix: RationalMatrix, circuit: Circuit, tableau: Optional[PartialSumTableau] = None
) -> tuple[Fraction, RationalMatrix, Fraction, RationalMatrix]:
    """Write the matrix as a convex combination along the circuit.

    Let D carry +1/-1 at the circuit's corners.  Adding t*D shifts each
    traversed partial sum by +t or -t (the prefix sums of D vanish off
    the circuit), so the largest admissible moves in the two directions
    are k1 = min over traversed sums of (headroom to 1 on +1 sums,
    room to 0 on -1 sums) and k2 the same with roles swapped.  Returns
    (k1, X1, k2, X2) with X1 = X + k1*D and X2 = X - k2*D, so that
    X = (k2*X1 + k1*X2) / (k1 + k2); both moves zero out at least one
    more partial sum, and both are strictly positive because traversed
    sums are inner.

    A precomputed tableau for the matrix may be passed to avoid
    recomputing it.
    """
    k1, x1, _, k2, x2, _ = _split_full(matrix, circuit, tableau)
    return k1, x1, k2, x2


@dataclass(frozen=True)
class ConvexCombination:
    """Terms (coefficient, ASM) with positive coefficients summing to 1,
    sorted by the row-major lexicographic order of the matrices."""

    terms: tuple[tuple[Fraction, AsmMatrix], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a convex combination needs at least one term")
        total = Fraction(0)
        orders = {a.n for _, a in self.terms}
        if len(orders) != 1:
            raise ValueError("mixed matrix orders in one combination")
        keys = [a.entries for _, a in self.terms]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("terms must be strictly sorted with distinct matrices")
        for c, _ in self.terms:
            if c <= 0:
                raise ValueError("coefficients must be strictly positive")
            total += c
        if total != 1:
            raise ValueError("coefficients must sum to exactly 1")

    @property
    def n(self) -> int:
        return self.terms[0][1].n

    def recombine(self) -> RationalMatrix:
        n = self.n
        acc = [[Fraction(0)] * n for _ in range(n)]
        for c, a in self.terms:
            for i in range(n):
                for j in range(n):
                    acc[i][j] += c * a.entries[i][j]
        return RationalMatrix(tuple(tuple(row) for row in acc))


def _as_asm(matrix: RationalMatrix) -> AsmMatrix:
    rows = []
    for row in matrix.entries:
        out = []
        for v in row:
            if v.denominator != 1:
                raise RuntimeError("expected an integer matrix at a decomposition leaf")
            out.append(int(v))
        rows.append(out)
    return validate_asm(rows)


def decompose_with_depth(
    matrix: Union[RationalMatrix, AsmMatrix]
) -> tuple[ConvexCombination, int]:
    """Decompose a member into ASM vertices, reporting the split depth.

    The returned depth is the maximum number of circuit splits along any
    root-to-leaf path of the splitting tree.  Each split strictly grows
    the set of partial sums pinned to 0 or 1, so the depth never exceeds
    the 2n(n+1) partial sums of the tableau.
    """
    if isinstance(matrix, AsmMatrix):
        matrix = matrix.as_rational()
    verdict = check_membership(matrix)
    if not verdict.member:
        raise NotAMemberError(verdict)
    acc: dict[AsmMatrix, Fraction] = {}
    max_depth = 0
    stack: list[tuple[Fraction, RationalMatrix, PartialSumTableau, int]] = [
        (Fraction(1), matrix, partial_sums(matrix), 0)
    ]
    while stack:
        coeff, current, tab, depth = stack.pop()
        circuit = find_circuit(tab)
        if circuit is None:
            leaf = _as_asm(current)
            acc[leaf] = acc.get(leaf, Fraction(0)) + coeff
            if depth > max_depth:
                max_depth = depth
            continue
        k1, x1, t1, k2, x2, t2 = _split_full(current, circuit, tab)
        total = k1 + k2
        stack.append((coeff * k2 / total, x1, t1, depth + 1))
        stack.append((coeff * k1 / total, x2, t2, depth + 1))
    terms = tuple((acc[a], a) for a in sorted(acc, key=lambda m: m.entries))
    return ConvexCombination(terms), max_depth


def decompose(matrix: Union[RationalMatrix, AsmMatrix]) -> ConvexCombination:
    """Exact convex decomposition of a member into ASM vertices."""
    return decompose_with_depth(matrix)[0]
