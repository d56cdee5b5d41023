"""Directed grid graphs encoding ASMs and polytope faces.

The complete flow grid of order n has vertices (i, j) with i, j in
0..n+1, minus the four outer corners, and one directed edge in each
direction between orthogonally adjacent internal vertices plus one edge
from each internal vertex to each adjacent boundary vertex: 4n^2 edges
in total.  A simple flow grid picks, at every internal vertex, one of
three local patterns (all four edges in, all four out, or straight
through in both axes) and corresponds to a unique ASM: sources are the
+1 entries and sinks the -1 entries.  Unions of simple flow grids are
the elementary flow grids, which encode the faces of the polytope; the
dimension of a face is the number of doubly directed regions of its
grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .matrices import AsmMatrix, validate_asm

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


class GridValidationError(ValueError):
    """An edge set fails the structural requirements of its grid class."""


def is_internal(v: Vertex, n: int) -> bool:
    return 1 <= v[0] <= n and 1 <= v[1] <= n


def is_boundary(v: Vertex, n: int) -> bool:
    i, j = v
    if i in (0, n + 1):
        return 1 <= j <= n
    if j in (0, n + 1):
        return 1 <= i <= n
    return False


def internal_vertices(n: int) -> Iterable[Vertex]:
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            yield (i, j)


def _neighbors(v: Vertex) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    i, j = v
    return ((i, j + 1), (i, j - 1), (i + 1, j), (i - 1, j))


@lru_cache(maxsize=None)
def complete_edge_set(n: int) -> frozenset[Edge]:
    """Every admissible directed edge of the order-n grid (4n^2 of them)."""
    edges = set()
    for v in internal_vertices(n):
        for w in _neighbors(v):
            if is_internal(w, n) or is_boundary(w, n):
                edges.add((v, w))
    return frozenset(edges)


@dataclass(frozen=True)
class FlowGrid:
    """A subset of the complete flow grid's edges on the order-n frame."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise GridValidationError("grid order must be at least 1")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        bad = self.edges - complete_edge_set(self.n)
        if bad:
            raise GridValidationError(
                f"edge {sorted(bad)[0]} is not an admissible order-{self.n} grid edge"
            )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in the canonical order: tail row, tail col, head row, head col."""
        return tuple(sorted(self.edges))


def complete_flow_grid(n: int) -> FlowGrid:
    return FlowGrid(n, complete_edge_set(n))


class SimpleFlowGrid(FlowGrid):
    """A flow grid whose every internal vertex is a source, a sink, or a
    straight-through crossing; constructing one re-validates the pattern."""

    def __post_init__(self):
        super().__post_init__()
        _validate_simple(self.n, self.edges)


class ElementaryFlowGrid(FlowGrid):
    """A union of simple flow grid edge sets.

    The class itself adds no checks beyond FlowGrid (certification needs
    the full vertex pool and lives in is_elementary); it marks grids that
    were produced as unions of simple grids.
    """


def _validate_simple(n: int, edges: frozenset[Edge]) -> None:
    for v in internal_vertices(n):
        slots = []  # True = outgoing, per neighbor
        for w in _neighbors(v):
            fwd = (v, w) in edges
            if is_internal(w, n):
                rev = (w, v) in edges
                if fwd == rev:
                    raise GridValidationError(
                        f"vertices {v} and {w} must be joined by exactly one directed edge"
                    )
                slots.append(fwd)
            else:
                if not fwd:
                    raise GridValidationError(f"missing boundary edge from {v} to {w}")
                slots.append(True)
        right_out, left_out, down_out, up_out = slots
        if all(slots) or not any(slots):
            continue
        horizontal_through = right_out != left_out
        vertical_through = down_out != up_out
        if not (horizontal_through and vertical_through):
            raise GridValidationError(
                f"vertex {v} is neither a source, a sink, nor straight-through"
            )


@lru_cache(maxsize=None)
def asm_to_grid(matrix: AsmMatrix) -> SimpleFlowGrid:
    """The simple flow grid of an ASM.

    Each of the 2n(n+1) edges points away from the nearer balance point
    of its line: horizontally, (i,j)->(i,j+1) is present when the row
    prefix sum through column j equals 1 and (i,j)->(i,j-1) when the
    prefix through column j-1 equals 0; vertically the same rule runs
    down the columns.
    """
    n = matrix.n
    rpref = []
    for row in matrix.entries:
        acc = [0]
        run = 0
        for v in row:
            run += v
            acc.append(run)
        rpref.append(acc)
    cpref = [[0] * n]
    run_cols = [0] * n
    for row in matrix.entries:
        run_cols = [a + v for a, v in zip(run_cols, row)]
        cpref.append(list(run_cols))
    edges = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if rpref[i - 1][j] == 1:
                edges.add(((i, j), (i, j + 1)))
            if rpref[i - 1][j - 1] == 0:
                edges.add(((i, j), (i, j - 1)))
            if cpref[i][j - 1] == 1:
                edges.add(((i, j), (i + 1, j)))
            if cpref[i - 1][j - 1] == 0:
                edges.add(((i, j), (i - 1, j)))
    return SimpleFlowGrid(n, frozenset(edges))


def grid_to_asm(grid: FlowGrid) -> AsmMatrix:
    """Invert asm_to_grid: sources become +1 entries, sinks -1."""
    if not isinstance(grid, SimpleFlowGrid):
        grid = SimpleFlowGrid(grid.n, grid.edges)
    n = grid.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            v = (i, j)
            outs = sum(1 for w in _neighbors(v) if (v, w) in grid.edges)
            if outs == 4:
                row.append(1)
            elif outs == 0:
                row.append(-1)
            else:
                row.append(0)
        rows.append(row)
    return validate_asm(rows)


def is_elementary(grid: FlowGrid, vertex_pool: Sequence[AsmMatrix]) -> tuple[bool, tuple[AsmMatrix, ...]]:
    """Test whether the grid is a union of simple flow grids.

    ``vertex_pool`` must be the complete list of order-n ASMs (as from
    enumerate_asms).  Returns the verdict together with the witness: all
    pool members whose simple grids sit inside the grid.  The grid is
    elementary exactly when the witness grids union back to it; the
    empty grid is elementary with an empty witness.
    """
    if any(a.n != grid.n for a in vertex_pool):
        raise ValueError("vertex pool order does not match the grid")
    witness = tuple(a for a in vertex_pool if asm_to_grid(a).edges <= grid.edges)
    covered: set[Edge] = set()
    for a in witness:
        covered |= asm_to_grid(a).edges
    return covered == set(grid.edges), witness


def doubly_directed_regions(grid: FlowGrid) -> int:
    """Number alpha of doubly directed regions.

    Keep only the adjacencies carrying edges in both directions, viewed
    as an undirected plane subgraph of the internal n x n lattice; alpha
    is its number of bounded faces, computed per connected component by
    Euler's relation and summed: E - V + C over the doubled subgraph.
    The empty grid has alpha = 0.
    """
    doubled = [
        (v, w) for (v, w) in grid.edges if v < w and (w, v) in grid.edges
    ]
    if not doubled:
        return 0
    verts = {v for e in doubled for v in e}
    parent = {v: v for v in verts}

    def find(x: Vertex) -> Vertex:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, w in doubled:
        rv, rw = find(v), find(w)
        if rv != rw:
            parent[rv] = rw
    components = len({find(v) for v in verts})
    return len(doubled) - len(verts) + components
