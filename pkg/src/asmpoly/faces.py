"""Faces and facets of the ASM polytope through elementary flow grids.

Faces correspond to elementary flow grids: the grid of a face is the
union of the simple grids of its ASM vertices, the vertex set of a grid
is the set of ASMs whose simple grids it contains, and the dimension of
a face equals the number of doubly directed regions of its grid.  The
full face lattice is generated by closing the set of single-vertex
grids under union.  Facets admit an explicit description by partial-sum
equalities: 4(n-2)^2 one-sided partial sums forced to 0 plus the four
corner entries forced to 0.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .grids import (
    ElementaryFlowGrid,
    FlowGrid,
    asm_to_grid,
    complete_edge_set,
    doubly_directed_regions,
    is_elementary,
)
from .matrices import (
    AsmMatrix,
    DEFAULT_ENUMERATION_CAP,
    CapExceededError,
    RationalMatrix,
    enumerate_asms,
)

DEFAULT_LATTICE_CAP = 4

PARTIAL_FAMILIES = ("top-partial", "left-partial", "bottom-partial", "right-partial")


@dataclass(frozen=True)
class Face:
    """A face of the order-n polytope.

    ``grid`` is the face's elementary flow grid, ``vertex_set`` its ASM
    vertices sorted lexicographically, and ``dimension`` the number of
    doubly directed regions of the grid; the empty face has the empty
    grid and dimension -1.
    """

    grid: FlowGrid
    vertex_set: tuple[AsmMatrix, ...]
    dimension: int

    @property
    def n(self) -> int:
        return self.grid.n

    def canonical_hash(self) -> str:
        """SHA-256 of the canonical grid serialization; stable face id."""
        lines = [str(self.grid.n)]
        lines.extend(
            f"({a},{b})->({c},{d})" for (a, b), (c, d) in self.grid.sorted_edges()
        )
        return hashlib.sha256("\n".join(lines).encode("ascii")).hexdigest()


def empty_face(n: int) -> Face:
    return Face(grid=ElementaryFlowGrid(n, frozenset()), vertex_set=(), dimension=-1)


def _face_from_edges(n: int, edges: frozenset, pool: Sequence[AsmMatrix]) -> Face:
    grid = ElementaryFlowGrid(n, edges)
    ok, witness = is_elementary(grid, pool)
    if not ok:
        raise ValueError("edge set is not a union of simple flow grids")
    if not witness:
        return empty_face(n)
    return Face(grid=grid, vertex_set=witness, dimension=doubly_directed_regions(grid))


def face_closure(
    matrices: Iterable[AsmMatrix], max_order: int = DEFAULT_ENUMERATION_CAP
) -> Face:
    """Smallest face containing the given ASMs.

    The face's grid is the union of the argument grids; its vertex set
    may be strictly larger than the input.
    """
    ms = tuple(matrices)
    if not ms:
        raise ValueError("face_closure needs at least one matrix")
    n = ms[0].n
    if any(a.n != n for a in ms):
        raise ValueError("mixed matrix orders")
    pool = enumerate_asms(n, max_order=max_order)
    edges: frozenset = frozenset()
    for a in ms:
        edges |= asm_to_grid(a).edges
    return _face_from_edges(n, edges, pool)


def is_edge(
    a: AsmMatrix, b: AsmMatrix, max_order: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """Whether two distinct ASMs span a 1-dimensional face of the polytope."""
    if a == b:
        raise ValueError("an edge needs two distinct vertices")
    face = face_closure((a, b), max_order=max_order)
    return face.dimension == 1 and len(face.vertex_set) == 2


@dataclass(frozen=True)
class FacetDescriptor:
    """One facet-defining equality.

    The four partial families fix a one-sided partial sum of column j or
    row i to zero: "top-partial" sums rows 1..i-1 of column j,
    "left-partial" sums columns 1..j-1 of row i, "bottom-partial" sums
    rows i+1..n of column j, "right-partial" sums columns j+1..n of row
    i, with i, j in 2..n-1.  The "corner" family fixes one of the four
    corner entries to zero.
    """

    family: str
    i: int
    j: int

    def equality_holds(self, matrix: Union[AsmMatrix, RationalMatrix]) -> bool:
        """Evaluate the defining sum at the matrix, exactly."""
        n = matrix.n
        e = matrix.entries
        if self.family == "top-partial":
            total = sum(e[k][self.j - 1] for k in range(0, self.i - 1))
        elif self.family == "left-partial":
            total = sum(e[self.i - 1][k] for k in range(0, self.j - 1))
        elif self.family == "bottom-partial":
            total = sum(e[k][self.j - 1] for k in range(self.i, n))
        elif self.family == "right-partial":
            total = sum(e[self.i - 1][k] for k in range(self.j, n))
        elif self.family == "corner":
            total = e[self.i - 1][self.j - 1]
        else:
            raise ValueError(f"unknown facet family {self.family!r}")
        return total == 0

    def removed_edges(self, n: int) -> tuple:
        """Directed grid edges absent from every vertex grid of the facet.

        A vanishing one-sided partial sum removes exactly one direction
        of one internal adjacency; a corner entry fixed to zero removes
        the two edges leaving that corner vertex.
        """
        i, j = self.i, self.j
        if self.family == "top-partial":
            return (((i - 1, j), (i, j)),)
        if self.family == "left-partial":
            return (((i, j - 1), (i, j)),)
        if self.family == "bottom-partial":
            return (((i + 1, j), (i, j)),)
        if self.family == "right-partial":
            return (((i, j + 1), (i, j)),)
        if self.family == "corner":
            di = 1 if i == 1 else -1
            dj = 1 if j == 1 else -1
            return (((i, j), (i, j + dj)), ((i, j), (i + di, j)))
        raise ValueError(f"unknown facet family {self.family!r}")


def _descriptors(n: int) -> tuple[FacetDescriptor, ...]:
    out = []
    for family in PARTIAL_FAMILIES:
        for i in range(2, n):
            for j in range(2, n):
                out.append(FacetDescriptor(family, i, j))
    for i, j in ((1, 1), (1, n), (n, 1), (n, n)):
        out.append(FacetDescriptor("corner", i, j))
    return tuple(out)


def enumerate_facets(
    n: int, max_order: int = DEFAULT_ENUMERATION_CAP
) -> tuple[tuple[FacetDescriptor, Face], ...]:
    """All facets with their descriptors, 4(n-2)^2 + 4 of them for n >= 3.

    The order-2 polytope is a segment whose facets are its two vertices;
    they are reported under the first corner descriptors that carve them
    out.  Order 1 has no facets and is rejected.
    """
    if n < 2:
        raise ValueError("facets require order at least 2")
    pool = enumerate_asms(n, max_order=max_order)
    if n == 2:
        pairs = []
        seen = set()
        for desc in _descriptors(2):
            vertices = tuple(a for a in pool if desc.equality_holds(a))
            if vertices and vertices not in seen:
                seen.add(vertices)
                pairs.append((desc, face_closure(vertices, max_order=max_order)))
        return tuple(pairs)
    out = []
    for desc in _descriptors(n):
        vertices = tuple(a for a in pool if desc.equality_holds(a))
        face = face_closure(vertices, max_order=max_order)
        out.append((desc, face))
    return tuple(out)


def facets_containing(matrix: AsmMatrix) -> tuple[FacetDescriptor, ...]:
    """Descriptors of every facet whose defining equality holds at the ASM.

    The count is 2(n-1)(n-2) plus the number of corner entries equal
    to 1.
    """
    if matrix.n < 3:
        raise ValueError("facet incidence requires order at least 3")
    return tuple(d for d in _descriptors(matrix.n) if d.equality_holds(matrix))


@dataclass(frozen=True)
class FaceLattice:
    """All faces of the order-n polytope, empty face included.

    Faces are sorted by dimension and then by their canonical edge
    sequence, so the layout is deterministic.  Covering relations are
    computed on demand by inclusion-minimality over vertex sets.
    """

    n: int
    faces: tuple[Face, ...]

    def f_vector(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[f.dimension] = counts.get(f.dimension, 0) + 1
        return counts

    def covering_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs (a, b) of face indices with faces[b] covering faces[a].

        Covers are recovered purely by inclusion-minimality of the grid
        edge sets, with no reference to dimensions: a is covered by b
        when a's grid sits strictly inside b's and no third face fits
        strictly between.  Faces are compared as bitmasks; candidates
        below b are scanned by decreasing edge count, so each is tested
        only against the covers of b already accepted.
        """
        edge_list = sorted(complete_edge_set(self.n))
        index = {e: k for k, e in enumerate(edge_list)}
        masks = []
        for f in self.faces:
            m = 0
            for e in f.grid.edges:
                m |= 1 << index[e]
            masks.append(m)
        by_size = sorted(range(len(masks)), key=lambda k: (masks[k].bit_count(), k))
        covers: list[tuple[int, int]] = []
        for pos, b in enumerate(by_size):
            mb = masks[b]
            accepted: list[int] = []
            for a in reversed(by_size[:pos]):
                ma = masks[a]
                if ma == mb or (ma | mb) != mb:
                    continue
                if any((ma | mc) == mc for mc in accepted):
                    continue
                accepted.append(ma)
                covers.append((a, b))
        return tuple(sorted(covers))


def enumerate_faces(n: int, max_order: int = DEFAULT_LATTICE_CAP) -> FaceLattice:
    """The full face lattice, generated by union-closure of vertex grids.

    Grids are handled as bitmasks over the complete grid's edge list;
    the closure of the single-vertex grids under pairwise union reaches
    every face because each face grid is the union of its vertices'
    grids.  Above the cap (default 4) the face count grows rapidly;
    raise max_order deliberately if needed.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > max_order:
        raise CapExceededError(
            f"order {n} exceeds the lattice cap {max_order}; pass a larger max_order"
        )
    pool = enumerate_asms(n, max_order=max(n, DEFAULT_ENUMERATION_CAP))
    edge_list = sorted(complete_edge_set(n))
    index = {e: k for k, e in enumerate(edge_list)}
    gens = []
    for a in pool:
        m = 0
        for e in asm_to_grid(a).edges:
            m |= 1 << index[e]
        gens.append(m)
    seen = set(gens)
    queue = deque(seen)
    while queue:
        m = queue.popleft()
        for g in gens:
            u = m | g
            if u not in seen:
                seen.add(u)
                queue.append(u)
    faces = [empty_face(n)]
    for m in seen:
        edges = frozenset(edge_list[k] for k in range(len(edge_list)) if (m >> k) & 1)
        grid = ElementaryFlowGrid(n, edges)
        vertices = tuple(pool[i] for i, g in enumerate(gens) if g & m == g)
        faces.append(
            Face(grid=grid, vertex_set=vertices, dimension=doubly_directed_regions(grid))
        )
    faces.sort(key=lambda f: (f.dimension, f.grid.sorted_edges()))
    return FaceLattice(n=n, faces=tuple(faces))


def join(f1: Face, f2: Face, max_order: int = DEFAULT_ENUMERATION_CAP) -> Face:
    """Smallest face containing both: the face of the union grid."""
    if f1.n != f2.n:
        raise ValueError("mixed orders")
    n = f1.n
    if not f1.vertex_set:
        return f2
    if not f2.vertex_set:
        return f1
    pool = enumerate_asms(n, max_order=max_order)
    return _face_from_edges(n, f1.grid.edges | f2.grid.edges, pool)


def meet(f1: Face, f2: Face, max_order: int = DEFAULT_ENUMERATION_CAP) -> Face:
    """Largest face inside both: vertices whose grids fit the intersection."""
    if f1.n != f2.n:
        raise ValueError("mixed orders")
    n = f1.n
    shared = f1.grid.edges & f2.grid.edges
    pool = enumerate_asms(n, max_order=max_order)
    vertices = tuple(a for a in pool if asm_to_grid(a).edges <= shared)
    if not vertices:
        return empty_face(n)
    edges: frozenset = frozenset()
    for a in vertices:
        edges |= asm_to_grid(a).edges
    return Face(
        grid=ElementaryFlowGrid(n, edges),
        vertex_set=vertices,
        dimension=doubly_directed_regions(ElementaryFlowGrid(n, edges)),
    )


@dataclass(frozen=True)
class SeparatingHyperplane:
    """An integer functional separating one ASM from all the others.

    ``coefficients[i][j]`` counts how many of the directional partial
    sums attached to the edges of the ASM's grid involve entry (i+1,
    j+1).  The functional evaluates to 2n(n+1) at the defining ASM and
    to at most 2n(n+1) - 1 at every other ASM, so ``threshold`` is set
    to 2n(n+1) - 1/2.
    """

    coefficients: tuple[tuple[int, ...], ...]
    threshold: Fraction

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def evaluate(self, matrix: Union[AsmMatrix, RationalMatrix]) -> Fraction:
        if matrix.n != self.n:
            raise ValueError("order mismatch")
        total = Fraction(0)
        for wrow, mrow in zip(self.coefficients, matrix.entries):
            for w, v in zip(wrow, mrow):
                total += w * v
        return total

    def separates(self, matrix: Union[AsmMatrix, RationalMatrix]) -> bool:
        """True when the matrix falls on the defining ASM's side."""
        return self.evaluate(matrix) > self.threshold


def separating_hyperplane(matrix: AsmMatrix) -> SeparatingHyperplane:
    """Sum the directional partial sums over the edges of the ASM's grid.

    Each edge of the simple flow grid certifies one partial sum equal to
    1: an edge (i,j)->(i,j+1) certifies the row prefix through column j,
    an edge (i,j)->(i,j-1) the row suffix from column j, and vertically
    alike.  Adding all 2n(n+1) of these functionals gives one whose
    value at an ASM counts its certified sums, maximized only by the
    defining ASM.
    """
    n = matrix.n
    w = [[0] * n for _ in range(n)]
    for (i, j), (i2, j2) in asm_to_grid(matrix).edges:
        if i2 == i and j2 == j + 1:
            for k in range(0, j):
                w[i - 1][k] += 1
        elif i2 == i and j2 == j - 1:
            for k in range(j - 1, n):
                w[i - 1][k] += 1
        elif j2 == j and i2 == i + 1:
            for k in range(0, i):
                w[k][j - 1] += 1
        else:
            for k in range(i - 1, n):
                w[k][j - 1] += 1
    return SeparatingHyperplane(
        coefficients=tuple(tuple(row) for row in w),
        threshold=Fraction(2 * n * (n + 1)) - Fraction(1, 2),
    )
