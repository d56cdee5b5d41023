"""Projection of the polytope onto permutohedra, and majorization.

For a row vector z with distinct entries, the map X -> zX sends the
order-n polytope onto the permutohedron of z whenever z is strictly
decreasing: a point p lies in that permutohedron exactly when p is
majorized by z, meaning every prefix of the decreasing rearrangement of
p is at most the corresponding prefix for z, with equal totals.  The
permutation matrices project exactly onto the permutations of z.  The
decreasing hypothesis matters: with z merely distinct, the image of an
ASM with a -1 entry can escape the permutohedron.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .matrices import AsmMatrix, RationalMatrix, as_fraction


@dataclass(frozen=True)
class WeightVector:
    """A vector of pairwise distinct rationals.

    ``decreasing`` is computed at construction and states whether the
    entries are strictly decreasing, which is the hypothesis under which
    the projection guarantees hold.
    """

    entries: tuple[Fraction, ...]
    decreasing: bool = False

    def __post_init__(self):
        if not self.entries:
            raise ValueError("weight vector must be nonempty")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("weight vector entries must be pairwise distinct")
        actual = all(a > b for a, b in zip(self.entries, self.entries[1:]))
        object.__setattr__(self, "decreasing", actual)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_values(cls, values: Sequence[Union[int, Fraction, str]]) -> "WeightVector":
        return cls(tuple(as_fraction(v) for v in values))


def project(
    z: WeightVector, matrix: Union[RationalMatrix, AsmMatrix]
) -> tuple[Fraction, ...]:
    """The row vector z X, exactly."""
    if z.n != matrix.n:
        raise ValueError("weight vector and matrix orders differ")
    n = z.n
    return tuple(
        sum((z.entries[i] * matrix.entries[i][j] for i in range(n)), Fraction(0))
        for j in range(n)
    )


def majorizes(
    p: Sequence[Union[int, Fraction]], z: Sequence[Union[int, Fraction]]
) -> bool:
    """Whether p is majorized by z (p below z in the majorization order).

    Both vectors are rearranged decreasingly; every prefix sum of p must
    stay at or below the matching prefix sum of z and the full sums must
    agree exactly.
    """
    if len(p) != len(z):
        raise ValueError("majorization compares vectors of equal length")
    dp = sorted((as_fraction(v) for v in p), reverse=True)
    dz = sorted((as_fraction(v) for v in z), reverse=True)
    run_p = Fraction(0)
    run_z = Fraction(0)
    for a, b in zip(dp[:-1], dz[:-1]):
        run_p += a
        run_z += b
        if run_p > run_z:
            return False
    return sum(dp, Fraction(0)) == sum(dz, Fraction(0))


def in_permutohedron(z: WeightVector, point: Sequence[Union[int, Fraction]]) -> bool:
    """Whether the point lies in the convex hull of the permutations of z."""
    if len(point) != z.n:
        raise ValueError("point and weight vector lengths differ")
    return majorizes(point, z.entries)
