#!/usr/bin/env python3
"""Reproduce the headline numbers from the library in one run.

Prints the ASM counts, the complete-grid region counts, the facet
census, the order-3 f-vector, and a worked decomposition plus
projection for the bundled sample matrix.  Everything is recomputed
from scratch; nothing is read from fixtures except scripts/data.
"""

import argparse
import sys
from pathlib import Path
from time import perf_counter

from asmpoly import (
    check_membership,
    complete_flow_grid,
    count_asms,
    decompose,
    doubly_directed_regions,
    enumerate_asms,
    enumerate_faces,
    enumerate_facets,
    format_matrix,
    parse_matrix,
    project,
    WeightVector,
)

DATA = Path(__file__).resolve().parent / "data"


def section(title):
    print()
    print(title)
    print("-" * len(title))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-order",
        type=int,
        default=5,
        help="largest matrix order to enumerate (default 5)",
    )
    args = parser.parse_args(argv)

    section("ASM counts")
    for n in range(1, args.max_order + 1):
        t0 = perf_counter()
        pool = enumerate_asms(n, max_order=args.max_order)
        dt = perf_counter() - t0
        formula = count_asms(n)
        tag = "ok" if len(pool) == formula else "MISMATCH"
        print(f"n={n}: enumerated {len(pool)}, formula {formula} [{tag}] ({dt:.3f}s)")

    section("Doubly directed regions of the complete grid")
    for n in range(2, 7):
        alpha = doubly_directed_regions(complete_flow_grid(n))
        print(f"n={n}: alpha = {alpha} (expected (n-1)^2 = {(n - 1) ** 2})")

    section("Facet census")
    for n in range(3, 6):
        pairs = enumerate_facets(n)
        dims = {face.dimension for _, face in pairs}
        print(f"n={n}: {len(pairs)} facets, dimensions {sorted(dims)}")

    section("Order-3 face lattice")
    lattice = enumerate_faces(3)
    fv = lattice.f_vector()
    print("f-vector:", " ".join(f"{d}:{c}" for d, c in sorted(fv.items())))
    euler = sum((-1 if d % 2 else 1) * c for d, c in fv.items())
    print(f"alternating sum (with empty and full face): {euler}")
    print(f"covering pairs: {len(lattice.covering_pairs())}")

    section("Sample decomposition")
    matrix = parse_matrix((DATA / "member5x5.mat").read_text())
    verdict = check_membership(matrix)
    print(f"membership: {'member' if verdict.member else 'not a member'}")
    combo = decompose(matrix)
    print(f"terms: {len(combo.terms)}")
    for coeff, asm in combo.terms:
        print(f"  {coeff}  {format_matrix(asm, inline=True)}")
    print(f"recombines exactly: {combo.recombine() == matrix}")

    section("Permutohedron projection")
    central = parse_matrix((DATA / "central3.mat").read_text())
    z = WeightVector.from_values([3, 2, 1])
    image = project(z, central)
    print(f"project((3,2,1), central 3x3) = {tuple(str(v) for v in image)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
