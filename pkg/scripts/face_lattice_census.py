#!/usr/bin/env python3
"""Census of the full face lattice for small orders.

For each requested order this prints the f-vector, the alternating sum
over all dimensions (which is 0 when the empty and full faces are
included), the number of covering pairs, and a per-rank breakdown of
vertex counts.  Order 4 already holds 9285 nonempty faces and takes a
couple of minutes; anything above is enumeration-capped by default.
"""

import argparse
import sys
from collections import Counter
from time import perf_counter

from asmpoly import enumerate_faces


def census(n, max_order):
    t0 = perf_counter()
    lattice = enumerate_faces(n, max_order=max_order)
    dt = perf_counter() - t0
    fv = lattice.f_vector()
    print(f"order {n}: {len(lattice.faces)} faces in {dt:.2f}s")
    print("  f-vector:", " ".join(f"{d}:{c}" for d, c in sorted(fv.items())))
    euler = sum((-1 if d % 2 else 1) * c for d, c in fv.items())
    print(f"  alternating sum: {euler}")
    sizes = Counter()
    for face in lattice.faces:
        sizes[face.dimension, len(face.vertex_set)] += 1
    by_dim = {}
    for (dim, k), count in sizes.items():
        by_dim.setdefault(dim, []).append((k, count))
    for dim in sorted(by_dim):
        parts = ", ".join(f"{count}x{k}v" for k, count in sorted(by_dim[dim]))
        print(f"  dim {dim}: {parts}")
    if n <= 3:
        covers = lattice.covering_pairs()
        print(f"  covering pairs: {len(covers)}")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "orders",
        type=int,
        nargs="*",
        default=[2, 3],
        help="matrix orders to census (default: 2 3)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=4,
        help="enumeration cap passed through to the lattice builder",
    )
    args = parser.parse_args(argv)
    for n in args.orders:
        census(n, max(args.cap, n))
    return 0


if __name__ == "__main__":
    sys.exit(main())
