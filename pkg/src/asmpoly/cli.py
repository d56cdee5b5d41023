"""Command line interface.

Exit codes: 0 on success, 1 on a domain rejection (invalid ASM, not a
member, not a simple grid, a false query answer), 2 on usage or parse
errors.  All output is deterministic: repeated runs on the same input
produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .faces import (
    DEFAULT_LATTICE_CAP,
    enumerate_facets,
    face_closure,
    facets_containing,
    enumerate_faces,
    is_edge,
)
from .grids import GridValidationError, SimpleFlowGrid, asm_to_grid, grid_to_asm, doubly_directed_regions
from .matrices import (
    DEFAULT_ENUMERATION_CAP,
    AsmValidationError,
    CapExceededError,
    RationalMatrix,
    count_asms,
    enumerate_asms,
    validate_asm,
)
from .membership import NotAMemberError, check_membership, decompose
from .permutohedron import WeightVector, majorizes, project
from .textio import (
    FormatError,
    format_decomposition,
    format_grid,
    format_matrix,
    format_vector,
    parse_decomposition,
    parse_grid,
    parse_matrix,
    parse_vector,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _parse_asm(path: str):
    return validate_asm(parse_matrix(_read(path)))


def _cmd_count(args) -> int:
    print(count_asms(args.n))
    return 0


def _cmd_enumerate(args) -> int:
    blocks = []
    for a in enumerate_asms(args.n, max_order=args.cap):
        if args.format == "grid":
            blocks.append(format_grid(asm_to_grid(a)))
        else:
            blocks.append(format_matrix(a))
    print("\n\n".join(blocks))
    return 0


def _cmd_validate(args) -> int:
    try:
        validate_asm(parse_matrix(_read(args.path)))
    except AsmValidationError as exc:
        print(f"invalid: {exc}")
        return 1
    print("valid")
    return 0


def _cmd_membership(args) -> int:
    verdict = check_membership(parse_matrix(_read(args.path)))
    if verdict.member:
        print("member")
        return 0
    print(f"not a member: {verdict.violated_constraint.describe()}")
    return 1


def _cmd_decompose(args) -> int:
    try:
        combo = decompose(parse_matrix(_read(args.path)))
    except NotAMemberError as exc:
        print(str(exc))
        return 1
    print(format_decomposition(combo, checksum=args.checksum))
    return 0


def _cmd_recombine(args) -> int:
    combo, _checksum = parse_decomposition(_read(args.path))
    # Summed here directly from the parsed terms, independently of the
    # decomposition code paths, so the output can serve as an oracle.
    n = combo.n
    acc = [[Fraction(0)] * n for _ in range(n)]
    for coeff, a in combo.terms:
        for i in range(n):
            for j in range(n):
                acc[i][j] += coeff * a.entries[i][j]
    print(format_matrix(RationalMatrix(tuple(tuple(r) for r in acc))))
    return 0


def _cmd_to_grid(args) -> int:
    try:
        a = _parse_asm(args.path)
    except AsmValidationError as exc:
        print(f"invalid: {exc}")
        return 1
    print(format_grid(asm_to_grid(a)))
    return 0


def _cmd_from_grid(args) -> int:
    grid = parse_grid(_read(args.path))
    try:
        a = grid_to_asm(grid)
    except GridValidationError as exc:
        print(f"not a simple flow grid: {exc}")
        return 1
    print(format_matrix(a))
    return 0


def _cmd_regions(args) -> int:
    print(doubly_directed_regions(parse_grid(_read(args.path))))
    return 0


def _cmd_facets(args) -> int:
    lines = []
    for desc, face in enumerate_facets(args.n, max_order=args.cap):
        lines.append(
            f"{desc.family} {desc.i} {desc.j} dim={face.dimension} vertices={len(face.vertex_set)}"
        )
    print("\n".join(lines))
    return 0


def _cmd_facets_of(args) -> int:
    try:
        a = _parse_asm(args.path)
    except AsmValidationError as exc:
        print(f"invalid: {exc}")
        return 1
    lines = [f"{d.family} {d.i} {d.j}" for d in facets_containing(a)]
    print("\n".join(lines))
    return 0


def _cmd_face(args) -> int:
    try:
        ms = [_parse_asm(p) for p in args.paths]
    except AsmValidationError as exc:
        print(f"invalid: {exc}")
        return 1
    face = face_closure(ms, max_order=args.cap)
    out = [f"dimension {face.dimension}", f"vertices {len(face.vertex_set)}"]
    if args.format == "grid":
        out.append(format_grid(face.grid))
    else:
        out.extend(format_matrix(a, inline=True) for a in face.vertex_set)
    print("\n".join(out))
    return 0


def _cmd_is_edge(args) -> int:
    try:
        a = _parse_asm(args.path_a)
        b = _parse_asm(args.path_b)
    except AsmValidationError as exc:
        print(f"invalid: {exc}")
        return 1
    if a == b:
        raise FormatError("is-edge needs two distinct ASMs")
    if is_edge(a, b, max_order=args.cap):
        print("edge")
        return 0
    print("not an edge")
    return 1


def _cmd_lattice(args) -> int:
    lattice = enumerate_faces(args.n, max_order=args.cap)
    lines = []
    for k, face in enumerate(lattice.faces):
        edges = ",".join(
            f"({a},{b})->({c},{d})" for (a, b), (c, d) in face.grid.sorted_edges()
        )
        lines.append(
            f"face {k} dim={face.dimension} vertices={len(face.vertex_set)} "
            f"hash={face.canonical_hash()} edges={edges}"
        )
    for a, b in lattice.covering_pairs():
        lines.append(f"cover {a} {b}")
    print("\n".join(lines))
    return 0


def _cmd_project(args) -> int:
    z = WeightVector(parse_vector(_read(args.z_path)))
    x = parse_matrix(_read(args.x_path))
    print(format_vector(project(z, x)))
    return 0


def _cmd_majorizes(args) -> int:
    u = parse_vector(_read(args.u_path))
    v = parse_vector(_read(args.v_path))
    if majorizes(u, v):
        print("true")
        return 0
    print("false")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmpoly",
        description="Exact computations in the alternating sign matrix polytope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("count", _cmd_count, "number of ASMs of a given order")
    p.add_argument("n", type=int)

    p = add("enumerate", _cmd_enumerate, "list all ASMs of a given order")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--format", choices=("matrix", "grid"), default="matrix")

    p = add("validate", _cmd_validate, "check the ASM conditions on a matrix file")
    p.add_argument("path")

    p = add("membership", _cmd_membership, "test polytope membership of a rational matrix")
    p.add_argument("path")

    p = add("decompose", _cmd_decompose, "write a member as a convex combination of ASMs")
    p.add_argument("path")
    p.add_argument("--checksum", action="store_true", help="append the recombined matrix")

    p = add("recombine", _cmd_recombine, "sum a decomposition file back into a matrix")
    p.add_argument("path", nargs="?", default="-")

    p = add("to-grid", _cmd_to_grid, "simple flow grid of an ASM")
    p.add_argument("path")

    p = add("from-grid", _cmd_from_grid, "ASM of a simple flow grid")
    p.add_argument("path")

    p = add("regions", _cmd_regions, "doubly directed region count of a grid")
    p.add_argument("path")

    p = add("facets", _cmd_facets, "facet descriptors and faces of the order-n polytope")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)

    p = add("facets-of", _cmd_facets_of, "facets whose equality holds at an ASM")
    p.add_argument("path")

    p = add("face", _cmd_face, "smallest face containing the given ASMs")
    p.add_argument("paths", nargs="+")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--format", choices=("matrix", "grid"), default="matrix")

    p = add("is-edge", _cmd_is_edge, "whether two ASMs span an edge of the polytope")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)

    p = add("lattice", _cmd_lattice, "full face lattice with covering relations")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_LATTICE_CAP)

    p = add("project", _cmd_project, "project a matrix by a weight vector")
    p.add_argument("z_path")
    p.add_argument("x_path")

    p = add("majorizes", _cmd_majorizes, "whether the first vector is majorized by the second")
    p.add_argument("u_path")
    p.add_argument("v_path")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (FormatError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
