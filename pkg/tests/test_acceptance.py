"""Acceptance suite.

Each criterion is one test that prints exactly one line of the form
"ACCEPTANCE nn PASS: <label>" or "ACCEPTANCE nn FAIL: <label>" and then
asserts.  Run with

    pytest tests/test_acceptance.py -v -s

to watch the lines appear; the convex-decomposition criterion dominates
the runtime (a few minutes of exact big-rational arithmetic).
"""

import subprocess
import sys
from itertools import permutations
from random import Random
from time import perf_counter

from asmpoly import (
    FlowGrid,
    WeightVector,
    asm_to_grid,
    check_membership,
    complete_flow_grid,
    count_asms,
    decompose,
    decompose_with_depth,
    doubly_directed_regions,
    enumerate_asms,
    enumerate_faces,
    enumerate_facets,
    face_closure,
    facets_containing,
    format_decomposition,
    format_grid,
    format_matrix,
    grid_to_asm,
    join,
    meet,
    majorizes,
    project,
    separating_hyperplane,
)
from asmpoly.matrices import _enumerate
from oracles import (
    affine_rank,
    exactly_one_violation_sample,
    paired_total_violation_sample,
    random_decreasing_vector,
    random_member,
)

SEED = 20260817


def _report(num, label, problems):
    status = "FAIL" if problems else "PASS"
    print(f"ACCEPTANCE {num:02d} {status}: {label}")
    assert not problems, f"criterion {num} ({label}): " + "; ".join(problems[:8])


def _note(problems, text, cap=8):
    if len(problems) < cap:
        problems.append(text)
    elif len(problems) == cap:
        problems.append("... further failures suppressed")


def test_criterion_01_enumeration_matches_formula():
    problems = []
    known = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429}
    _enumerate.cache_clear()
    t0 = perf_counter()
    pools = {n: enumerate_asms(n) for n in range(1, 6)}
    elapsed = perf_counter() - t0
    for n, expected in known.items():
        if count_asms(n) != expected:
            _note(problems, f"count_asms({n}) != {expected}")
        if len(pools[n]) != expected:
            _note(problems, f"enumerate_asms({n}) yields {len(pools[n])}")
    if elapsed >= 10:
        _note(problems, f"enumeration through n=5 took {elapsed:.1f}s")
    _report(1, "enumeration agrees with the counting formula within 10s", problems)


def test_criterion_02_decomposition_soundness():
    problems = []
    rng = Random(SEED)
    for n in (3, 4, 5):
        pool = enumerate_asms(n)
        for k in range(1000):
            m = random_member(rng, pool)
            if not check_membership(m).member:
                _note(problems, f"n={n} sample {k}: combination not accepted")
                continue
            combo, _depth = decompose_with_depth(m)
            if any(c <= 0 for c, _ in combo.terms):
                _note(problems, f"n={n} sample {k}: nonpositive coefficient")
            if sum(c for c, _ in combo.terms) != 1:
                _note(problems, f"n={n} sample {k}: coefficients do not sum to 1")
            if combo.recombine() != m:
                _note(problems, f"n={n} sample {k}: recombination differs")
    _report(2, "1000 random members per n in {3,4,5} decompose and recombine exactly", problems)


def test_criterion_03_rejection_with_correct_descriptor():
    problems = []
    rng = Random(SEED + 1)
    kinds_seen = set()
    quotas = ((3, 334), (4, 333), (5, 333))
    for n, quota in quotas:
        pool = enumerate_asms(n)
        for k in range(quota):
            matrix, expected = exactly_one_violation_sample(rng, n, pool)
            verdict = check_membership(matrix)
            if verdict.member:
                _note(problems, f"n={n} sample {k}: accepted a violating matrix")
                continue
            got = verdict.violated_constraint
            kinds_seen.add(got.kind)
            if (got.kind, got.i, got.j) != expected:
                _note(
                    problems,
                    f"n={n} sample {k}: expected {expected}, got "
                    f"({got.kind}, {got.i}, {got.j})",
                )
    missing = {
        "row-prefix-below-0",
        "row-prefix-above-1",
        "column-prefix-below-0",
        "column-prefix-above-1",
    } - kinds_seen
    if missing:
        _note(problems, f"prefix families never sampled: {sorted(missing)}")
    # the total equalities are linearly dependent, so a single total can
    # never fail alone; the minimal total failure is a row-column pair
    for k in range(60):
        n = 3 + k % 3
        matrix, i, j = paired_total_violation_sample(rng, n, enumerate_asms(n))
        got = check_membership(matrix).violated_constraint
        if got is None or (got.kind, got.i) != ("row-total", i):
            _note(problems, f"total pair sample {k}: got {got}")
    _report(3, "1000 single-violation matrices rejected with the right descriptor", problems)


def test_criterion_04_fixture_decomposition(member5):
    problems = []
    n = member5.n
    if not check_membership(member5).member:
        _note(problems, "fixture matrix rejected")
    combo, depth = decompose_with_depth(member5)
    if depth > 2 * n * n + 2 * n:
        _note(problems, f"split depth {depth} exceeds {2 * n * n + 2 * n}")
    if combo.recombine() != member5:
        _note(problems, "recombination differs from the fixture")
    _report(4, "5x5 fixture decomposes within 60 rounds and recombines", problems)


def test_criterion_05_facet_counts_and_dimension():
    problems = []
    expected_counts = {3: 8, 4: 20, 5: 40}
    for n, expected in expected_counts.items():
        pairs = enumerate_facets(n)
        if len(pairs) != expected:
            _note(problems, f"n={n}: {len(pairs)} facets, expected {expected}")
        hashes = {face.canonical_hash() for _, face in pairs}
        if len(hashes) != len(pairs):
            _note(problems, f"n={n}: facets are not distinct")
        want_dim = (n - 1) ** 2 - 1
        for desc, face in pairs:
            if face.dimension != want_dim:
                _note(
                    problems,
                    f"n={n} {desc.family}({desc.i},{desc.j}): alpha {face.dimension} != {want_dim}",
                )
            elif n in (3, 4) and affine_rank(face.vertex_set) != want_dim:
                _note(
                    problems,
                    f"n={n} {desc.family}({desc.i},{desc.j}): affine rank disagrees",
                )
    _report(5, "8/20/40 distinct facets of dimension (n-1)^2-1, alpha vs affine rank", problems)


def _direct_facet_count(a):
    # recompute every facet equality with plain loops
    n = a.n
    e = a.entries
    count = 0
    for i in range(2, n):
        for j in range(2, n):
            if sum(e[k][j - 1] for k in range(i - 1)) == 0:
                count += 1
            if sum(e[i - 1][k] for k in range(j - 1)) == 0:
                count += 1
            if sum(e[k][j - 1] for k in range(i, n)) == 0:
                count += 1
            if sum(e[i - 1][k] for k in range(j, n)) == 0:
                count += 1
    for i, j in ((1, 1), (1, n), (n, 1), (n, n)):
        if e[i - 1][j - 1] == 0:
            count += 1
    return count


def test_criterion_06_facet_incidence():
    problems = []
    for n in (3, 4):
        for a in enumerate_asms(n):
            corners = sum(
                1 for i, j in ((1, 1), (1, n), (n, 1), (n, n)) if a.entry(i, j) == 1
            )
            expected = 2 * (n - 1) * (n - 2) + corners
            got = len(facets_containing(a))
            if got != expected:
                _note(problems, f"n={n}: incidence {got} != {expected}")
            if got != _direct_facet_count(a):
                _note(problems, f"n={n}: incidence disagrees with direct evaluation")
    _report(6, "facet incidence is 2(n-1)(n-2) plus corner ones for n in {3,4}", problems)


def test_criterion_07_separating_hyperplanes():
    problems = []
    for n in range(1, 5):
        pool = enumerate_asms(n)
        bound = 2 * n * (n + 1)
        for a in pool:
            h = separating_hyperplane(a)
            if h.evaluate(a) != bound:
                _note(problems, f"n={n}: value at the defining ASM is {h.evaluate(a)}")
            for b in pool:
                if b != a and h.evaluate(b) > bound - 1:
                    _note(problems, f"n={n}: non-defining ASM reaches {h.evaluate(b)}")
    _report(7, "hyperplane value 2n(n+1) at the ASM, at most 2n(n+1)-1 elsewhere", problems)


def test_criterion_08_bijection_round_trips():
    problems = []
    for n in range(1, 5):
        pool = enumerate_asms(n)
        grids = set()
        for a in pool:
            g = asm_to_grid(a)
            grids.add(g)
            if g.edge_count != 2 * n * (n + 1):
                _note(problems, f"n={n}: grid has {g.edge_count} edges")
            if grid_to_asm(g) != a:
                _note(problems, f"n={n}: matrix round trip differs")
        if len(grids) != len(pool):
            _note(problems, f"n={n}: grids are not distinct")
        for g in grids:
            if asm_to_grid(grid_to_asm(g)) != g:
                _note(problems, f"n={n}: grid round trip differs")
    _report(8, "both bijection round trips are identities with 2n(n+1) edges", problems)


def test_criterion_09_region_counts_are_dimensions():
    problems = []
    for n in range(2, 7):
        alpha = doubly_directed_regions(complete_flow_grid(n))
        if alpha != (n - 1) ** 2:
            _note(problems, f"alpha(C_{n}) = {alpha}")
    for n in (3, 4):
        for face in enumerate_faces(n).faces:
            if not face.vertex_set:
                continue
            if face.dimension != affine_rank(face.vertex_set):
                _note(problems, f"n={n}: face alpha {face.dimension} != affine rank")
    lattice = enumerate_faces(3)
    for a, b in lattice.covering_pairs():
        if lattice.faces[b].dimension != lattice.faces[a].dimension + 1:
            _note(problems, f"cover {a}->{b} changes alpha by more than 1")
    _report(9, "alpha matches (n-1)^2, affine ranks, and unit cover steps", problems)


def test_criterion_10_edge_fixture(adjacent_vertices):
    problems = []
    a, b = adjacent_vertices
    union = FlowGrid(5, asm_to_grid(a).edges | asm_to_grid(b).edges)
    alpha = doubly_directed_regions(union)
    if alpha != 1:
        _note(problems, f"alpha of the union grid is {alpha}")
    face = face_closure((a, b))
    if set(face.vertex_set) != {a, b}:
        _note(problems, f"closure has {len(face.vertex_set)} vertices")
    _report(10, "the 5x5 vertex pair spans an edge", problems)


def test_criterion_11_face_lattice():
    problems = []
    lattice = enumerate_faces(3)
    fv = lattice.f_vector()
    euler = sum((-1 if dim % 2 else 1) * count for dim, count in fv.items())
    if euler != 0:
        _note(problems, f"Euler sum is {euler}")
    if fv.get(0) != 7:
        _note(problems, f"f0 = {fv.get(0)}")
    if fv.get(3) != 8:
        _note(problems, f"facet rank has {fv.get(3)} faces")
    faces = lattice.faces
    for f in faces:
        if join(f, f) != f or meet(f, f) != f:
            _note(problems, "idempotence fails")
            break
    for f in faces:
        for g in faces:
            if join(f, g) != join(g, f) or meet(f, g) != meet(g, f):
                _note(problems, "commutativity fails")
            if join(f, meet(f, g)) != f or meet(f, join(f, g)) != f:
                _note(problems, "absorption fails")
    _report(11, "order-3 lattice satisfies Euler, f0=7, 8 facets, lattice laws", problems)


def test_criterion_12_projection():
    problems = []
    rng = Random(SEED + 2)
    for n in range(1, 6):
        pool = enumerate_asms(n)
        perm_matrices = [a for a in pool if a.is_permutation]
        for k in range(100):
            z = WeightVector(random_decreasing_vector(rng, n))
            if not z.decreasing:
                _note(problems, f"n={n} sample {k}: z not decreasing")
                continue
            targets = {tuple(p) for p in permutations(z.entries)}
            attained = set()
            for a in pool:
                p = project(z, a)
                if not majorizes(p, z.entries):
                    _note(problems, f"n={n} sample {k}: projection not majorized")
                if p in targets:
                    if not a.is_permutation:
                        _note(problems, f"n={n} sample {k}: non-permutation hits a permutation of z")
                    attained.add(p)
            if attained != targets:
                _note(problems, f"n={n} sample {k}: permutations of z not all attained")
            if len({project(z, a) for a in perm_matrices}) != len(perm_matrices):
                _note(problems, f"n={n} sample {k}: permutation images collide")
    _report(12, "projections majorized by z; permutations attained exactly by permutations", problems)


def test_criterion_13_cli_determinism(tmp_path, member5, adjacent_vertices, identity3, central3):
    problems = []
    files = {}

    def put(name, text):
        path = tmp_path / name
        path.write_text(text + "\n")
        files[name] = str(path)

    put("member.mat", format_matrix(member5))
    put("ident.mat", format_matrix(identity3))
    put("central.mat", format_matrix(central3))
    put("edge_a.mat", format_matrix(adjacent_vertices[0]))
    put("edge_b.mat", format_matrix(adjacent_vertices[1]))
    put("grid.grid", format_grid(asm_to_grid(central3)))
    put("full3.grid", format_grid(complete_flow_grid(3)))
    put("z.vec", "3 2 1")
    put("u.vec", "2 2 2")
    put("v.vec", "3 2 1")
    put("combo.txt", format_decomposition(decompose(member5)))
    put("bad.mat", "2 -1/2 3/2 3/2 -1/2")

    commands = [
        ["count", "5"],
        ["enumerate", "3"],
        ["enumerate", "2", "--format", "grid"],
        ["validate", files["ident.mat"]],
        ["validate", files["bad.mat"]],
        ["membership", files["member.mat"]],
        ["membership", files["bad.mat"]],
        ["decompose", files["member.mat"], "--checksum"],
        ["recombine", files["combo.txt"]],
        ["to-grid", files["central.mat"]],
        ["from-grid", files["grid.grid"]],
        ["regions", files["full3.grid"]],
        ["facets", "3"],
        ["facets-of", files["ident.mat"]],
        ["face", files["ident.mat"], files["central.mat"]],
        ["face", files["ident.mat"], files["central.mat"], "--format", "grid"],
        ["is-edge", files["edge_a.mat"], files["edge_b.mat"]],
        ["is-edge", files["ident.mat"], files["central.mat"]],
        ["lattice", "3"],
        ["project", files["z.vec"], files["central.mat"]],
        ["majorizes", files["u.vec"], files["v.vec"]],
    ]
    for argv in commands:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "asmpoly.cli", *argv],
                capture_output=True,
                cwd=str(tmp_path),
            )
            for _ in range(2)
        ]
        a, b = runs
        if (a.returncode, a.stdout, a.stderr) != (b.returncode, b.stdout, b.stderr):
            _note(problems, f"{argv[0]}: runs differ")
        if a.returncode not in (0, 1):
            _note(problems, f"{argv[0]}: unexpected exit code {a.returncode}")
    _report(13, "every CLI subcommand is byte-identical across two runs", problems)
