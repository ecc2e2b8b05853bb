"""Acceptance criteria 1-9.

Each test records a ``criterion N: PASS|FAIL`` line that is printed in the
pytest terminal summary (and immediately, when run with ``-s``). Running this
file directly executes all nine and prints the same lines.
"""

import itertools
import json
import random
import re
import subprocess
import sys
import time
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES

from convexsg import lab
from convexsg import mrh as M
from convexsg import polyhedra as P
from convexsg import semigroup as SG
from convexsg.sampling import DIAGONAL_WEDGE, QUADRANT, random_in_cv, random_point_of, random_pointed_cone, random_polyhedron

SEED = 20240229
CONES = {"quadrant": QUADRANT, "wedge": DIAGONAL_WEDGE}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)


def rng_for(n):
    return random.Random(f"{SEED}:criterion{n}")


# -- 1 ----------------------------------------------------------------------------


def _interval_box(lo, hi):
    (a0, b0), (a1, b1) = lo, hi
    return P.make_polyhedron([(a0, b0), (a1, b0), (a0, b1), (a1, b1)])


def test_criterion_1_erosion_matches_grid_oracle():
    rng = rng_for(1)
    grid = [(F(k, 2), F(l, 2)) for k in range(-12, 21) for l in range(-12, 21)]
    mismatches, nonempty = 0, 0
    start = time.perf_counter()
    for _ in range(100):
        alo = (rng.randint(-4, 4), rng.randint(-4, 4))
        ahi = tuple(a + rng.randint(0, 6) for a in alo)
        blo = (rng.randint(-2, 2), rng.randint(-2, 2))
        bhi = tuple(b + rng.randint(0, 4) for b in blo)
        A, B = _interval_box(alo, ahi), _interval_box(blo, bhi)
        E = P.erode(A, B)
        nonempty += E is not None
        for x in grid:
            # x + B ⊆ A, coordinatewise on the box corners
            fits = all(alo[i] <= x[i] + blo[i] and x[i] + bhi[i] <= ahi[i] for i in range(2))
            got = E is not None and P.contains_point(E, x)
            if got != fits:
                mismatches += 1
                break
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    record(1, ok, f"100 box pairs ({nonempty} nonempty), {mismatches} mismatches, {elapsed:.1f}s (< 60s)")
    assert ok


# -- 2 ----------------------------------------------------------------------------


def test_criterion_2_recession_identity():
    rng = rng_for(2)
    bad = 0
    for i in range(200):
        A = random_polyhedron(rng, 2 + i % 3)
        bad += P.recession_cone(A) != P.erode(A, A)
    record(2, bad == 0, f"200 polyhedra in dims 2-4, {bad} failures of recc A = A ⊖ A")
    assert bad == 0


# -- 3 ----------------------------------------------------------------------------


def _cancellation_triple(rng, i):
    dim = rng.randint(2, 3)
    K = random_pointed_cone(rng, dim)
    C = random_polyhedron(rng, dim, rays=K.rays, max_vertices=4)
    B = random_polyhedron(rng, dim, rays=[r for r in K.rays if rng.random() < 0.6], max_vertices=4)
    kind = i % 3
    if kind == 0:
        A = random_polyhedron(rng, dim, rays=[r for r in K.rays if rng.random() < 0.5], max_vertices=3)
    else:
        pts = [random_point_of(rng, C) for _ in range(rng.randint(1, 3))]
        if kind == 2:
            # push one point slightly off C along a random direction
            d = tuple(F(rng.randint(-2, 2), 4) for _ in range(dim))
            pts.append(tuple(a + b for a, b in zip(pts[0], d)))
        A = P.make_polyhedron(pts, [r for r in K.rays if rng.random() < 0.5], dim)
    return A, B, C


def test_criterion_3_cancellation():
    rng = rng_for(3)
    violations, premise_true, hypothesis_false = 0, 0, 0
    for i in range(200):
        A, B, C = _cancellation_triple(rng, i)
        rep = P.order_cancel(A, B, C)
        hypothesis_false += not rep.hypothesis
        premise_true += rep.premise
        violations += rep.premise and not rep.conclusion
    ok = violations == 0 and hypothesis_false == 0 and premise_true >= 50
    record(3, ok, f"200 triples, {premise_true} with premise, {violations} violations")
    assert ok


# -- 4 ----------------------------------------------------------------------------


def _order_triple(rng, V, i):
    b = random_in_cv(rng, V, 3)
    if i % 2 == 0:
        c = random_in_cv(rng, V, 4)
        a = P.make_polyhedron([random_point_of(rng, c) for _ in range(rng.randint(1, 3))], V.rays, 2)
    else:
        a = random_in_cv(rng, V, 3)
        d = P.make_polyhedron([(0, 0)] + [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(2)])
        c = a + d
    return a, b, c


def test_criterion_4_telescoping_certificates():
    rng = rng_for(4)
    schedule = (1, 2, 4, 8, 16)
    disagreements, failed_levels, n = 0, 0, 0
    while n < 50:
        V = P.cone(QUADRANT if n % 2 == 0 else DIAGONAL_WEDGE)
        S = SG.PolyhedralSemigroup(V)
        a, b, c = _order_triple(rng, V, n)
        cert = SG.cancel_order(S, a, b, c, schedule=schedule)
        if not cert.premise:
            continue
        n += 1
        failed_levels += not (cert.levels == schedule and all(cert.level_verdicts))
        disagreements += cert.concluded != cert.direct_leq
    ok = disagreements == 0 and failed_levels == 0
    record(4, ok, f"50 premise triples at k in {schedule}, {failed_levels} level failures, {disagreements} disagreements")
    assert ok


# -- 5 ----------------------------------------------------------------------------


def _laws(V):
    eqv = M.mrh_equivalent
    zero = M.zero_class(V)
    return {
        "commutative": lambda x, y, z, a, b: eqv(x + y, y + x),
        "associative": lambda x, y, z, a, b: eqv((x + y) + z, x + (y + z)),
        "zero": lambda x, y, z, a, b: eqv(x + zero, x),
        "inverse": lambda x, y, z, a, b: eqv(x + (-x), zero),
        "unit scalar": lambda x, y, z, a, b: eqv(1 * x, x),
        "scalar associative": lambda x, y, z, a, b: eqv(a * (b * x), (a * b) * x),
        "distributive over classes": lambda x, y, z, a, b: eqv(a * (x + y), a * x + a * y),
        "distributive over scalars": lambda x, y, z, a, b: eqv((a + b) * x, a * x + b * x),
    }


def _rational(rng):
    return F(rng.randint(-6, 6), rng.choice((1, 2, 3, 4)))


def test_criterion_5_mrh_vector_space():
    rng = rng_for(5)
    failures = {}
    cls = lambda V: M.mrh_make(random_in_cv(rng, V, 3), random_in_cv(rng, V, 3), V)  # noqa: E731
    for cname, rays in CONES.items():
        V = P.cone(rays)
        for law, check in _laws(V).items():
            for _ in range(100):
                if not check(cls(V), cls(V), cls(V), _rational(rng), _rational(rng)):
                    failures[f"{cname}/{law}"] = failures.get(f"{cname}/{law}", 0) + 1
        for _ in range(100):
            # replacing a representative by (A + D, B + D) leaves results unchanged
            A, B, D = (random_in_cv(rng, V, 3) for _ in range(3))
            x, x2, y = M.mrh_make(A, B, V), M.mrh_make(A + D, B + D, V), cls(V)
            lam = _rational(rng)
            if not (M.mrh_equivalent(x, x2) and M.mrh_equivalent(x + y, x2 + y) and M.mrh_equivalent(lam * x, lam * x2)):
                failures[f"{cname}/well-defined"] = failures.get(f"{cname}/well-defined", 0) + 1
        for _ in range(50):
            A, B = random_in_cv(rng, V, 3), random_in_cv(rng, V, 3)
            if not M.mrh_equivalent(M.embed_j(A + B, V), M.embed_j(A, V) + M.embed_j(B, V)):
                failures[f"{cname}/j"] = failures.get(f"{cname}/j", 0) + 1
    ok = not failures
    record(5, ok, f"8 laws + well-definedness x 100 per cone, j on 100 pairs, violations: {failures or 0}")
    assert ok


# -- 6 ----------------------------------------------------------------------------


def test_criterion_6_halving_limit():
    rng = rng_for(6)
    schedule = tuple(range(1, 12))
    bad = 0
    for i in range(50):
        V = P.cone(QUADRANT if i % 2 == 0 else DIAGONAL_WEDGE)
        A = random_in_cv(rng, V, 4)
        g0 = P.hausdorff_gap(A, V)
        rep = M.powers_of_half_limit(A, V, schedule=schedule)
        halving = rep.gaps[0] == g0 / 2 and all(b == a / 2 for a, b in zip(rep.gaps, rep.gaps[1:]))
        reached = rep.gaps[-1] <= F(1, 2**10) * (g0 + 1)
        bad += not (halving and reached and rep.converged)
    record(6, bad == 0, f"50 sets in C_V, schedule 1..11, {bad} without exact halving down to 2^-10(g0+1)")
    assert bad == 0


# -- 7 ----------------------------------------------------------------------------


def test_criterion_7_axiom_harness():
    failed = []
    instances = [("dyadic", None), ("finite-subsets", None), ("polyhedra", P.cone(QUADRANT)), ("polyhedra", P.cone(DIAGONAL_WEDGE))]
    for name, V in instances:
        S = SG.make_instance(name, V)
        report = SG.check_axioms(S, *SG.default_bank(S))
        failed += [f"{name}:{ax}" for ax, r in report.items() if not r.passed]
    broken = SG.make_instance("broken")
    s4 = SG.check_axioms(broken, *SG.default_bank(broken))["S4"]
    caught = not s4.passed and s4.witness is not None and SG.replay(broken, s4)
    ok = not failed and caught
    record(7, ok, f"11 axioms on dyadic, finite-subsets, polyhedra (2 cones): failures {failed or 'none'}; broken S4 witness {s4.witness}")
    assert ok


# -- 8 ----------------------------------------------------------------------------


def test_criterion_8_lab_values():
    start = time.perf_counter()
    wrong = []
    for N in (2, 3, 4, 8):
        rep = lab.verify_halfline_emergence(N)
        if not (rep.ok and rep.value("e0_reach") == 2 * N and rep.value("dist_e0_A") >= F(1, 3)):
            wrong.append(f"halfline N={N}")
    rep = lab.verify_nonclosedness_trend([2, 4, 8])
    if not (rep.ok and all(rep.value(f"d({N})") == F(2, N) for N in (2, 4, 8))):
        wrong.append("nonclosed")
    for N in (1, 2, 3):
        rep = lab.verify_cube_hull(N)
        if not (rep.ok and rep.value("max_all_ones") == 2 * N * N):
            wrong.append(f"cubes N={N}")
    elapsed = time.perf_counter() - start
    ok = not wrong and elapsed < 120
    record(8, ok, f"halfline N=2,3,4,8; nonclosed N=2,4,8; cubes N=1,2,3; wrong: {wrong or 'none'}; {elapsed:.1f}s (< 120s)")
    assert ok


# -- 9 ----------------------------------------------------------------------------

_TIMING = re.compile(r'"timing": \{[^}]*\}')


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "convexsg", *args, "--seed", str(SEED)], capture_output=True)
    return proc.returncode, _TIMING.sub('"timing": {}', proc.stdout.decode())


def test_criterion_9_determinism():
    runs = [
        ("props",),
        ("lab", "halfline", "--N", "4"),
        ("axioms", "finite-subsets"),
    ]
    diffs = []
    for args in runs:
        first, second = _cli(*args), _cli(*args)
        if first != second or first[0] != 0:
            diffs.append(" ".join(args))
    summary = json.loads(_cli("props")[1])["outputs"]["suites"]
    cases = sum(s["cases"] for s in summary.values())
    ok = not diffs
    record(9, ok, f"repeated runs byte-identical minus timing ({cases} property cases); differing: {diffs or 'none'}")
    assert ok


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
