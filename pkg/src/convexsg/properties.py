"""Seeded property suites over random polyhedra.

Each suite returns ``(cases, violations)`` where a violation is a short JSON-able
description of the failing input. Runs are deterministic for a given seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import mrh as M
from . import polyhedra as P
from .kernel.rational import fmt
from .sampling import DIAGONAL_WEDGE, QUADRANT, random_box, random_in_cv, random_pointed_cone, random_polyhedron


def _desc(A) -> dict:
    if A is None:
        return {"empty": True}
    return {
        "dim": A.dim,
        "vertices": [[fmt(a) for a in v] for v in A.vertices],
        "rays": [[fmt(a) for a in r] for r in A.rays],
    }


def grid_erosion_oracle(A, B, x) -> bool:
    """x + B ⊆ A, checked vertex by vertex and ray by ray against A."""
    if not all(P.contains_point(A, tuple(a + b for a, b in zip(x, v))) for v in B.vertices):
        return False
    return all(P.contains_point(P.recession_cone(A), r) for r in B.rays)


def suite_erosion_grid(rng, n):
    bad = []
    grid = [(Fraction(k, 2), Fraction(l, 2)) for k in range(-2, 18) for l in range(-2, 18)]
    for _ in range(n):
        A, B = random_box(rng, 0, 4), random_box(rng, 0, 2)
        E = P.erode(A, B)
        for x in grid:
            got = E is not None and P.contains_point(E, x)
            if got != grid_erosion_oracle(A, B, x):
                bad.append({"A": _desc(A), "B": _desc(B), "x": [fmt(a) for a in x]})
                break
    return n, bad


def suite_recession_identity(rng, n):
    bad = []
    for _ in range(n):
        A = random_polyhedron(rng, rng.randint(2, 4))
        if P.erode(A, A) != P.recession_cone(A):
            bad.append({"A": _desc(A)})
    return n, bad


def suite_erosion_adjoint(rng, n):
    bad = []
    for _ in range(n):
        dim = rng.randint(2, 3)
        A, B = random_polyhedron(rng, dim), random_polyhedron(rng, dim, max_rays=1)
        E = P.erode(A, B)
        if E is not None and not P.subset(E + B, A):
            bad.append({"A": _desc(A), "B": _desc(B)})
    return n, bad


def suite_sum_laws(rng, n):
    bad = []
    for _ in range(n):
        dim = rng.randint(2, 3)
        A, B, C = (random_polyhedron(rng, dim, max_vertices=4, max_rays=2) for _ in range(3))
        zero = P.cone([], dim)
        lam = Fraction(rng.randint(1, 8), 2 ** rng.randint(0, 3))
        ok = (
            A + B == B + A
            and (A + B) + C == A + (B + C)
            and A + zero == A
            and P.scale(lam, A + B, zero) == P.scale(lam, A, zero) + P.scale(lam, B, zero)
            and P.recession_cone(A + B) == P.recession_cone(A) + P.recession_cone(B)
        )
        if not ok:
            bad.append({"A": _desc(A), "B": _desc(B), "C": _desc(C)})
    return n, bad


def suite_cancellation(rng, n):
    bad = []
    for _ in range(n):
        dim = rng.randint(2, 3)
        K = random_pointed_cone(rng, dim)
        C = random_polyhedron(rng, dim, rays=K.rays, max_vertices=4)
        B = random_polyhedron(rng, dim, rays=[r for r in K.rays if rng.random() < 0.6], max_vertices=4)
        A = random_polyhedron(rng, dim, rays=[r for r in K.rays if rng.random() < 0.5], max_vertices=3)
        rep = P.order_cancel(A, B, C)
        if rep.violated:
            bad.append({"A": _desc(A), "B": _desc(B), "C": _desc(C)})
    return n, bad


def suite_gap_metric(rng, n):
    bad = []
    for _ in range(n):
        V = P.cone(QUADRANT)
        A, B, C = (random_in_cv(rng, V) for _ in range(3))
        ab, ba = P.hausdorff_gap(A, B), P.hausdorff_gap(B, A)
        ok = ab == ba and (ab == 0) == (A == B) and P.hausdorff_gap(A, C) <= ab + P.hausdorff_gap(B, C)
        if not ok:
            bad.append({"A": _desc(A), "B": _desc(B), "C": _desc(C)})
    return n, bad


def suite_mrh_laws(rng, n):
    bad = []
    for i in range(n):
        V = P.cone(QUADRANT if i % 2 == 0 else DIAGONAL_WEDGE)
        x = M.mrh_make(random_in_cv(rng, V, 3), random_in_cv(rng, V, 3), V)
        y = M.mrh_make(random_in_cv(rng, V, 3), random_in_cv(rng, V, 3), V)
        lam = Fraction(rng.randint(-4, 4), 2 ** rng.randint(0, 2))
        zero = M.zero_class(V)
        eqv = M.mrh_equivalent
        ok = (
            eqv(x + y, y + x)
            and eqv(x + zero, x)
            and eqv(x + (-x), zero)
            and eqv(lam * (x + y), lam * x + lam * y)
            and eqv(M.mrh_scale(1, x), x)
        )
        if not ok:
            bad.append({"pos": _desc(x.pos), "neg": _desc(x.neg), "lambda": fmt(lam)})
    return n, bad


SUITES: dict[str, Callable] = {
    "erosion_grid": suite_erosion_grid,
    "recession_identity": suite_recession_identity,
    "erosion_adjoint": suite_erosion_adjoint,
    "sum_laws": suite_sum_laws,
    "cancellation": suite_cancellation,
    "gap_metric": suite_gap_metric,
    "mrh_laws": suite_mrh_laws,
}


def run_suites(seed: int, cases: int = 20, names=None) -> dict:
    """Run suites with independent, seed-derived streams; returns a JSON-able dict."""
    out = {}
    for name in names or SUITES:
        rng = random.Random(f"{seed}:{name}")
        n, bad = SUITES[name](rng, cases)
        out[name] = {"cases": n, "violations": len(bad), "examples": bad[:3]}
    return out
