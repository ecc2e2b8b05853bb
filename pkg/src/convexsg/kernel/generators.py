"""LP membership tests and canonical generator sets."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .lp import INFEASIBLE, solve_standard
from .rational import InputError, is_zero, primitive, vec


def in_generated_set(x: Sequence, vertices: Sequence, rays: Sequence) -> bool:
    """Is ``x`` in conv(vertices) + cone(rays)?  (cone only when no vertices)."""
    x = tuple(x)
    if not rays and x in vertices:
        return True
    if not vertices and is_zero(x):
        return True
    cols = list(vertices) + list(rays)
    if not cols:
        return False
    dim = len(x)
    A = [[col[i] for col in cols] for i in range(dim)]
    b = list(x)
    if vertices:
        A.append([1] * len(vertices) + [0] * len(rays))
        b.append(1)
    return solve_standard(A, b, [0] * len(cols)).status != INFEASIBLE


def in_cone(x: Sequence, rays: Sequence) -> bool:
    return in_generated_set(x, (), rays)


def _rref(vectors: list[tuple]) -> list[tuple]:
    rows = [list(v) for v in vectors]
    out = []
    col = 0
    n = len(rows[0]) if rows else 0
    while rows and col < n:
        piv = next((r for r in rows if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        piv = [a / piv[col] for a in piv]
        rows = [[a - r[col] * b for a, b in zip(r, piv)] for r in rows]
        out = [[a - r[col] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        rows = [r for r in rows if any(a != 0 for a in r)]
        col += 1
    return [tuple(r) for r in out]


def _solve(M: list[list[Fraction]], y: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system by Gauss-Jordan elimination."""
    n = len(M)
    aug = [list(r) + [v] for r, v in zip(M, y)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [a / pv for a in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [r[-1] for r in aug]


def lineality_basis(rays: Sequence[tuple]) -> list[tuple]:
    """Canonical (RREF, primitive) basis of the largest subspace in cone(rays)."""
    rays = list(rays)
    inside = [r for r in rays if tuple(-a for a in r) in rays or in_cone(tuple(-a for a in r), rays)]
    if not inside:
        return []
    return [primitive(r) for r in _rref(inside)]


def project_out(points: Sequence[tuple], basis: Sequence[tuple]) -> list[tuple]:
    """Orthogonal projection of each point onto the complement of span(basis)."""
    if not basis:
        return [tuple(p) for p in points]
    gram = [[sum(a * b for a, b in zip(u, v)) for v in basis] for u in basis]
    out = []
    for p in points:
        rhs = [sum(a * b for a, b in zip(u, p)) for u in basis]
        coef = _solve(gram, rhs)
        out.append(tuple(pi - sum(c * u[i] for c, u in zip(coef, basis)) for i, pi in enumerate(p)))
    return out


def _normalize_rays(rays) -> list[tuple]:
    out = []
    for r in rays:
        r = primitive(r)
        if not is_zero(r) and r not in out:
            out.append(r)
    return out


def remove_redundant_generators(vertices: Sequence, rays: Sequence, dim: int) -> tuple[list[tuple], list[tuple]]:
    """Minimal, sorted generators of conv(vertices) + cone(rays).

    Rays are scaled to primitive integer vectors. A lineality space, if any,
    is returned as ``±`` pairs of its RREF basis and the remaining generators
    are projected onto its orthogonal complement, so the output is unique per
    set.
    """
    if not vertices:
        raise InputError("vertex list must be nonempty")
    vertices = [vec(v) for v in vertices]
    rays = [vec(r) for r in rays]
    for v in vertices + rays:
        if len(v) != dim:
            raise InputError(f"generator of length {len(v)} in dimension {dim}")

    rays = _normalize_rays(rays)
    lines = lineality_basis(rays)
    if lines:
        rays = _normalize_rays(project_out(rays, lines))
        vertices = project_out(vertices, lines)

    kept_rays = list(rays)
    for r in rays:
        others = [s for s in kept_rays if s != r]
        if others and in_cone(r, others):
            kept_rays = others

    points = []
    for v in vertices:
        if v not in points:
            points.append(v)
    kept = list(points)
    for v in points:
        if len(kept) == 1 and not kept_rays:
            break
        others = [w for w in kept if w != v]
        if others and in_generated_set(v, others, kept_rays):
            kept = others

    all_rays = kept_rays + list(lines) + [tuple(-a for a in l) for l in lines]
    return sorted(kept), sorted(all_rays)
