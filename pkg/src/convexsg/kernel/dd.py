"""V <-> H conversion through the double description method.

Both directions reduce to one primitive, :func:`cone_generators`, which takes a
homogeneous system ``G y >= 0`` and returns a lineality basis plus the extreme
rays of the cone it cuts out. Everything is integer arithmetic on primitive
vectors; adjacency uses the combinatorial zero-set test, which is exact because
the ray list is kept minimal after every step.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from .lp import EQ, LE, LinearConstraint
from .rational import InputError, integerize

MAX_DIM = 8
MAX_GENERATORS = 32


def _prim(v: list[int]) -> list[int]:
    g = 0
    for a in v:
        g = math.gcd(g, a)
    if g > 1:
        return [a // g for a in v]
    return v


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def cone_generators(rows: Sequence[Sequence[int]], n: int) -> tuple[list[list[int]], list[list[int]]]:
    """Generators of ``{y in R^n : row · y >= 0 for every row}``.

    Returns ``(lineality, rays)``: the cone equals ``span(lineality) + cone(rays)``
    and ``rays`` are extreme modulo the lineality space.
    """
    lin = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rays: list[list[int]] = []
    zsets: list[int] = []  # bitmask of processed rows tight at each ray
    seen = 0
    for idx, g in enumerate(rows):
        bit = 1 << idx
        pivot = next((k for k, l in enumerate(lin) if _dot(g, l) != 0), None)
        if pivot is not None:
            l = lin.pop(pivot)
            gl = _dot(g, l)
            if gl < 0:
                l = [-a for a in l]
                gl = -gl
            lin = [_prim([gl * a - _dot(g, m) * b for a, b in zip(m, l)]) for m in lin]
            new_rays = []
            for r in rays:
                gr = _dot(g, r)
                new_rays.append(_prim([gl * a - gr * b for a, b in zip(r, l)]) if gr else r)
            rays = new_rays + [l]
            zsets = [z | bit for z in zsets] + [seen]
            seen |= bit
            continue

        vals = [_dot(g, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        out_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        out_z = [zsets[i] for i in pos] + [zsets[i] | bit for i in zero]
        for p in pos:
            for m in neg:
                common = zsets[p] & zsets[m]
                if any(k != p and k != m and (zsets[k] & common) == common for k in range(len(rays))):
                    continue
                vp, vm = vals[p], -vals[m]
                new = _prim([vp * a + vm * b for a, b in zip(rays[m], rays[p])])
                out_rays.append(new)
                out_z.append(common | bit)
        rays, zsets = out_rays, out_z
        seen |= bit
    return lin, rays


def _check(points: Sequence[Sequence], dim: int, what: str) -> None:
    for p in points:
        if len(p) != dim:
            raise InputError(f"{what} {tuple(map(str, p))} has length {len(p)}, expected {dim}")


def vrep_to_hrep(vertices: Sequence[Sequence], rays: Sequence[Sequence], dim: int) -> list[LinearConstraint]:
    """Minimal inequality (and equality) description of conv(vertices) + cone(rays)."""
    if not vertices:
        raise InputError("vertex list must be nonempty")
    _check(vertices, dim, "vertex")
    _check(rays, dim, "ray")
    if dim > MAX_DIM or len(vertices) + len(rays) > MAX_GENERATORS:
        raise InputError(f"V->H conversion supports dim <= {MAX_DIM} and <= {MAX_GENERATORS} generators")
    # (y0, y) with y0 + y·v >= 0 for vertices, y·r >= 0 for rays
    grows = [integerize([1, *v]) for v in vertices] + [integerize([0, *r]) for r in rays]
    lin, ext = cone_generators(grows, dim + 1)
    out = []
    for y in lin:
        out.append(_constraint(y, EQ))
    for y in ext:
        if all(a == 0 for a in y[1:]):
            continue
        out.append(_constraint(y, LE))
    return sorted(out, key=lambda c: (c.sense, c.coefficients, c.bound))


def _constraint(y: list[int], sense: str) -> LinearConstraint:
    # y0 + y'·x >= 0   <=>   (-y')·x <= y0
    coeffs = [-a for a in y[1:]]
    bound = y[0]
    if sense == EQ:
        lead = next(a for a in coeffs if a != 0)
        if lead < 0:
            coeffs = [-a for a in coeffs]
            bound = -bound
    return LinearConstraint(tuple(Fraction(a) for a in coeffs), Fraction(bound), sense)


def hrep_to_vrep(constraints: Sequence[LinearConstraint], dim: int) -> Optional[tuple[list, list]]:
    """Generators ``(points, rays)`` of ``{x : constraints}``, or None when empty.

    Lineality directions come back as a pair ``r, -r`` of rays.
    """
    for c in constraints:
        if c.dim != dim:
            raise InputError(f"constraint has dimension {c.dim}, expected {dim}")
    grows = [[1] + [0] * dim]
    for c in constraints:
        ints = integerize([c.bound, *[-a for a in c.coefficients]])
        grows.append(ints)
        if c.sense == EQ:
            grows.append([-a for a in ints])
    lin, ext = cone_generators(grows, dim + 1)
    points, rays = [], []
    for y in ext:
        if y[0] > 0:
            points.append(tuple(Fraction(a, y[0]) for a in y[1:]))
        else:
            rays.append(tuple(Fraction(a) for a in y[1:]))
    for y in lin:
        rays.append(tuple(Fraction(a) for a in y[1:]))
        rays.append(tuple(Fraction(-a) for a in y[1:]))
    if not points:
        return None
    return points, rays
