"""Seeded random polyhedra for the property suites.

Integer coordinates in [-5, 5], 1-6 vertices and 0-3 rays keep every LP tiny
and every failure reproducible from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .polyhedra import Polyhedron, cone, make_polyhedron

DEFAULT_SEED = 20240229

QUADRANT = ((1, 0), (0, 1))
DIAGONAL_WEDGE = ((1, 1), (1, -1))


def random_point(rng: random.Random, dim: int, lo: int = -5, hi: int = 5) -> tuple:
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(dim))


def random_pointed_cone(rng: random.Random, dim: int, max_rays: int = 3) -> Polyhedron:
    """A random pointed cone: nonnegative combinations inside a random orthant."""
    signs = [rng.choice((-1, 1)) for _ in range(dim)]
    rays = []
    for _ in range(rng.randint(0, max_rays)):
        r = [s * rng.randint(0, 3) for s in signs]
        if any(r):
            rays.append(r)
    return cone(rays, dim)


def random_polyhedron(
    rng: random.Random,
    dim: int,
    rays: Optional[Sequence] = None,
    max_vertices: int = 6,
    max_rays: int = 3,
) -> Polyhedron:
    """Random polyhedron; ``rays`` fixes the recession cone when given."""
    verts = [random_point(rng, dim) for _ in range(rng.randint(1, max_vertices))]
    if rays is None:
        rays = []
        for _ in range(rng.randint(0, max_rays)):
            r = random_point(rng, dim, -3, 3)
            if any(r):
                rays.append(r)
    return make_polyhedron(verts, rays, dim)


def random_in_cv(rng: random.Random, V: Polyhedron, max_vertices: int = 4) -> Polyhedron:
    """Random member of C_V: a polytope plus the cone V."""
    return random_polyhedron(rng, V.dim, rays=V.rays, max_vertices=max_vertices)


def random_box(rng: random.Random, lo: int = 0, hi: int = 4) -> Polyhedron:
    """Random 2-d integer box [a, a+w] x [b, b+h]."""
    a, b = rng.randint(lo, hi), rng.randint(lo, hi)
    w, h = rng.randint(0, 4), rng.randint(0, 4)
    return make_polyhedron([(a, b), (a + w, b), (a, b + h), (a + w, b + h)], (), 2)


def random_point_of(rng: random.Random, A: Polyhedron) -> tuple:
    """A rational point of A: a random convex combination plus a random ray part."""
    weights = [Fraction(rng.randint(0, 4)) for _ in A.vertices]
    if not any(weights):
        weights[rng.randrange(len(weights))] = Fraction(1)
    total = sum(weights)
    x = [sum(w * v[i] for w, v in zip(weights, A.vertices)) / total for i in range(A.dim)]
    for r in A.rays:
        t = Fraction(rng.randint(0, 3))
        x = [a + t * b for a, b in zip(x, r)]
    return tuple(x)
