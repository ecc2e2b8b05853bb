"""Closed convex polyhedra under Minkowski addition.

A :class:`Polyhedron` is stored by generators in canonical form, so ``==`` is
set equality. Sums of finitely generated sets are already closed, hence the
closed sum ``cl(A + B)`` and the plain algebraic sum coincide here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .kernel.dd import hrep_to_vrep, vrep_to_hrep
from .kernel.generators import in_cone, in_generated_set, remove_redundant_generators
from .kernel.lp import EQ, LinearConstraint, solve_standard
from .kernel.rational import InputError, dot, q, vec, zeros

INF = math.inf
Extended = Union[Fraction, float]  # a Fraction, or INF


@dataclass(frozen=True)
class Polyhedron:
    """conv(vertices) + cone(rays), nonempty, in canonical form.

    Build instances with :func:`make_polyhedron`; the raw constructor trusts its
    arguments.
    """

    dim: int
    vertices: tuple
    rays: tuple = ()

    def __add__(self, other: "Polyhedron") -> "Polyhedron":
        return minkowski_sum(self, other)

    def __contains__(self, x) -> bool:
        return contains_point(self, x)

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    @property
    def is_cone(self) -> bool:
        return len(self.vertices) == 1 and all(a == 0 for a in self.vertices[0])

    def __repr__(self) -> str:
        def show(p):
            return "(" + ",".join(str(a) for a in p) + ")"

        vs = " ".join(show(v) for v in self.vertices)
        rs = " ".join(show(r) for r in self.rays)
        return f"Polyhedron(dim={self.dim}, vertices=[{vs}], rays=[{rs}])"


def make_polyhedron(vertices: Sequence, rays: Sequence = (), dim: Optional[int] = None) -> Polyhedron:
    vertices = [vec(v) for v in vertices]
    if not vertices:
        raise InputError("a polyhedron needs at least one vertex")
    if dim is None:
        dim = len(vertices[0])
    verts, rs = remove_redundant_generators(vertices, [vec(r) for r in rays], dim)
    return Polyhedron(dim, tuple(verts), tuple(rs))


def point(*coords) -> Polyhedron:
    return make_polyhedron([coords])


def cone(rays: Sequence, dim: Optional[int] = None) -> Polyhedron:
    rays = [vec(r) for r in rays]
    if dim is None:
        if not rays:
            raise InputError("dimension needed for the trivial cone")
        dim = len(rays[0])
    return make_polyhedron([zeros(dim)], rays, dim)


def box(dim: int, radius=1) -> Polyhedron:
    """The l-infinity ball ``radius·[-1, 1]^dim``."""
    r = q(radius)
    corners = [()]
    for _ in range(dim):
        corners = [c + (s,) for c in corners for s in (-r, r)]
    return make_polyhedron(corners, (), dim)


def _same_dim(*sets: Polyhedron) -> int:
    dims = {s.dim for s in sets}
    if len(dims) != 1:
        raise InputError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def minkowski_sum(A: Polyhedron, B: Polyhedron) -> Polyhedron:
    dim = _same_dim(A, B)
    verts = [tuple(a + b for a, b in zip(u, v)) for u in A.vertices for v in B.vertices]
    return make_polyhedron(verts, list(A.rays) + list(B.rays), dim)


def scale(lam, A: Polyhedron, zero_value: Polyhedron) -> Polyhedron:
    """``lam·A`` for ``lam > 0``; ``zero_value`` (a cone) for ``lam == 0``."""
    lam = q(lam)
    if lam < 0:
        raise InputError("negative scaling is only defined on MRH classes")
    if lam == 0:
        if not zero_value.is_cone:
            raise InputError("zero_value must be a cone")
        _same_dim(A, zero_value)
        return zero_value
    return Polyhedron(A.dim, tuple(tuple(lam * a for a in v) for v in A.vertices), A.rays)


def support_function(A: Polyhedron, direction: Sequence) -> Extended:
    d = vec(direction)
    if len(d) != A.dim:
        raise InputError(f"direction has length {len(d)}, expected {A.dim}")
    if any(dot(d, r) > 0 for r in A.rays):
        return INF
    return max(dot(d, v) for v in A.vertices)


def contains_point(A: Polyhedron, x: Sequence) -> bool:
    x = vec(x)
    if len(x) != A.dim:
        raise InputError(f"point has length {len(x)}, expected {A.dim}")
    return in_generated_set(x, A.vertices, A.rays)


def recession_cone(A: Polyhedron) -> Polyhedron:
    return Polyhedron(A.dim, (zeros(A.dim),), A.rays)


def subset(A: Polyhedron, B: Polyhedron) -> bool:
    _same_dim(A, B)
    if not all(in_cone(r, B.rays) for r in A.rays):
        return False
    return all(in_generated_set(v, B.vertices, B.rays) for v in A.vertices)


def hrep(A: Polyhedron) -> list[LinearConstraint]:
    return vrep_to_hrep(A.vertices, A.rays, A.dim)


def erode(A: Polyhedron, B: Polyhedron) -> Optional[Polyhedron]:
    """Minkowski difference ``{x : x + B ⊆ A}``; None stands for the empty set.

    Each halfspace ``a·x <= b`` of A becomes ``a·x <= b - h_B(a)``: the
    intersection of the translates ``A - b`` over ``b`` in ``B``.
    """
    dim = _same_dim(A, B)
    shifted = []
    for con in hrep(A):
        rows = [con.coefficients]
        bounds = [con.bound]
        if con.sense == EQ:
            rows.append(tuple(-a for a in con.coefficients))
            bounds.append(-con.bound)
        for a, b in zip(rows, bounds):
            h = support_function(B, a)
            if h == INF:
                return None
            shifted.append(LinearConstraint(a, b - h))
    gens = hrep_to_vrep(shifted, dim)
    if gens is None:
        return None
    return make_polyhedron(gens[0], gens[1], dim)


def is_pointed(K: Polyhedron) -> bool:
    """K ∩ (-K) = {0}, decided by one cone-membership LP per generator."""
    if not K.is_cone:
        raise InputError("is_pointed expects a cone")
    return not any(in_cone(tuple(-a for a in r), K.rays) for r in K.rays)


@dataclass(frozen=True)
class NarrownessReport:
    is_narrow: bool
    direction_generators: tuple
    cone_matches_recession: bool


def narrowness_report(A: Polyhedron) -> NarrownessReport:
    """Every polyhedron is narrow in finite dimension (the unit sphere is compact).

    The limiting directions of diverging sequences generate the recession
    cone; its extreme rays (plus ``±`` lineality pairs) are reported.
    """
    gens = recession_cone(A).rays
    matches = make_polyhedron([zeros(A.dim)], gens, A.dim) == recession_cone(A)
    return NarrownessReport(True, gens, matches)


def distance_inf(x: Sequence, A: Polyhedron) -> Fraction:
    """l-infinity distance from a point to A, by one LP."""
    x = vec(x)
    d = A.dim
    nv, nr = len(A.vertices), len(A.rays)
    cols = list(A.vertices) + list(A.rays)
    n = nv + nr + 1 + 2 * d  # weights, t, slacks
    rows, rhs = [], []
    for i in range(d):
        base = [c[i] for c in cols]
        up = base + [-1] + [1 if k == i else 0 for k in range(d)] + [0] * d
        lo = base + [1] + [0] * d + [-1 if k == i else 0 for k in range(d)]
        rows += [up, lo]
        rhs += [x[i], x[i]]
    rows.append([1] * nv + [0] * (n - nv))
    rhs.append(1)
    cost = [0] * (nv + nr) + [-1] + [0] * (2 * d)
    out = solve_standard(rows, rhs, cost)
    return -out.objective_value


def hausdorff_gap(A: Polyhedron, B: Polyhedron) -> Extended:
    """Least r with A ⊆ B + r·Box and B ⊆ A + r·Box (INF if none exists)."""
    _same_dim(A, B)
    if A.rays != B.rays:
        return INF
    gap = Fraction(0)
    for src, dst in ((A, B), (B, A)):
        for v in src.vertices:
            gap = max(gap, distance_inf(v, dst))
    return gap


@dataclass(frozen=True)
class CancelReport:
    premise: bool
    conclusion: bool
    hypothesis: bool

    @property
    def violated(self) -> bool:
        """True for a would-be counterexample to the cancellation theorem."""
        return self.hypothesis and self.premise and not self.conclusion


def order_cancel(A: Polyhedron, B: Polyhedron, C: Polyhedron) -> CancelReport:
    """Check ``A + B ⊆ B + C  ⟹  A ⊆ C``.

    ``hypothesis`` is set when recc B ⊆ recc C and recc C is pointed, the case
    in which the implication is a theorem.
    """
    _same_dim(A, B, C)
    premise = subset(A + B, B + C)
    conclusion = subset(A, C)
    rc = recession_cone(C)
    hypothesis = subset(recession_cone(B), rc) and is_pointed(rc)
    return CancelReport(premise, conclusion, hypothesis)
