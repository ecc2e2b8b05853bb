"""The family C_V and its Minkowski-Rådström-Hörmander quotient.

For polyhedra, a set is at bounded gap from the cone V exactly when its
recession cone is V. A class ``[A, B]`` is stored as the representative pair;
no normal form is computed, so equality is always the relation
``(A, B) ~ (C, D)  <=>  A + D = B + C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import polyhedra as P
from .kernel.rational import InputError, q
from .polyhedra import INF, Polyhedron
from .semigroup import DEFAULT_SCHEDULE, DEFAULT_TOL


def _require_cone(V: Polyhedron) -> None:
    if not V.is_cone:
        raise InputError("V must be a cone (single vertex at the origin)")


def in_CV(A: Polyhedron, V: Polyhedron) -> bool:
    _require_cone(V)
    if A.dim != V.dim:
        raise InputError(f"dimension mismatch: {A.dim} vs {V.dim}")
    return P.recession_cone(A) == V


def cv_witness(A: Polyhedron) -> Polyhedron:
    """Bounded B with A ⊆ V + B and V ⊆ A + B, where V = recc A."""
    pts = list(A.vertices) + [tuple(-a for a in v) for v in A.vertices] + [tuple([Fraction(0)] * A.dim)]
    return P.make_polyhedron(pts, (), A.dim)


def _require_member(A: Polyhedron, V: Polyhedron, label: str) -> None:
    if not in_CV(A, V):
        raise InputError(f"{label} is not in C_V: its recession cone differs from V")


@dataclass(frozen=True)
class MrhClass:
    """Class of the pair ``(pos, neg)``, read as the formal difference pos - neg."""

    cone: Polyhedron
    pos: Polyhedron
    neg: Polyhedron

    def __add__(self, other: "MrhClass") -> "MrhClass":
        return mrh_add(self, other)

    def __rmul__(self, lam) -> "MrhClass":
        return mrh_scale(lam, self)

    def __neg__(self) -> "MrhClass":
        return mrh_scale(-1, self)


def mrh_make(A: Polyhedron, B: Polyhedron, V: Polyhedron) -> MrhClass:
    _require_member(A, V, "first set")
    _require_member(B, V, "second set")
    return MrhClass(V, A, B)


def zero_class(V: Polyhedron) -> MrhClass:
    _require_cone(V)
    return MrhClass(V, V, V)


def _same_cone(x: MrhClass, y: MrhClass) -> None:
    if x.cone != y.cone:
        raise InputError("classes live over different cones")


def mrh_equivalent(x: MrhClass, y: MrhClass) -> bool:
    _same_cone(x, y)
    return x.pos + y.neg == x.neg + y.pos


def mrh_add(x: MrhClass, y: MrhClass) -> MrhClass:
    _same_cone(x, y)
    return MrhClass(x.cone, x.pos + y.pos, x.neg + y.neg)


def mrh_scale(lam, x: MrhClass) -> MrhClass:
    lam = q(lam)
    V = x.cone
    if lam >= 0:
        return MrhClass(V, P.scale(lam, x.pos, V), P.scale(lam, x.neg, V))
    return MrhClass(V, P.scale(-lam, x.neg, V), P.scale(-lam, x.pos, V))


def embed_j(A: Polyhedron, V: Polyhedron) -> MrhClass:
    _require_member(A, V, "set")
    return MrhClass(V, A, V)


@dataclass(frozen=True)
class CvCancelReport:
    premise: bool
    conclusion: bool
    halving_gaps: tuple
    halving_converged: bool


def cancel_in_CV(A: Polyhedron, B: Polyhedron, C: Polyhedron, V: Polyhedron, schedule=DEFAULT_SCHEDULE) -> CvCancelReport:
    """``A + B ⊆ B + C  ⟹  A ⊆ C`` inside C_V, with evidence that 2^-n B → V."""
    for S, label in ((A, "A"), (B, "B"), (C, "C")):
        _require_member(S, V, label)
    lim = powers_of_half_limit(B, V, schedule)
    return CvCancelReport(
        premise=P.subset(A + B, B + C),
        conclusion=P.subset(A, C),
        halving_gaps=lim.gaps,
        halving_converged=lim.converged,
    )


@dataclass(frozen=True)
class HalvingReport:
    schedule: tuple
    gaps: tuple
    converged: bool


def powers_of_half_limit(A: Polyhedron, V: Polyhedron, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL) -> HalvingReport:
    """Gaps between ``2^-n A`` and V along the schedule."""
    _require_member(A, V, "set")
    gaps = tuple(P.hausdorff_gap(P.scale(Fraction(1, 2**n), A, V), V) for n in schedule)
    g0 = P.hausdorff_gap(A, V)
    monotone = all(b <= a for a, b in zip(gaps, gaps[1:]))
    return HalvingReport(tuple(schedule), gaps, monotone and gaps[-1] <= tol * (g0 + 1))


def limit_check(sequence: Sequence[Polyhedron], candidate: Polyhedron, tol=DEFAULT_TOL) -> bool:
    """Every gap to the candidate is finite and the trailing half is within tol."""
    if not sequence:
        raise InputError("empty sequence")
    gaps = [P.hausdorff_gap(A, candidate) for A in sequence]
    if any(g == INF for g in gaps):
        return False
    return all(g <= tol for g in gaps[len(gaps) // 2 :])
