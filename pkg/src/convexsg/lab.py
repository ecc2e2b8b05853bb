"""Finite truncations of infinite-dimensional counterexamples.

Coordinates are indexed from 0 and the norm is the coordinate maximum, so the
basis-projection constant is 1 and every estimate is one exact LP. At finite N
each construction is an ordinary polytope; what the reports record is the
trend in N (a growing reach along e0, a shrinking but positive distance).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from . import polyhedra as P
from .kernel.lp import OPTIMAL, solve_standard
from .kernel.rational import InputError, fmt
from .polyhedra import Polyhedron

MAX_N = 12
MAX_CUBES_N = 6


@dataclass(frozen=True)
class Fact:
    name: str
    relation: str
    verified: bool
    value: Fraction


@dataclass
class TruncationReport:
    experiment: str
    N: tuple
    facts: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(f.verified for f in self.facts)

    def add(self, name: str, relation: str, verified: bool, value) -> None:
        self.facts.append(Fact(name, relation, bool(verified), Fraction(value)))

    def value(self, name: str) -> Fraction:
        return next(f.value for f in self.facts if f.name == name)

    def to_json(self) -> dict:
        return {
            "experiment": self.experiment,
            "N": list(self.N),
            "facts": [dict(asdict(f), value=fmt(f.value)) for f in self.facts],
            "notes": list(self.notes),
            "all_verified": self.ok,
        }


def _unit(dim: int, i: int, t=1) -> tuple:
    return tuple(Fraction(t) if k == i else Fraction(0) for k in range(dim))


def _check_n(N: int, lo: int, hi: int) -> None:
    if not isinstance(N, int) or not lo <= N <= hi:
        raise InputError(f"N must be an integer in [{lo}, {hi}], got {N!r}")


def halfline_generators(N: int, sign: int = 1) -> list[tuple]:
    dim = N + 1
    return [tuple(Fraction(n) if i == 0 else Fraction(sign * 2**n * n) if i == n else Fraction(0) for i in range(dim)) for n in range(N + 1)]


def build_halfline_pair(N: int) -> tuple[Polyhedron, Polyhedron]:
    """``conv{n e0 ± 2^n n e_n : 0 <= n <= N}`` in dimension N + 1."""
    _check_n(N, 1, MAX_N)
    return (
        P.make_polyhedron(halfline_generators(N, 1), (), N + 1),
        P.make_polyhedron(halfline_generators(N, -1), (), N + 1),
    )


def max_reach(direction: Sequence, A: Polyhedron, B: Polyhedron) -> Fraction:
    """max t with t·direction in A + B, by an LP over both weight vectors."""
    cols = list(A.vertices) + list(B.vertices)
    na, nb = len(A.vertices), len(B.vertices)
    rows = [[c[i] for c in cols] + [-direction[i]] for i in range(A.dim)]
    rows.append([1] * na + [0] * nb + [0])
    rows.append([0] * na + [1] * nb + [0])
    rhs = [0] * A.dim + [1, 1]
    out = solve_standard(rows, rhs, [0] * (na + nb) + [1])
    if out.status != OPTIMAL:
        raise ArithmeticError(f"reach LP ended {out.status}")
    return out.objective_value


def verify_halfline_emergence(N: int) -> TruncationReport:
    _check_n(N, 2, MAX_N)
    A, B = build_halfline_pair(N)
    dim = N + 1
    rep = TruncationReport("halfline", (N,))
    reach = max_reach(_unit(dim, 0), A, B)
    rep.add("e0_reach", "max{t : t e0 in A_N + B_N} = 2N", reach == 2 * N, reach)
    S = A + B
    seg_in = P.contains_point(S, _unit(dim, 0, 0)) and P.contains_point(S, _unit(dim, 0, 2 * N))
    rep.add("segment_in_sum", "[0, 2N] e0 ⊆ A_N + B_N", seg_in, 2 * N)
    d = P.distance_inf(_unit(dim, 0), A)
    rep.add("dist_e0_A", "dist_inf(e0, A_N) >= 1/3", d >= Fraction(1, 3), d)
    rep.add("recc_sum_trivial", "recc(A_N + B_N) = {0}", P.recession_cone(S) == P.cone([], dim), len(S.rays))
    rep.add("recc_A_trivial", "recc A_N = recc B_N = {0}", A.is_bounded and B.is_bounded, 0)
    rep.notes.append("the e0-reach grows linearly in N; the half-line appears only in the limit")
    return rep


def build_nonclosed_pair(N: int) -> tuple[Polyhedron, Polyhedron]:
    """``conv{e0/n ± a_n e_n : 1 <= n <= N}`` with ``a_n = 2^n + 1``."""
    _check_n(N, 2, MAX_N)
    dim = N + 1

    def gen(n, sign):
        a = 2**n + 1
        return tuple(Fraction(1, n) if i == 0 else Fraction(sign * a) if i == n else Fraction(0) for i in range(dim))

    return (
        P.make_polyhedron([gen(n, 1) for n in range(1, N + 1)], (), dim),
        P.make_polyhedron([gen(n, -1) for n in range(1, N + 1)], (), dim),
    )


def verify_nonclosedness_trend(N_list: Sequence[int]) -> TruncationReport:
    if not N_list:
        raise InputError("empty N list")
    for N in N_list:
        _check_n(N, 2, MAX_N)
    rep = TruncationReport("nonclosed", tuple(N_list))
    rep.notes.append("index runs n = 1..N; the term e0/n is undefined at n = 0")
    previous = None
    for N in N_list:
        A, B = build_nonclosed_pair(N)
        d = P.distance_inf(_unit(N + 1, 0, 0), A + B)
        rep.add(f"d({N})", f"dist_inf(0, A_{N} + B_{N}) = 2/{N}", d == Fraction(2, N), d)
        rep.add(f"d({N})>0", "origin not in the sum", d > 0, d)
        if previous is not None and N > previous[0]:
            rep.add(f"d({N})<d({previous[0]})", "distance decreases with N", d < previous[1], d)
        previous = (N, d)
    return rep


def cube_hull_points(N: int) -> list[tuple]:
    """Corners of the cubes [n, 2n]^n, n = 1..N, padded with zeros to length N."""
    pts = []
    for n in range(1, N + 1):
        corners = [()]
        for _ in range(n):
            corners = [c + (Fraction(s),) for c in corners for s in (n, 2 * n)]
        pts += [c + (Fraction(0),) * (N - n) for c in corners]
    return pts


def build_growing_cube_hull(N: int) -> Polyhedron:
    _check_n(N, 1, MAX_CUBES_N)
    return P.make_polyhedron(cube_hull_points(N), (), N)


def verify_cube_hull(N: int) -> TruncationReport:
    A = build_growing_cube_hull(N)
    pts = cube_hull_points(N)
    rep = TruncationReport("cubes", (N,))
    # max of the all-ones functional over conv(pts), as an LP in the weights
    rows = [[1] * len(pts)]
    out = solve_standard(rows, [1], [sum(p) for p in pts])
    value = out.objective_value
    rep.add("max_all_ones", "max sum(x) over A_N = 2N·N", value == 2 * N * N, value)
    rep.add("support_agrees", "support function matches the LP", P.support_function(A, [1] * N) == value, value)
    rep.add("recc_trivial", "recc A_N = {0}", A.is_bounded, 0)
    rep.notes.append("the all-ones functional is unbounded on the full union as N grows")
    return rep


def run_experiment(name: str, N: int) -> TruncationReport:
    if name == "halfline":
        return verify_halfline_emergence(N)
    if name == "nonclosed":
        return verify_nonclosedness_trend([N])
    if name == "cubes":
        return verify_cube_hull(N)
    raise InputError(f"unknown experiment {name!r}")
