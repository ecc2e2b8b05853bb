"""Exact two-phase simplex over the rationals.

The tableau is kept fraction-free: every entry is an integer and the true
tableau is ``T / D`` where ``D`` is the last pivot (Edmonds' integer-preserving
pivoting). Exact division is guaranteed by Sylvester's identity, so no gcd work
happens inside the pivot loop. Bland's rule picks both the entering and the
leaving variable, which makes the method deterministic and cycle-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .rational import InputError, integerize, q, vec

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"

LE = "<="
EQ = "="


@dataclass(frozen=True)
class LinearConstraint:
    """``coefficients · x  (<= | =)  bound``."""

    coefficients: tuple
    bound: Fraction
    sense: str = LE

    def __post_init__(self):
        object.__setattr__(self, "coefficients", vec(self.coefficients))
        object.__setattr__(self, "bound", q(self.bound))
        if self.sense not in (LE, EQ):
            raise InputError(f"unknown constraint sense {self.sense!r}")

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def lhs(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.coefficients, x)), Fraction(0))

    def satisfied_by(self, x: Sequence) -> bool:
        v = self.lhs(x)
        return v == self.bound if self.sense == EQ else v <= self.bound


@dataclass(frozen=True)
class LpOutcome:
    status: str
    witness: Optional[tuple] = None
    objective_value: Optional[Fraction] = None
    ray_certificate: Optional[tuple] = None


class _Tableau:
    """Integer tableau for ``max c·x  s.t.  A x = b, x >= 0`` with ``b >= 0``."""

    def __init__(self, rows, rhs, ncols):
        self.rows = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.ncols = ncols
        self.den = 1
        self.basis = []
        self.obj = [0] * (ncols + 1)

    def pivot(self, r: int, s: int) -> None:
        rows = self.rows
        prow = rows[r]
        p = prow[s]
        d = self.den
        for i, row in enumerate(rows):
            if i == r:
                continue
            f = row[s]
            if f == 0:
                if p != d:
                    rows[i] = [(p * a) // d for a in row]
                continue
            rows[i] = [(p * a - f * b) // d for a, b in zip(row, prow)]
        f = self.obj[s]
        self.obj = [(p * a - f * b) // d for a, b in zip(self.obj, prow)]
        self.den = p
        self.basis[r] = s
        if p < 0:
            # keep den > 0 so signs of entries are signs of the true tableau
            self.rows = [[-a for a in row] for row in self.rows]
            self.obj = [-a for a in self.obj]
            self.den = -p

    def set_objective(self, cost: Sequence[int]) -> None:
        """Install reduced costs of integer ``cost`` for the current basis."""
        d = self.den
        obj = [c * d for c in cost] + [0]
        for i, j in enumerate(self.basis):
            cb = cost[j]
            if cb:
                obj = [o - cb * a for o, a in zip(obj, self.rows[i])]
        self.obj = obj

    def run(self, allowed: int) -> Optional[int]:
        """Iterate Bland's rule; return an unbounded column or None at optimum."""
        while True:
            s = next((j for j in range(allowed) if self.obj[j] > 0), None)
            if s is None:
                return None
            best = None
            for i, row in enumerate(self.rows):
                a = row[s]
                if a <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                lhs = row[-1] * self.rows[best][s]
                rhs = self.rows[best][-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                return s
            self.pivot(best, s)

    def solution(self, n: int) -> list[Fraction]:
        x = [Fraction(0)] * n
        for i, j in enumerate(self.basis):
            if j < n:
                x[j] = Fraction(self.rows[i][-1], self.den)
        return x


def solve_standard(A, b, c) -> LpOutcome:
    """Maximize ``c·x`` subject to ``A x = b`` and ``x >= 0``.

    ``A``, ``b``, ``c`` may hold ints or Fractions. The witness and ray
    certificate are in the standard-form variables.
    """
    m = len(A)
    n = len(c)
    rows, rhs = [], []
    for row, bi in zip(A, b):
        ints = integerize(list(row) + [bi])
        if ints[-1] < 0:
            ints = [-a for a in ints]
        rows.append(ints[:-1])
        rhs.append(ints[-1])
    cost = integerize(c) if n else []

    # phase 1: artificial basis
    ncols = n + m
    tab = _Tableau([r + [1 if k == i else 0 for k in range(m)] for i, r in enumerate(rows)], rhs, ncols)
    tab.basis = list(range(n, n + m))
    tab.set_objective([0] * n + [-1] * m)
    tab.run(ncols)
    if tab.obj[-1] != 0:
        return LpOutcome(INFEASIBLE)

    # drive zero-level artificials out, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            s = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if s is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, s)
        i += 1
    tab.rows = [row[:n] + [row[-1]] for row in tab.rows]
    tab.ncols = n

    # phase 2
    tab.set_objective(cost)
    s = tab.run(n)
    x = tab.solution(n)
    if s is not None:
        ray = [Fraction(0)] * n
        ray[s] = Fraction(1)
        for i, j in enumerate(tab.basis):
            ray[j] = Fraction(-tab.rows[i][s], tab.den)
        return LpOutcome(UNBOUNDED, tuple(x), None, tuple(ray))
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LpOutcome(OPTIMAL, tuple(x), value)


def lp_solve(constraints: Sequence[LinearConstraint], objective: Sequence, direction: str = "maximize") -> LpOutcome:
    """Optimize a linear objective over free variables under linear constraints."""
    if direction not in ("maximize", "minimize"):
        raise InputError(f"direction must be maximize or minimize, got {direction!r}")
    objective = vec(objective)
    n = len(objective)
    for con in constraints:
        if con.dim != n:
            raise InputError(f"constraint has dimension {con.dim}, objective has {n}")
    sign = 1 if direction == "maximize" else -1
    ineq = [con for con in constraints if con.sense == LE]
    k = len(ineq)
    A, b = [], []
    slack = 0
    for con in constraints:
        a = list(con.coefficients)
        row = a + [-v for v in a] + [0] * k
        if con.sense == LE:
            row[2 * n + slack] = 1
            slack += 1
        A.append(row)
        b.append(con.bound)
    c = [sign * v for v in objective] + [-sign * v for v in objective] + [0] * k
    out = solve_standard(A, b, c)
    if out.status == INFEASIBLE:
        return out
    x = tuple(out.witness[j] - out.witness[n + j] for j in range(n))
    if out.status == UNBOUNDED:
        r = out.ray_certificate
        return LpOutcome(UNBOUNDED, x, None, tuple(r[j] - r[n + j] for j in range(n)))
    value = sum((a * v for a, v in zip(objective, x)), Fraction(0))
    return LpOutcome(OPTIMAL, x, value)
