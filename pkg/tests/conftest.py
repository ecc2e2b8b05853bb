import itertools
from fractions import Fraction

import pytest

from convexsg import polyhedra as P


def solve_square(M, y):
    """Gauss-Jordan over Fractions; None when singular."""
    n = len(M)
    rows = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(M, y)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [a / p for a in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


def basis_enumeration_max(A, b, c):
    """max c.x over {Ax = b, x >= 0} by trying every basis; None if infeasible.

    Assumes A has full row rank and the feasible set is bounded.
    """
    m, n = len(A), len(A[0])
    best = None
    for cols in itertools.combinations(range(n), m):
        xs = solve_square([[A[i][j] for j in cols] for i in range(m)], b)
        if xs is None or any(v < 0 for v in xs):
            continue
        val = sum(Fraction(c[j]) * v for j, v in zip(cols, xs))
        best = val if best is None else max(best, val)
    return best


@pytest.fixture
def quadrant():
    return P.cone([(1, 0), (0, 1)])


@pytest.fixture
def wedge():
    return P.cone([(1, 1), (1, -1)])


@pytest.fixture
def unit_square():
    return P.make_polyhedron([(0, 0), (1, 0), (0, 1), (1, 1)])


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
