import random
from fractions import Fraction as F

import pytest

from convexsg import mrh as M
from convexsg import polyhedra as P
from convexsg.kernel.rational import InputError
from convexsg.sampling import DIAGONAL_WEDGE, QUADRANT, random_in_cv


def test_membership(quadrant):
    assert M.in_CV(P.make_polyhedron([(1, 1)], QUADRANT), quadrant)
    assert not M.in_CV(quadrant, P.cone([(1, 0)], 2))


def test_witness_bounds_the_gap():
    V = P.cone([(1, 1)], 2)
    A = P.make_polyhedron([(0, 0), (2, 1)], [(1, 1)])
    assert M.in_CV(A, V)
    B = M.cv_witness(A)
    assert B.is_bounded
    assert P.subset(A, V + B) and P.subset(V, A + B)


def test_membership_requires_cone(unit_square):
    with pytest.raises(InputError):
        M.in_CV(unit_square, unit_square)


def test_class_constructors(quadrant):
    t = P.make_polyhedron([(1, 0)], QUADRANT)
    x = M.mrh_make(t, quadrant, quadrant)
    assert x.pos == t and x.neg == quadrant
    assert M.mrh_equivalent(M.mrh_make(quadrant, quadrant, quadrant), M.zero_class(quadrant))
    with pytest.raises(InputError):
        M.mrh_make(P.point(0, 0), quadrant, quadrant)


def test_negative_scale_swaps(quadrant):
    A = P.make_polyhedron([(0, 0), (1, 2)], QUADRANT)
    B = P.make_polyhedron([(3, 0)], QUADRANT)
    y = M.mrh_scale(-1, M.mrh_make(A, B, quadrant))
    assert (y.pos, y.neg) == (B, A)


def test_equal_pairs_are_zero(quadrant):
    A = P.make_polyhedron([(2, 1)], QUADRANT)
    assert M.mrh_equivalent(M.mrh_make(quadrant, quadrant, quadrant), M.mrh_make(A, A, quadrant))


def test_cone_mismatch(quadrant, wedge):
    with pytest.raises(InputError):
        M.mrh_add(M.zero_class(quadrant), M.zero_class(wedge))


@pytest.mark.parametrize("cone_rays", [QUADRANT, DIAGONAL_WEDGE])
@pytest.mark.parametrize("seed", range(8))
def test_embedding_is_additive(cone_rays, seed):
    rng = random.Random(seed)
    V = P.cone(cone_rays)
    A, B = random_in_cv(rng, V, 3), random_in_cv(rng, V, 3)
    assert M.mrh_equivalent(M.embed_j(A + B, V), M.embed_j(A, V) + M.embed_j(B, V))
    lam = F(rng.randint(0, 6), 2)
    assert M.mrh_equivalent(M.embed_j(P.scale(lam, A, V), V), lam * M.embed_j(A, V))


@pytest.mark.parametrize("seed", range(8))
def test_operations_respect_equivalence(seed):
    rng = random.Random(50 + seed)
    V = P.cone(QUADRANT)
    A, B, D = (random_in_cv(rng, V, 3) for _ in range(3))
    x, x2 = M.mrh_make(A, B, V), M.mrh_make(A + D, B + D, V)
    y = M.mrh_make(random_in_cv(rng, V, 3), random_in_cv(rng, V, 3), V)
    assert M.mrh_equivalent(x, x2)
    assert M.mrh_equivalent(x + y, x2 + y)
    assert M.mrh_equivalent(F(-3, 2) * x, F(-3, 2) * x2)


def test_scalar_laws(quadrant):
    rng = random.Random(9)
    x = M.mrh_make(random_in_cv(rng, quadrant), random_in_cv(rng, quadrant), quadrant)
    a, b = F(3, 2), F(-1, 4)
    assert M.mrh_equivalent((a + b) * x, a * x + b * x)
    assert M.mrh_equivalent(a * (b * x), (a * b) * x)
    assert M.mrh_equivalent(0 * x, M.zero_class(quadrant))


def test_halving_gaps_halve(quadrant):
    A = P.make_polyhedron([(1, 2), (3, 0)], QUADRANT)
    rep = M.powers_of_half_limit(A, quadrant, schedule=tuple(range(1, 12)))
    assert rep.converged
    assert all(b == a / 2 for a, b in zip(rep.gaps, rep.gaps[1:]))
    assert rep.gaps[0] == P.hausdorff_gap(A, quadrant) / 2


def test_cancellation_in_cv(quadrant, unit_square):
    A = P.make_polyhedron([(0, 0), (1, 1)], QUADRANT)
    B = unit_square + quadrant
    rep = M.cancel_in_CV(A, B, quadrant, quadrant)
    assert rep.premise and rep.conclusion and rep.halving_converged


def test_cancellation_requires_membership(quadrant, unit_square):
    with pytest.raises(InputError):
        M.cancel_in_CV(unit_square, quadrant, quadrant, quadrant)


def test_limit_check(quadrant):
    seq = [P.make_polyhedron([(F(1, 2**n), 0)], QUADRANT) for n in range(12, 20)]
    assert M.limit_check(seq, quadrant)
    assert not M.limit_check([P.make_polyhedron([(1, 0)], QUADRANT)] * 4, quadrant)
    assert not M.limit_check([P.point(0, 0)], quadrant)
    with pytest.raises(InputError):
        M.limit_check([], quadrant)
