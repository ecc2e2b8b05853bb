"""Ordered semigroups with dyadic scaling and a limit operator.

An instance supplies ``+``, multiplication by non-negative dyadic rationals,
a partial order and a budgeted convergence oracle. On top of that this module
provides a sampled harness for the eleven axioms (S1)-(S11), classifiers for
bounded and convex elements, and the telescoping cancellation engine
``a + b <= b + c  ==>  a + 2^-k b <= 2^-k b + c  ==>  a <= c``.

Limits are not computed topologically. ``converges_to`` probes a sequence at
the indices of a schedule and accepts when the distance to the candidate is
non-increasing over the trailing half of the schedule and has shrunk below
``tol * (d0 + 1)``.
"""

from __future__ import annotations

import itertools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from . import polyhedra as P
from .kernel.rational import InputError, is_dyadic, q
from .polyhedra import Polyhedron

INF = math.inf
DEFAULT_SCHEDULE = (1, 2, 4, 8, 16)
DEFAULT_TOL = Fraction(1, 2**10)
AXIOMS = tuple(f"S{i}" for i in range(1, 12))


class _Diverges:
    def __repr__(self):
        return "DIVERGES"


DIVERGES = _Diverges()


@dataclass(frozen=True)
class SampleSequence:
    """A sequence ``n -> term(n)`` together with its claimed limit."""

    label: str
    term: Callable[[int], Any]
    limit: Any


class OrderedSemigroup(ABC):
    name = "abstract"

    @property
    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def scale(self, alpha: Fraction, a): ...

    @abstractmethod
    def leq(self, a, b) -> bool: ...

    @abstractmethod
    def distance(self, a, b):
        """Metric behind the limit oracle; may return INF."""

    def eq(self, a, b) -> bool:
        return a == b

    def halving_candidate(self, a):
        """Natural guess for ``lim 2^-n · a``."""
        return self.zero

    def converges_to(self, term: Callable[[int], Any], x, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL) -> bool:
        ds = [self.distance(term(n), x) for n in schedule]
        if any(d == INF for d in ds):
            return False
        tail = ds[len(ds) // 2 :]
        if any(later > earlier for earlier, later in zip(tail, tail[1:])):
            return False
        return ds[-1] <= tol * (ds[0] + 1)

    def limit(self, term: Callable[[int], Any], schedule=DEFAULT_SCHEDULE, candidates=(), tol=DEFAULT_TOL):
        """First candidate (then the last probed term) the oracle accepts."""
        for x in list(candidates) + [term(schedule[-1])]:
            if self.converges_to(term, x, schedule, tol):
                return x
        return DIVERGES

    def check_dyadic(self, alpha) -> Fraction:
        alpha = q(alpha)
        if alpha < 0 or not is_dyadic(alpha):
            raise InputError(f"{alpha} is not a non-negative dyadic rational")
        return alpha


# -- dyadic numbers with infinity -------------------------------------------


def _phi(x) -> Fraction:
    # order-preserving homeomorphism [0, inf] -> [0, 1]
    return Fraction(1) if x == INF else x / (1 + x)


class DyadicSemigroup(OrderedSemigroup):
    """Non-negative dyadic rationals and infinity with the natural order."""

    name = "dyadic"

    @property
    def zero(self):
        return Fraction(0)

    def add(self, a, b):
        if a == INF or b == INF:
            return INF
        return a + b

    def scale(self, alpha, a):
        alpha = self.check_dyadic(alpha)
        if alpha == 0:
            return Fraction(0)
        return INF if a == INF else alpha * a

    def leq(self, a, b):
        return a <= b

    def distance(self, a, b):
        return abs(_phi(a) - _phi(b))

    def halving_candidate(self, a):
        return INF if a == INF else Fraction(0)


class BrokenSemigroup(DyadicSemigroup):
    """Harness self-test: ``a + b := |a - b|`` is not monotone."""

    name = "broken"

    def add(self, a, b):
        if a == INF or b == INF:
            return INF
        return abs(a - b)


# -- finite subsets -----------------------------------------------------------


class FiniteSubsetSemigroup(OrderedSemigroup):
    """Nonempty finite subsets of dyadics-with-infinity, ordered by inclusion.

    Addition is elementwise, ``alpha·A = {alpha a}`` and ``0·A = {0}``. The
    limit oracle uses the Hausdorff distance induced by the metric
    ``|x/(1+x) - y/(1+y)|`` on the compactified half-line.
    """

    name = "finite-subsets"

    @property
    def zero(self):
        return frozenset({Fraction(0)})

    def add(self, a, b):
        return frozenset(INF if x == INF or y == INF else x + y for x in a for y in b)

    def scale(self, alpha, a):
        alpha = self.check_dyadic(alpha)
        if alpha == 0:
            return frozenset({Fraction(0)})
        return frozenset(INF if x == INF else alpha * x for x in a)

    def leq(self, a, b):
        return a <= b

    def distance(self, a, b):
        def one_sided(s, t):
            return max(min(abs(_phi(x) - _phi(y)) for y in t) for x in s)

        return max(one_sided(a, b), one_sided(b, a))

    def halving_candidate(self, a):
        return frozenset({Fraction(0)} | ({INF} if INF in a else set()))


# -- polyhedra sharing a recession cone --------------------------------------


class PolyhedralSemigroup(OrderedSemigroup):
    """Polyhedra A with V ⊆ recc A, Minkowski addition, inclusion, gap limits."""

    name = "polyhedra"

    def __init__(self, V: Polyhedron):
        if not V.is_cone:
            raise InputError("V must be a cone")
        self.V = V

    @property
    def zero(self):
        return self.V

    def member(self, a: Polyhedron) -> bool:
        return P.subset(self.V, P.recession_cone(a))

    def add(self, a, b):
        return P.minkowski_sum(a, b)

    def scale(self, alpha, a):
        return P.scale(self.check_dyadic(alpha), a, self.V)

    def leq(self, a, b):
        return P.subset(a, b)

    def distance(self, a, b):
        return P.hausdorff_gap(a, b)

    def halving_candidate(self, a):
        return P.recession_cone(a)


# -- harness -------------------------------------------------------------------


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    checked: int
    witness: Optional[tuple] = None


def _first_failure(cases, predicate) -> tuple[int, Optional[tuple]]:
    n = 0
    for case in cases:
        n += 1
        if not predicate(*case):
            return n, case
    return n, None


def axiom_predicate(S: OrderedSemigroup, axiom: str, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL) -> Callable:
    """The quantified statement of ``axiom`` as a predicate on one sample tuple."""
    conv = lambda term, x: S.converges_to(term, x, schedule, tol)  # noqa: E731
    one = Fraction(1)

    def s10(s: SampleSequence, t: SampleSequence):
        if not (conv(s.term, s.limit) and conv(t.term, t.limit)):
            return True
        if not all(S.leq(s.term(n), t.term(n)) for n in schedule):
            return True
        return S.leq(s.limit, t.limit)

    def s11(s: SampleSequence, b):
        if not conv(s.term, s.limit):
            return True
        return conv(lambda n: S.add(s.term(n), b), S.add(s.limit, b))

    return {
        "S1": lambda a, b, c: S.eq(S.add(a, S.add(b, c)), S.add(S.add(a, b), c)),
        "S2": lambda a, b: S.eq(S.add(a, b), S.add(b, a)),
        "S3": lambda a: S.eq(S.add(a, S.zero), a),
        "S4": lambda a, b, c: not S.leq(a, b) or S.leq(S.add(a, c), S.add(b, c)),
        "S5": lambda a: S.eq(S.scale(one, a), a),
        "S6": lambda alpha, a, b: not S.leq(a, b) or S.leq(S.scale(alpha, a), S.scale(alpha, b)),
        "S7": lambda alpha, beta, a: S.eq(S.scale(alpha, S.scale(beta, a)), S.scale(alpha * beta, a)),
        "S8": lambda alpha, a, b: S.eq(S.scale(alpha, S.add(a, b)), S.add(S.scale(alpha, a), S.scale(alpha, b))),
        "S9": lambda alpha, beta, a: S.leq(S.scale(alpha + beta, a), S.add(S.scale(alpha, a), S.scale(beta, a))),
        "S10": s10,
        "S11": s11,
    }[axiom]


def _cases(axiom: str, elements, dyadics, sequences):
    prod = itertools.product
    return {
        "S1": lambda: prod(elements, repeat=3),
        "S2": lambda: prod(elements, repeat=2),
        "S3": lambda: ((a,) for a in elements),
        "S4": lambda: prod(elements, repeat=3),
        "S5": lambda: ((a,) for a in elements),
        "S6": lambda: prod(dyadics, elements, elements),
        "S7": lambda: prod(dyadics, dyadics, elements),
        "S8": lambda: prod(dyadics, elements, elements),
        "S9": lambda: prod(dyadics, dyadics, elements),
        "S10": lambda: prod(sequences, repeat=2),
        "S11": lambda: prod(sequences, elements),
    }[axiom]()


def check_axioms(
    S: OrderedSemigroup,
    elements: Sequence,
    dyadics: Sequence,
    sequences: Sequence[SampleSequence],
    schedule=DEFAULT_SCHEDULE,
    tol=DEFAULT_TOL,
) -> dict[str, AxiomResult]:
    """Evaluate (S1)-(S11) on every sample tuple; sampled, not a proof."""
    if not elements or not dyadics or not sequences:
        raise InputError("samples must be nonempty")
    dyadics = [S.check_dyadic(a) for a in dyadics]
    report = {}
    for ax in AXIOMS:
        pred = axiom_predicate(S, ax, schedule, tol)
        n, witness = _first_failure(_cases(ax, elements, dyadics, sequences), pred)
        report[ax] = AxiomResult(ax, witness is None, n, witness)
    return report


def replay(S: OrderedSemigroup, result: AxiomResult, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL) -> bool:
    """Re-evaluate a failure witness; True when the violation reproduces."""
    if result.witness is None:
        return False
    return not axiom_predicate(S, result.axiom, schedule, tol)(*result.witness)


# -- classifiers and cancellation ---------------------------------------------


def _halvings(S: OrderedSemigroup, a) -> Callable[[int], Any]:
    return lambda n: S.scale(Fraction(1, 2**n), a)


def is_bounded_element(S: OrderedSemigroup, a, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL) -> bool:
    """``lim 2^-n a = 0`` within the probe budget."""
    return S.converges_to(_halvings(S, a), S.zero, schedule, tol)


DEFAULT_PAIRS = tuple(
    (Fraction(x), Fraction(y)) for x, y in [(0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2)), (1, 2), (Fraction(1, 4), 3)]
)


def is_convex_element(S: OrderedSemigroup, a, pairs=DEFAULT_PAIRS) -> bool:
    """``(alpha + beta)·a = alpha·a + beta·a`` on every sampled pair."""
    return all(
        S.eq(S.scale(al + be, a), S.add(S.scale(al, a), S.scale(be, a))) for al, be in pairs
    )


@dataclass
class CancellationCertificate:
    premise: bool
    levels: tuple = ()
    level_verdicts: tuple = ()
    limit_element: Any = None
    limit_step: bool = False
    b_bounded: bool = False
    c_convex: bool = False
    concluded: bool = False
    direct_leq: Optional[bool] = None
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.premise:
            return "premise violated"
        return "a <= c" if self.concluded else "no conclusion"


def cancel_order(S: OrderedSemigroup, a, b, c, schedule=DEFAULT_SCHEDULE, tol=DEFAULT_TOL, pairs=DEFAULT_PAIRS):
    """Run the telescoping argument for ``a + b <= b + c`` and certify ``a <= c``.

    For each level k the scaled inequality ``a + 2^-k b <= 2^-k b + c`` is
    checked directly. With ``L = lim 2^-n b`` the limit step checks
    ``a + L <= c + L``; ``a <= c`` is concluded when L absorbs into both a and c
    (always the case for bounded b, where L is the zero element).
    """
    cert = CancellationCertificate(premise=S.leq(S.add(a, b), S.add(b, c)))
    cert.direct_leq = S.leq(a, c)
    if not cert.premise:
        return cert
    cert.levels = tuple(schedule)
    verdicts = []
    for k in schedule:
        bk = S.scale(Fraction(1, 2**k), b)
        verdicts.append(S.leq(S.add(a, bk), S.add(bk, c)))
    cert.level_verdicts = tuple(verdicts)
    cert.c_convex = is_convex_element(S, c, pairs)
    L = S.limit(_halvings(S, b), schedule, [S.halving_candidate(b)], tol)
    cert.limit_element = L
    if L is DIVERGES:
        cert.notes.append("lim 2^-n b not found within budget")
        return cert
    cert.b_bounded = S.eq(L, S.zero)
    aL, cL = S.add(a, L), S.add(c, L)
    cert.limit_step = S.leq(aL, cL)
    absorbs = S.eq(aL, a) and S.eq(cL, c)
    if not absorbs:
        cert.notes.append("limit of 2^-n b does not absorb into a and c")
    cert.concluded = all(verdicts) and cert.c_convex and cert.limit_step and absorbs
    if cert.concluded and not cert.direct_leq:
        # never reached when the axioms hold; surfaced rather than hidden
        cert.notes.append("engine conclusion contradicts direct comparison")
        cert.concluded = False
    return cert


# -- sample banks ---------------------------------------------------------------


def _fs(*xs):
    return frozenset(INF if x == INF else Fraction(x) for x in xs)


def default_bank(S: OrderedSemigroup):
    """(elements, dyadics, sequences) shipped with each instance."""
    half = Fraction(1, 2)
    dyadics = [Fraction(0), Fraction(1, 4), half, Fraction(1), Fraction(3, 2), Fraction(2)]
    if isinstance(S, FiniteSubsetSemigroup):
        elements = [_fs(0), _fs(1), _fs(1, 2), _fs(1, INF), _fs(INF), _fs(0, half, 3)]
        seqs = [
            SampleSequence("{2^-n, 1}", lambda n: _fs(Fraction(1, 2**n), 1), _fs(0, 1)),
            SampleSequence("{1, 2^n}", lambda n: _fs(1, 2**n), _fs(1, INF)),
            SampleSequence("{3·2^-n}", lambda n: _fs(Fraction(3, 2**n)), _fs(0)),
            SampleSequence("const {1,2}", lambda n: _fs(1, 2), _fs(1, 2)),
            SampleSequence("{0, 1+2^-n, inf}", lambda n: _fs(0, 1 + Fraction(1, 2**n), INF), _fs(0, 1, INF)),
        ]
    elif isinstance(S, PolyhedralSemigroup):
        V = S.V
        d = V.dim
        e0 = tuple(Fraction(int(i == 0)) for i in range(d))
        translate = P.make_polyhedron([e0], V.rays, d)
        unit = P.make_polyhedron([tuple(Fraction(int(b)) for b in bits) for bits in itertools.product((0, 1), repeat=d)], V.rays, d)
        seg = P.make_polyhedron([tuple([Fraction(0)] * d), tuple([Fraction(2)] + [Fraction(-1)] * (d - 1))], V.rays, d)
        elements = [V, translate, unit, seg]
        seqs = [
            SampleSequence("2^-n·unit", lambda n: S.scale(Fraction(1, 2**n), unit), V),
            SampleSequence("const translate", lambda n: translate, translate),
            SampleSequence("seg + 2^-n·unit", lambda n: S.add(seg, S.scale(Fraction(1, 2**n), unit)), seg),
            SampleSequence("2^-n·seg", lambda n: S.scale(Fraction(1, 2**n), seg), V),
        ]
    else:
        elements = [Fraction(0), half, Fraction(1), Fraction(3), INF]
        seqs = [
            SampleSequence("3·2^-n", lambda n: Fraction(3, 2**n), Fraction(0)),
            SampleSequence("1 + 2^-n", lambda n: 1 + Fraction(1, 2**n), Fraction(1)),
            SampleSequence("2^n", lambda n: Fraction(2**n), INF),
            SampleSequence("const 1/2", lambda n: half, half),
            SampleSequence("const inf", lambda n: INF, INF),
        ]
    return elements, dyadics, seqs


def make_instance(name: str, V: Optional[Polyhedron] = None) -> OrderedSemigroup:
    if name == "dyadic":
        return DyadicSemigroup()
    if name == "finite-subsets":
        return FiniteSubsetSemigroup()
    if name == "broken":
        return BrokenSemigroup()
    if name == "polyhedra":
        if V is None:
            raise InputError("the polyhedra instance needs a cone V")
        return PolyhedralSemigroup(V)
    raise InputError(f"unknown instance {name!r}")
