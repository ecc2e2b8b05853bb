"""Exact scalars and vectors.

All geometry runs on :class:`fractions.Fraction`; a ``Rational`` is simply a
Fraction, which already keeps ``numerator/denominator`` in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


class InputError(ValueError):
    """Malformed or inconsistent input (bad dimension, bad literal, ...)."""


def q(value) -> Fraction:
    """Coerce an int, Fraction or exact string literal to a Fraction.

    Floats are rejected: every scalar in the library must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not an exact rational literal: {value!r}") from exc
    raise InputError(f"not a rational: {value!r} (floats are not accepted)")


def vec(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(q(v) for v in values)


def fmt(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` or ``"p"``."""
    x = q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def smul(t, u: Sequence) -> tuple:
    return tuple(t * a for a in u)


def zeros(n: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * n


def integerize(u: Sequence) -> list[int]:
    """Scale ``u`` by the lcm of its denominators; returns integers."""
    den = 1
    for a in u:
        den = den * Fraction(a).denominator // math.gcd(den, Fraction(a).denominator)
    return [int(Fraction(a) * den) for a in u]


def primitive(u: Sequence) -> tuple[Fraction, ...]:
    """Positive multiple of ``u`` with coprime integer coordinates.

    The zero vector is returned unchanged.
    """
    ints = integerize(u)
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    if g == 0:
        return tuple(Fraction(0) for _ in ints)
    return tuple(Fraction(a // g) for a in ints)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def is_dyadic(x: Fraction) -> bool:
    d = Fraction(x).denominator
    return d & (d - 1) == 0
