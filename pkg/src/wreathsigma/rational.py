"""Exact rational vectors and the few matrix operations the engine needs."""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CharacterError

Vector = tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Integers, fractions and strings such as ``"3/4"`` or ``"-2"`` are accepted.
    Binary floats are refused: the package works with rational characters only
    and a float usually hides a rounding error.
    """
    if isinstance(value, bool):
        raise CharacterError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise CharacterError(f"cannot parse rational {value!r}") from exc
    raise CharacterError(
        f"not a rational number: {value!r} (irrational and floating point "
        "characters are outside the supported model; pass Fraction or 'p/q')"
    )


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def scale(q: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(q * x for x in v)


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def rank(columns: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the matrix whose columns are ``columns`` (Gaussian elimination)."""
    rows = [list(map(Fraction, c)) for c in columns]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    """The primitive integer vector on the ray through ``v`` (``v`` nonzero)."""
    den = math.lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise CharacterError("zero vector has no ray")
    return tuple(i // g for i in ints)


def fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_vector(v: Sequence[Fraction]) -> str:
    return "[" + ", ".join(fmt(x) for x in v) + "]"
