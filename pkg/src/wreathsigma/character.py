"""Rational characters, rays on the character sphere, and the restriction maps
the Sigma rules use."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CharacterError
from .groups import (
    INF,
    WREATH_TYPES,
    DirectProduct,
    GroupExpr,
    StabilizerData,
    free_rank,
)
from .rational import Vector, dot, fmt_vector, is_zero, vector


@dataclass(frozen=True)
class Character:
    """A homomorphism to Q, stored as coordinates on the free abelianization
    of ``group`` (layout as in :func:`wreathsigma.groups.abelianization`)."""

    group: GroupExpr
    values: Vector

    def __post_init__(self):
        object.__setattr__(self, "values", vector(self.values))
        n = free_rank(self.group)
        if len(self.values) != n:
            raise CharacterError(
                f"character has {len(self.values)} coordinates, group has free rank {n}"
            )

    @property
    def is_zero(self) -> bool:
        return is_zero(self.values)

    def scaled(self, q) -> "Character":
        q = Fraction(q)
        return Character(self.group, tuple(q * v for v in self.values))

    def __add__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise CharacterError("cannot add characters on different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Character":
        return self.scaled(-1)

    def ray(self) -> "Ray":
        return Ray.of(self)

    def __str__(self) -> str:
        return fmt_vector(self.values)


@dataclass(frozen=True)
class Ray:
    """A point of the character sphere: a character scaled so that its first
    nonzero coordinate is +1 or -1."""

    group: GroupExpr
    values: Vector

    @classmethod
    def of(cls, chi: Character) -> "Ray":
        lead = next((v for v in chi.values if v != 0), None)
        if lead is None:
            raise CharacterError("the zero character does not define a ray")
        return cls(chi.group, tuple(v / abs(lead) for v in chi.values))

    def character(self) -> Character:
        return Character(self.group, self.values)


def make_character(group: GroupExpr, values: Iterable) -> Character:
    return Character(group, tuple(values))


def require_nonzero(chi: Character) -> None:
    if chi.is_zero:
        raise CharacterError("Sigma invariants are only defined for nonzero characters")


def restrict(theta: Character, stab: StabilizerData) -> Character:
    """Restrict a character of G to the stabilizer ``stab`` (a subgroup of G)."""
    for v in stab.images:
        if len(v) != len(theta.values):
            raise CharacterError(
                f"stabilizer image has length {len(v)}, character has {len(theta.values)} coordinates"
            )
    return Character(stab.group, tuple(dot(theta.values, v) for v in stab.images))


def restriction_is_zero(theta: Sequence[Fraction], images: Sequence[Vector]) -> bool:
    return all(dot(theta, v) == 0 for v in images)


def factor_characters(chi: Character) -> list[Character]:
    """Split a character of a direct product into its factor characters."""
    if not isinstance(chi.group, DirectProduct):
        raise CharacterError("not a character of a direct product")
    out, pos = [], 0
    for f in chi.group.factors:
        n = free_rank(f)
        out.append(Character(f, chi.values[pos : pos + n]))
        pos += n
    return out


@dataclass(frozen=True)
class WreathParts:
    """Restrictions of a wreath-product character: one character of the base
    per orbit (the copies inside an orbit share it) and the top character."""

    etas: tuple[Character, ...]
    theta: Character

    @property
    def vanishes_on_base(self) -> bool:
        return all(e.is_zero for e in self.etas)


def wreath_parts(chi: Character) -> WreathParts:
    g = chi.group
    if not isinstance(g, WREATH_TYPES):
        raise CharacterError("not a character of a wreath product")
    h = free_rank(g.base)
    etas, pos = [], 0
    for _ in g.gset.orbits:
        etas.append(Character(g.base, chi.values[pos : pos + h]))
        pos += h
    return WreathParts(tuple(etas), Character(g.top, chi.values[pos:]))


class TSize(enum.Enum):
    """Cardinality class of T = {x : chi restricted to H_x is nonzero}."""

    ZERO = "0"
    ONE = "1"
    TWO = "2"
    THREE_OR_MORE = ">=3"
    INFINITE = "inf"

    @property
    def at_least_two(self) -> bool:
        return self in (TSize.TWO, TSize.THREE_OR_MORE, TSize.INFINITE)

    @property
    def at_least_three(self) -> bool:
        return self in (TSize.THREE_OR_MORE, TSize.INFINITE)


@dataclass(frozen=True)
class TSupport:
    orbits: tuple[str, ...]
    size: TSize


def support_T(chi: Character, wreath: GroupExpr | None = None) -> TSupport:
    """Orbits on which the base character is nonzero and the size class of T."""
    if wreath is not None and wreath != chi.group:
        raise CharacterError("character does not belong to the given wreath product")
    if not isinstance(chi.group, WREATH_TYPES):
        raise CharacterError("support_T needs a wreath product")
    parts = wreath_parts(chi)
    orbits = [o for o, e in zip(chi.group.gset.orbits, parts.etas) if not e.is_zero]
    total = sum(o.size for o in orbits)
    if total == INF:
        size = TSize.INFINITE
    else:
        size = {0: TSize.ZERO, 1: TSize.ONE, 2: TSize.TWO}.get(total, TSize.THREE_OR_MORE)
    return TSupport(tuple(o.label for o in orbits), size)


def is_discrete(chi: Character) -> bool:
    """Rational characters have infinite cyclic image, so this is always True
    for a nonzero character."""
    require_nonzero(chi)
    return True
