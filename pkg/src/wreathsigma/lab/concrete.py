"""Exact element arithmetic for concrete realizations of group expressions.

Elements are hashable canonical forms, so equality of elements is equality
of Python values:

* ``Z^d``: a tuple of ints.
* ``Z/m``: an int in ``range(m)``.
* ``F_k``: a freely reduced tuple of ``(generator index, sign)``.
* products: a tuple of factor elements.
* wreath products: ``(lamps, g)`` where ``lamps`` is a tuple of
  ``(point, h)`` pairs sorted by the point order and never holding the
  identity of H, and ``g`` is an element of the top group.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Hashable, Optional, Sequence

from ..errors import LabError
from ..groups import (
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GroupExpr,
    LatticeAction,
    RegularAction,
    Wreath,
    free_rank,
)
from .lattice import reduce_mod
from .words import Letter, Word, parse_word

Element = Hashable


class ConcreteGroup:
    """A group with a canonical form for every element and named generators."""

    expr: GroupExpr
    alphabet: tuple[str, ...]
    identity: Element

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    def abel(self, a: Element) -> tuple[int, ...]:
        """Image in the free abelianization, in the layout of the expression."""
        raise NotImplementedError

    def order_key(self, a: Element) -> Any:
        return a

    def generators(self) -> list[Element]:
        """Generator elements in alphabet order."""
        raise NotImplementedError

    # derived helpers

    def gen(self, name: str) -> Element:
        try:
            return self._gens[name]
        except KeyError:
            raise LabError(f"unknown letter {name!r}; alphabet is {list(self.alphabet)}") from None

    @property
    def _gens(self) -> dict:
        cache = self.__dict__.get("_gen_cache")
        if cache is None:
            cache = dict(zip(self.alphabet, self.generators()))
            self.__dict__["_gen_cache"] = cache
        return cache

    def letter(self, letter: Letter) -> Element:
        g = self.gen(letter[0])
        return g if letter[1] > 0 else self.inv(g)

    def evaluate(self, word: Word | str) -> Element:
        if isinstance(word, str):
            word = parse_word(word, self.alphabet)
        out = self.identity
        for letter in word:
            out = self.mul(out, self.letter(letter))
        return out

    def power(self, a: Element, n: int) -> Element:
        base = a if n >= 0 else self.inv(a)
        out = self.identity
        for _ in range(abs(n)):
            out = self.mul(out, base)
        return out

    def chi(self, values: Sequence[Fraction], a: Element) -> Fraction:
        return sum((Fraction(v) * c for v, c in zip(values, self.abel(a))), Fraction(0))


class IntegerLattice(ConcreteGroup):
    def __init__(self, dim: int, names: Sequence[str]):
        self.dim = dim
        self.expr = FreeAbelian(dim)
        self.alphabet = tuple(names)
        self.identity = (0,) * dim

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def abel(self, a):
        return a

    def order_key(self, a):
        return (sum(map(abs, a)), a)

    def generators(self):
        return [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]


class CyclicGroup(ConcreteGroup):
    def __init__(self, modulus: int, names: Sequence[str]):
        self.modulus = modulus
        self.expr = CyclicFinite(modulus)
        self.alphabet = tuple(names)
        self.identity = 0

    def mul(self, a, b):
        return (a + b) % self.modulus

    def inv(self, a):
        return (-a) % self.modulus

    def abel(self, a):
        return ()

    def generators(self):
        return [1 % self.modulus] if self.alphabet else []


class FreeGroup(ConcreteGroup):
    def __init__(self, rank: int, names: Sequence[str]):
        self.rank = rank
        self.expr = Free(rank)
        self.alphabet = tuple(names)
        self.identity = ()

    def mul(self, a, b):
        k = 0
        while k < min(len(a), len(b)) and a[-1 - k][0] == b[k][0] and a[-1 - k][1] == -b[k][1]:
            k += 1
        return a[: len(a) - k] + b[k:]

    def inv(self, a):
        return tuple((i, -s) for i, s in reversed(a))

    def abel(self, a):
        out = [0] * self.rank
        for i, s in a:
            out[i] += s
        return tuple(out)

    def order_key(self, a):
        return (len(a), a)

    def generators(self):
        return [((i, 1),) for i in range(self.rank)]


class ProductGroup(ConcreteGroup):
    def __init__(self, factors: Sequence[ConcreteGroup]):
        self.factors = tuple(factors)
        self.expr = DirectProduct(tuple(f.expr for f in factors))
        self.alphabet = tuple(itertools.chain.from_iterable(f.alphabet for f in factors))
        self.identity = tuple(f.identity for f in factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def abel(self, a):
        return tuple(itertools.chain.from_iterable(f.abel(x) for f, x in zip(self.factors, a)))

    def order_key(self, a):
        return tuple(f.order_key(x) for f, x in zip(self.factors, a))

    def generators(self):
        out = []
        for i, f in enumerate(self.factors):
            for g in f.generators():
                e = list(self.identity)
                e[i] = g
                out.append(tuple(e))
        return out


class WreathGroup(ConcreteGroup):
    """``H wr_X G`` for X = G (regular action) or X = Z^d / L."""

    def __init__(self, expr: Wreath, base: ConcreteGroup, top: ConcreteGroup):
        self.expr = expr
        self.base = base
        self.top = top
        self.alphabet = base.alphabet + top.alphabet
        self.identity = ((), top.identity)
        action = expr.gset.action
        if isinstance(action, RegularAction):
            self._lattice = None
            self.origin = top.identity
        elif isinstance(action, LatticeAction):
            if not isinstance(top, IntegerLattice):
                raise LabError("a lattice action needs a free abelian top group")
            self._lattice = [tuple(r) for r in action.lattice]
            self.origin = (0,) * top.dim
        else:
            raise LabError("the wreath product has no concrete action attached")

    def act(self, g, x):
        if self._lattice is None:
            return self.top.mul(g, x)
        return reduce_mod(tuple(a + b for a, b in zip(g, x)), self._lattice)

    def _point_key(self, x):
        return self.top.order_key(x)

    def _pack(self, lamps: dict):
        e = self.base.identity
        items = [(x, h) for x, h in lamps.items() if h != e]
        items.sort(key=lambda p: self._point_key(p[0]))
        return tuple(items)

    def mul(self, a, b):
        fa, ga = a
        fb, gb = b
        if not fb:
            return fa, self.top.mul(ga, gb)
        lamps = dict(fa)
        for x, h in fb:
            y = self.act(ga, x)
            cur = lamps.get(y)
            lamps[y] = h if cur is None else self.base.mul(cur, h)
        return self._pack(lamps), self.top.mul(ga, gb)

    def inv(self, a):
        f, g = a
        gi = self.top.inv(g)
        lamps = {self.act(gi, x): self.base.inv(h) for x, h in f}
        return self._pack(lamps), gi

    def abel(self, a):
        f, g = a
        hrank = free_rank(self.base.expr)
        lamp = [0] * hrank
        for _, h in f:
            for i, c in enumerate(self.base.abel(h)):
                lamp[i] += c
        return tuple(lamp) + tuple(self.top.abel(g))

    def order_key(self, a):
        f, g = a
        return (
            tuple((self._point_key(x), self.base.order_key(h)) for x, h in f),
            self.top.order_key(g),
        )

    def generators(self):
        out = [(((self.origin, h),), self.top.identity) for h in self.base.generators()]
        out += [((), g) for g in self.top.generators()]
        return out

    def lamp(self, x, h) -> Element:
        """The element with a single lamp ``h`` at point ``x``."""
        return self._pack({x: h}), self.top.identity


def _name_supply(names: Optional[Sequence[str]]):
    if names is not None:
        yield from names
        return
    for i in itertools.count(1):
        yield f"g{i}"


def realize(expr: GroupExpr, names: Optional[Sequence[str]] = None) -> ConcreteGroup:
    """Build a concrete group for ``expr``.  Letters are taken from ``names``
    in the order the generators appear (base before top, factors left to
    right); by default they are ``g1, g2, ...``."""
    supply = _name_supply(names)
    group = _realize(expr, supply)
    if names is not None:
        leftover = list(supply)
        if leftover:
            raise LabError(f"too many generator names: {leftover}")
    return group


def _take(supply, n):
    out = list(itertools.islice(supply, n))
    if len(out) != n:
        raise LabError("not enough generator names")
    return out


def _realize(expr, supply) -> ConcreteGroup:
    if isinstance(expr, FreeAbelian):
        return IntegerLattice(expr.rank, _take(supply, expr.rank))
    if isinstance(expr, Free):
        return FreeGroup(expr.rank, _take(supply, expr.rank))
    if isinstance(expr, CyclicFinite):
        return CyclicGroup(expr.modulus, _take(supply, 1 if expr.modulus > 1 else 0))
    if isinstance(expr, DirectProduct):
        return ProductGroup([_realize(f, supply) for f in expr.factors])
    if isinstance(expr, Wreath):
        if not expr.gset.transitive:
            raise LabError("only transitive actions are realized")
        base = _realize(expr.base, supply)
        top = _realize(expr.top, supply)
        return WreathGroup(expr, base, top)
    raise LabError(f"no concrete realization for {type(expr).__name__}")
