"""Integer lattices in Z^d: echelon bases and canonical coset representatives."""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import GroupExprError


def lattice_basis(dim: int, generators: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite basis of the sublattice spanned by ``generators``.

    Rows are in echelon form with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``.
    """
    rows = [list(map(int, g)) for g in generators]
    for r in rows:
        if len(r) != dim:
            raise GroupExprError(f"lattice vector {r} does not have length {dim}")
    rows = [r for r in rows if any(r)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in rows if r[col] == 0]
        # Euclid on column ``col`` until one row carries the gcd.
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        rows = rest
        col += 1
    for i, row in enumerate(basis):
        c = _pivot(row)
        for j in range(i):
            q = basis[j][c] // row[c]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], row)]
    return [tuple(r) for r in basis]


def _pivot(row) -> int:
    return next(i for i, a in enumerate(row) if a != 0)


def reduce_mod(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical representative of ``v + L`` for an echelon basis of L."""
    v = list(v)
    for row in basis:
        c = _pivot(row)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def quotient_order(dim: int, basis: Sequence[Sequence[int]]):
    if len(basis) < dim:
        return math.inf
    return math.prod(row[_pivot(row)] for row in basis)
