"""Named groups with precomputed action data and generator letters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .groups import (
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GroupExpr,
    Wreath,
    lattice_gset,
    regular_gset,
)

Z1 = FreeAbelian(1)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: GroupExpr
    letters: Optional[tuple[str, ...]]
    description: str


def lamplighter(m: int = 2) -> CatalogEntry:
    return CatalogEntry(
        f"lamplighter({m})",
        Wreath(CyclicFinite(m), Z1, regular_gset(Z1)),
        ("a", "s"),
        f"Z/{m} wr Z with lamp a and shift s",
    )


def zwrz() -> CatalogEntry:
    return CatalogEntry("zwrz", Wreath(Z1, Z1, regular_gset(Z1)), ("h", "z"), "Z wr Z with base h and top z")


def zwrz_mod(m: int = 2) -> CatalogEntry:
    return CatalogEntry(
        f"zwrz_mod({m})",
        Wreath(Z1, Z1, lattice_gset(1, [[m]])),
        ("h", "z"),
        f"Z wr_X Z with X = Z/{m}Z; finitely presented",
    )


def z2wrz() -> CatalogEntry:
    return CatalogEntry(
        "z2wrz", Wreath(FreeAbelian(2), Z1, regular_gset(Z1)), ("h", "k", "z"), "Z^2 wr Z"
    )


def free(k: int) -> CatalogEntry:
    names = tuple("abcdefgh"[:k]) if k <= 8 else None
    return CatalogEntry(f"free({k})", Free(k), names, f"free group of rank {k}")


def lattice(n: int) -> CatalogEntry:
    names = tuple(f"x{i + 1}" for i in range(n)) if n > 1 else ("x",)
    return CatalogEntry(f"Z({n})", FreeAbelian(n), names, f"free abelian group of rank {n}")


def F2xF2() -> CatalogEntry:
    return CatalogEntry("F2xF2", DirectProduct((Free(2), Free(2))), ("a", "b", "c", "d"), "F_2 x F_2")


def F2xZ() -> CatalogEntry:
    return CatalogEntry("F2xZ", DirectProduct((Free(2), Z1)), ("a", "b", "x"), "F_2 x Z")


def Z2xF2() -> CatalogEntry:
    return CatalogEntry("Z2xF2", DirectProduct((FreeAbelian(2), Free(2))), ("x", "y", "a", "b"), "Z^2 x F_2")


# name -> (constructor, number of integer parameters accepted)
SHORTCUTS: dict[str, tuple[Callable[..., CatalogEntry], tuple[int, ...]]] = {
    "lamplighter": (lamplighter, (0, 1)),
    "zwrz": (zwrz, (0,)),
    "zwrz_mod": (zwrz_mod, (0, 1)),
    "z2wrz": (z2wrz, (0,)),
    "F2xF2": (F2xF2, (0,)),
    "F2xZ": (F2xZ, (0,)),
    "Z2xF2": (Z2xF2, (0,)),
}


def standard_catalog() -> list[CatalogEntry]:
    """The groups the property suites sweep over."""
    return [
        lamplighter(2),
        lamplighter(3),
        zwrz(),
        zwrz_mod(2),
        z2wrz(),
        free(1),
        free(2),
        lattice(1),
        lattice(2),
        F2xF2(),
        F2xZ(),
        Z2xF2(),
    ]


def letters_for(expr: GroupExpr) -> Optional[tuple[str, ...]]:
    """Letters of the catalog entry whose expression equals ``expr``, if any."""
    for entry in standard_catalog():
        if entry.expr == expr:
            return entry.letters
    return None
