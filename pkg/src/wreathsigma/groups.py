"""Group expressions: atoms, direct products and (graph-)wreath products.

A :class:`GroupExpr` is an immutable tree.  Wreath nodes carry a
:class:`GSetSpec` describing the action of the top group on the index set
only through the data the Sigma rules consume: orbit sizes, stabilizers
(as abstract groups together with their image in the rational
abelianization of the top group) and pair-orbit stabilizer images.

Characters live on the free part of the abelianization; see
:func:`abelianization` for the coordinate layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import GroupExprError
from .rational import Vector, dot, rank, vector

INF = math.inf

OrbitSize = Union[int, float]


class GroupExpr:
    """Marker base class for every node of a group expression."""

    __slots__ = ()


def _freeze_vectors(rows) -> tuple[Vector, ...]:
    return tuple(vector(r) for r in rows)


@dataclass(frozen=True)
class FreeAbelian(GroupExpr):
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise GroupExprError(f"FreeAbelian rank must be >= 0, got {self.rank}")


@dataclass(frozen=True)
class Free(GroupExpr):
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise GroupExprError(f"Free rank must be >= 0, got {self.rank}")


@dataclass(frozen=True)
class CyclicFinite(GroupExpr):
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise GroupExprError(f"cyclic modulus must be >= 1, got {self.modulus}")


@dataclass(frozen=True)
class DirectProduct(GroupExpr):
    factors: tuple[GroupExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise GroupExprError("DirectProduct needs at least one factor")
        for f in self.factors:
            _check_expr(f)


@dataclass(frozen=True)
class Cone:
    """Relatively open polyhedral cone ``{v : <a,v> = 0 for a in equalities,
    <b,v> > 0 for b in positives}`` in character coordinates."""

    equalities: tuple[Vector, ...] = ()
    positives: tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "equalities", _freeze_vectors(self.equalities))
        object.__setattr__(self, "positives", _freeze_vectors(self.positives))

    def contains(self, v: Sequence) -> bool:
        return all(dot(a, v) == 0 for a in self.equalities) and all(
            dot(b, v) > 0 for b in self.positives
        )


@dataclass(frozen=True)
class SphereRegion:
    """A subset of the character sphere given as the complement of finitely
    many cones.  Both half-space and subsphere conditions are cones."""

    excluded: tuple[Cone, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(self.excluded))

    @classmethod
    def everything(cls) -> "SphereRegion":
        return cls(())

    @classmethod
    def nothing(cls) -> "SphereRegion":
        return cls((Cone(),))

    def contains(self, v: Sequence) -> bool:
        return not any(c.contains(v) for c in self.excluded)


@dataclass(frozen=True)
class AnnotatedAtom(GroupExpr):
    """An opaque group described by its abelianization and user-supplied
    Sigma regions.  ``None`` for a region means membership is unknown."""

    name: str
    rank: int
    torsion: bool = False
    finitely_presented: bool = True
    sigma1: Optional[SphereRegion] = None
    sigma2: Optional[SphereRegion] = None

    def __post_init__(self):
        if self.rank < 0:
            raise GroupExprError("annotated rank must be >= 0")
        for region in (self.sigma1, self.sigma2):
            if region is None:
                continue
            for cone in region.excluded:
                for a in cone.equalities + cone.positives:
                    if len(a) != self.rank:
                        raise GroupExprError(
                            f"annotated atom {self.name!r}: cone row has length "
                            f"{len(a)}, expected {self.rank}"
                        )


@dataclass(frozen=True)
class StabilizerData:
    """A point stabilizer G_x: the abstract group plus the images of its
    abelianization basis in the rational abelianization of G (one vector per
    basis element)."""

    group: GroupExpr
    images: tuple[Vector, ...] = ()
    finitely_generated: bool = True

    def __post_init__(self):
        _check_expr(self.group)
        object.__setattr__(self, "images", _freeze_vectors(self.images))
        n = free_rank(self.group)
        if len(self.images) != n:
            raise GroupExprError(
                f"stabilizer map has {len(self.images)} columns but the stabilizer "
                f"abelianization has free rank {n}"
            )


@dataclass(frozen=True)
class OrbitRecord:
    label: str
    size: OrbitSize
    stabilizer: StabilizerData

    def __post_init__(self):
        if not (self.size == INF or (isinstance(self.size, int) and self.size >= 1)):
            raise GroupExprError(f"orbit {self.label!r}: size must be a positive int or INF")


@dataclass(frozen=True)
class PairOrbitRecord:
    """Stabilizer image for G-orbits on X x X under the diagonal action.

    One record may stand for several orbits sharing the same stabilizer
    image; ``multiplicity`` counts them (``INF`` allowed).  ``between`` names
    the two point-orbits the pairs are drawn from, when known.
    """

    label: str
    images: tuple[Vector, ...] = ()
    multiplicity: OrbitSize = 1
    between: Optional[tuple[str, str]] = None
    diagonal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "images", _freeze_vectors(self.images))
        if self.between is not None:
            object.__setattr__(self, "between", tuple(self.between))
        if not (
            self.multiplicity == INF
            or (isinstance(self.multiplicity, int) and self.multiplicity >= 1)
        ):
            raise GroupExprError(f"pair record {self.label!r}: bad multiplicity")


@dataclass(frozen=True)
class RegularAction:
    """X = G with G acting by left multiplication."""


@dataclass(frozen=True)
class LatticeAction:
    """X = Z^d / L with Z^d acting by translation; ``lattice`` lists a
    spanning set of L."""

    lattice: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "lattice", tuple(tuple(int(x) for x in r) for r in self.lattice))


ActionSpec = Union[RegularAction, LatticeAction]


@dataclass(frozen=True)
class GSetSpec:
    """Orbit-level description of a G-set X.

    When pair data is given, a diagonal record is added for every orbit that
    lacks one (the stabilizer of (x, x) is G_x).  ``action`` optionally names
    a concrete realization so the laboratory can build the group.
    """

    orbits: tuple[OrbitRecord, ...]
    pairs: Optional[tuple[PairOrbitRecord, ...]] = None
    action: Optional[ActionSpec] = None

    def __post_init__(self):
        orbits = tuple(self.orbits)
        if not orbits:
            raise GroupExprError("a G-set needs at least one orbit")
        labels = [o.label for o in orbits]
        if len(set(labels)) != len(labels):
            raise GroupExprError(f"duplicate orbit labels: {labels}")
        object.__setattr__(self, "orbits", orbits)
        if self.pairs is not None:
            pairs = list(self.pairs)
            plabels = {p.label for p in pairs}
            have_diag = {p.between[0] for p in pairs if p.diagonal and p.between}
            for o in orbits:
                if o.label in have_diag:
                    continue
                label = f"diag:{o.label}"
                while label in plabels:
                    label += "'"
                plabels.add(label)
                pairs.append(
                    PairOrbitRecord(
                        label,
                        o.stabilizer.images,
                        multiplicity=1,
                        between=(o.label, o.label),
                        diagonal=True,
                    )
                )
            object.__setattr__(self, "pairs", tuple(pairs))

    @property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    def orbit(self, label: str) -> OrbitRecord:
        for o in self.orbits:
            if o.label == label:
                return o
        raise KeyError(label)


def _check_wreath(base: GroupExpr, top: GroupExpr, gset: GSetSpec, kind: str):
    _check_expr(base)
    _check_expr(top)
    if not isinstance(gset, GSetSpec):
        raise GroupExprError(f"{kind}: gset must be a GSetSpec")
    if is_trivial(base):
        raise GroupExprError(f"{kind}: the base group must be nontrivial")
    n = free_rank(top)
    for o in gset.orbits:
        for v in o.stabilizer.images:
            if len(v) != n:
                raise GroupExprError(
                    f"{kind}: orbit {o.label!r} stabilizer image has length {len(v)}, "
                    f"top group has free rank {n}"
                )
        if o.size == 1 and rank(o.stabilizer.images) != n:
            raise GroupExprError(
                f"{kind}: orbit {o.label!r} is a fixed point, so its stabilizer is the "
                "whole top group and its image must span the top abelianization"
            )
    labels = {o.label for o in gset.orbits}
    for p in gset.pairs or ():
        for v in p.images:
            if len(v) != n:
                raise GroupExprError(f"{kind}: pair record {p.label!r} has wrong image length")
        if p.between is not None and not set(p.between) <= labels:
            raise GroupExprError(f"{kind}: pair record {p.label!r} names unknown orbits")


@dataclass(frozen=True)
class Wreath(GroupExpr):
    """Restricted permutational wreath product ``base wr_X top``."""

    base: GroupExpr
    top: GroupExpr
    gset: GSetSpec

    def __post_init__(self):
        _check_wreath(self.base, self.top, self.gset, "Wreath")


@dataclass(frozen=True)
class GraphWreath(GroupExpr):
    """Graph-wreath product over a G-graph with vertex set X.

    ``edges`` lists the orbit-label pairs between which commutation edges
    exist.  The Sigma rules only use the orbit and stabilizer data, so the
    edge data is carried for reporting.
    """

    base: GroupExpr
    top: GroupExpr
    gset: GSetSpec
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        _check_wreath(self.base, self.top, self.gset, "GraphWreath")


WREATH_TYPES = (Wreath, GraphWreath)


def _check_expr(expr):
    if not isinstance(expr, GroupExpr):
        raise GroupExprError(f"not a group expression: {expr!r}")


def is_trivial(expr: GroupExpr) -> bool:
    if isinstance(expr, (FreeAbelian, Free)):
        return expr.rank == 0
    if isinstance(expr, CyclicFinite):
        return expr.modulus == 1
    if isinstance(expr, DirectProduct):
        return all(is_trivial(f) for f in expr.factors)
    return False


# -- abelianization -----------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """Coordinates ``start:stop`` of a character belong to ``owner``."""

    owner: str
    start: int
    stop: int


@dataclass(frozen=True)
class AbelBasis:
    free_rank: int
    has_torsion: bool
    layout: tuple[Block, ...]


@lru_cache(maxsize=4096)
def abelianization(expr: GroupExpr) -> AbelBasis:
    """Free rank, torsion flag and coordinate layout of ``expr``'s abelianization.

    For a wreath product over X with n orbits the abelianization is
    ``(H^ab)^n + G^ab``: copies of H inside one orbit are conjugate and
    therefore identified.  Torsion gets no coordinates.
    """
    if isinstance(expr, FreeAbelian):
        return AbelBasis(expr.rank, False, (Block("Z^n", 0, expr.rank),))
    if isinstance(expr, Free):
        return AbelBasis(expr.rank, False, (Block("F_k", 0, expr.rank),))
    if isinstance(expr, CyclicFinite):
        return AbelBasis(0, expr.modulus > 1, ())
    if isinstance(expr, AnnotatedAtom):
        return AbelBasis(expr.rank, expr.torsion, (Block(expr.name, 0, expr.rank),))
    if isinstance(expr, DirectProduct):
        blocks, pos, torsion = [], 0, False
        for i, f in enumerate(expr.factors):
            ab = abelianization(f)
            blocks.append(Block(f"factor[{i}]", pos, pos + ab.free_rank))
            pos += ab.free_rank
            torsion = torsion or ab.has_torsion
        return AbelBasis(pos, torsion, tuple(blocks))
    if isinstance(expr, WREATH_TYPES):
        h = abelianization(expr.base)
        g = abelianization(expr.top)
        blocks, pos = [], 0
        for o in expr.gset.orbits:
            blocks.append(Block(f"orbit[{o.label}]", pos, pos + h.free_rank))
            pos += h.free_rank
        blocks.append(Block("top", pos, pos + g.free_rank))
        return AbelBasis(pos + g.free_rank, h.has_torsion or g.has_torsion, tuple(blocks))
    raise GroupExprError(f"not a group expression: {expr!r}")


def free_rank(expr: GroupExpr) -> int:
    return abelianization(expr).free_rank


# -- finiteness ---------------------------------------------------------------


@dataclass(frozen=True)
class FinitenessReport:
    fg: bool
    fp: bool
    reasons: tuple[str, ...] = ()


def validate_finiteness(expr: GroupExpr) -> FinitenessReport:
    """Decide finite generation and finite presentability from the data.

    Wreath products follow Cornulier's criteria: finitely generated iff base
    and top are and there are finitely many orbits (always true for a
    :class:`GSetSpec`); finitely presented iff in addition base and top are
    finitely presented, the stabilizers are finitely generated and the
    diagonal action on X x X has finitely many orbits.
    """
    _check_expr(expr)
    fg, fp, reasons = _finiteness(expr, "")
    return FinitenessReport(fg, fp and fg, tuple(reasons))


def _finiteness(expr, path):
    where = path or "group"
    if isinstance(expr, (FreeAbelian, Free, CyclicFinite)):
        return True, True, []
    if isinstance(expr, AnnotatedAtom):
        if expr.finitely_presented:
            return True, True, []
        return True, False, [f"{where}: annotated atom {expr.name!r} is not declared finitely presented"]
    if isinstance(expr, DirectProduct):
        fg, fp, reasons = True, True, []
        for i, f in enumerate(expr.factors):
            a, b, r = _finiteness(f, f"{path}factor[{i}]/")
            fg, fp = fg and a, fp and b
            reasons += r
        return fg, fp, reasons
    if isinstance(expr, WREATH_TYPES):
        hfg, hfp, hr = _finiteness(expr.base, f"{path}base/")
        gfg, gfp, gr = _finiteness(expr.top, f"{path}top/")
        reasons = hr + gr
        fg = hfg and gfg
        fp = hfp and gfp
        if isinstance(expr, GraphWreath):
            reasons.append(f"{where}: no finite presentability criterion is modelled for graph-wreath products")
            return fg, False, reasons
        for o in expr.gset.orbits:
            if not o.stabilizer.finitely_generated:
                fp = False
                reasons.append(f"{where}: stabilizer of orbit {o.label!r} is not finitely generated")
        if expr.gset.pairs is None:
            fp = False
            reasons.append(f"{where}: no pair-orbit data for the diagonal action on X x X")
        else:
            for p in expr.gset.pairs:
                if p.multiplicity == INF:
                    fp = False
                    reasons.append(
                        f"{where}: the diagonal action on X x X has infinitely many orbits "
                        f"(pair record {p.label!r})"
                    )
        return fg, fp, reasons
    raise GroupExprError(f"not a group expression: {expr!r}")


# -- constructors for common actions ------------------------------------------


def trivial_stabilizer() -> StabilizerData:
    return StabilizerData(FreeAbelian(0), ())


def whole_group_stabilizer(top: GroupExpr) -> StabilizerData:
    """Stabilizer of a fixed point: G itself, mapping identically."""
    n = free_rank(top)
    images = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
    return StabilizerData(top, images)


def group_order(expr: GroupExpr) -> OrbitSize:
    if isinstance(expr, CyclicFinite):
        return expr.modulus
    if isinstance(expr, (FreeAbelian, Free)) and expr.rank == 0:
        return 1
    if isinstance(expr, DirectProduct):
        return math.prod(group_order(f) for f in expr.factors)
    return INF


def regular_gset(top: GroupExpr, label: str = "x") -> GSetSpec:
    """X = G with left multiplication: one free orbit."""
    order = group_order(top)
    if order == 1:
        raise GroupExprError("the regular G-set of the trivial group is a single fixed point")
    pairs = [PairOrbitRecord(f"diag:{label}", (), 1, (label, label), diagonal=True)]
    pairs.append(PairOrbitRecord(f"offdiag:{label}", (), order - 1 if order != INF else INF, (label, label)))
    return GSetSpec((OrbitRecord(label, order, trivial_stabilizer()),), tuple(pairs), RegularAction())


def lattice_gset(dim: int, lattice: Sequence[Sequence[int]], label: str = "x") -> GSetSpec:
    """X = Z^dim / L with translation action; every stabilizer equals L."""
    from .lab.lattice import lattice_basis, quotient_order

    basis = lattice_basis(dim, lattice)
    order = quotient_order(dim, basis)
    stab = StabilizerData(FreeAbelian(len(basis)), tuple(tuple(r) for r in basis))
    pairs = [PairOrbitRecord(f"diag:{label}", stab.images, 1, (label, label), diagonal=True)]
    if order != 1:
        pairs.append(
            PairOrbitRecord(
                f"offdiag:{label}", stab.images, order - 1 if order != INF else INF, (label, label)
            )
        )
    return GSetSpec((OrbitRecord(label, order, stab),), tuple(pairs), LatticeAction(tuple(map(tuple, basis))))


def stabilizer_restriction_zero(images: Sequence[Vector], theta: Sequence) -> bool:
    """True iff the character ``theta`` on G vanishes on the stabilizer image."""
    return all(dot(theta, v) == 0 for v in images) if images else True


__all__ = [
    "INF",
    "GroupExpr",
    "FreeAbelian",
    "Free",
    "CyclicFinite",
    "DirectProduct",
    "Wreath",
    "GraphWreath",
    "AnnotatedAtom",
    "Cone",
    "SphereRegion",
    "StabilizerData",
    "OrbitRecord",
    "PairOrbitRecord",
    "GSetSpec",
    "RegularAction",
    "LatticeAction",
    "AbelBasis",
    "Block",
    "FinitenessReport",
    "abelianization",
    "free_rank",
    "validate_finiteness",
    "is_trivial",
    "regular_gset",
    "lattice_gset",
    "trivial_stabilizer",
    "whole_group_stabilizer",
    "group_order",
]
