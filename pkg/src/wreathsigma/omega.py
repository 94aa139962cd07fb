"""Koban's invariant Omega^1 for wreath products and the twisted-conjugacy
conclusions that follow from it."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import citations as C
from .errors import GroupExprError
from .groups import AnnotatedAtom, Free, GroupExpr, Wreath, free_rank, validate_finiteness
from .rational import rank


class HypothesisStatus(enum.Enum):
    CERTIFIED = "Certified"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Hypothesis:
    status: HypothesisStatus
    reason: str
    rule_id: Optional[str] = None
    citation: Optional[str] = None

    @property
    def certified(self) -> bool:
        return self.status is HypothesisStatus.CERTIFIED


def _require_wreath(expr: GroupExpr) -> Wreath:
    if not isinstance(expr, Wreath):
        raise GroupExprError("Omega^1 is computed for permutational wreath products only")
    if not validate_finiteness(expr).fg:
        raise GroupExprError("the wreath product must be finitely generated")
    return expr


def _sigma1_top_empty(top: GroupExpr) -> bool:
    """Cases where Sigma^1(G) = {} is known without sampling."""
    if isinstance(top, Free):
        return top.rank >= 2
    if isinstance(top, AnnotatedAtom) and top.sigma1 is not None:
        return any(not c.equalities and not c.positives for c in top.sigma1.excluded)
    return False


def prop1_hypothesis(expr: GroupExpr) -> Hypothesis:
    """Check that Sigma^1(Gamma) = {[chi] : chi|_M != 0} via one of the
    listed sufficient conditions."""
    g = _require_wreath(expr)
    fixed = [o.label for o in g.gset.orbits if o.size == 1]
    if fixed:
        return Hypothesis(HypothesisStatus.UNKNOWN, f"orbit(s) {', '.join(fixed)} are fixed points")
    for o in g.gset.orbits:
        stab = o.stabilizer
        if stab.finitely_generated and free_rank(stab.group) == 0:
            return Hypothesis(
                HypothesisStatus.CERTIFIED,
                f"no fixed points; stabilizer of orbit {o.label!r} has finite abelianization",
                C.OMEGA_COND1.id,
                C.OMEGA_COND1.citation,
            )
    for o in g.gset.orbits:
        if rank(o.stabilizer.images) == 0:
            return Hypothesis(
                HypothesisStatus.CERTIFIED,
                f"no fixed points; every character of G vanishes on the stabilizer of orbit {o.label!r}",
                C.OMEGA_COND2.id,
                C.OMEGA_COND2.citation,
            )
    if _sigma1_top_empty(g.top):
        return Hypothesis(
            HypothesisStatus.CERTIFIED,
            "no fixed points; Sigma^1(G) is empty",
            C.OMEGA_COND2.id,
            C.OMEGA_COND2.citation,
        )
    return Hypothesis(HypothesisStatus.UNKNOWN, "no listed sufficient condition applies")


class Cardinality(enum.Enum):
    EMPTY = "empty"
    TWO_POINTS = "two points"
    POSITIVE_DIMENSIONAL = "positive-dimensional"


@dataclass(frozen=True)
class Omega1Description:
    hypothesis: Hypothesis
    region: Optional[str] = None
    base_coordinates: Optional[tuple[int, int]] = None
    cardinality: Optional[Cardinality] = None
    sphere_dimension: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.hypothesis.certified


def omega1(expr: GroupExpr) -> Omega1Description:
    g = _require_wreath(expr)
    hyp = prop1_hypothesis(g)
    if not hyp.certified:
        return Omega1Description(hyp)
    k = len(g.gset.orbits) * free_rank(g.base)
    n = free_rank(g)
    if k == 0:
        card = Cardinality.EMPTY
    elif k == 1:
        card = Cardinality.TWO_POINTS
    else:
        card = Cardinality.POSITIVE_DIMENSIONAL
    region = f"{{[chi] : chi|_G = 0}} (coordinates {k}..{n - 1} vanish)"
    return Omega1Description(hyp, region, (0, k), card, k - 1 if k else None)


class ReidKind(enum.Enum):
    INDEX_TWO = "IndexTwoSubgroupRInfinity"
    FINITE_INDEX = "FiniteIndexSubgroupRInfinity"
    FULL = "FullRInfinity"


@dataclass(frozen=True)
class ReidConclusion:
    kind: ReidKind
    statement: str
    citation: str
    trail: tuple[str, ...]


def reidemeister_conclusions(expr: GroupExpr) -> list[ReidConclusion]:
    g = _require_wreath(expr)
    hyp = prop1_hypothesis(g)
    out: list[ReidConclusion] = []
    if not hyp.certified:
        return out
    base = [f"{hyp.citation}: {hyp.reason}", "every rational character is discrete"]
    h_rank, g_rank = free_rank(g.base), free_rank(g.top)
    if g.gset.transitive and h_rank == 1:
        out.append(
            ReidConclusion(
                ReidKind.INDEX_TWO,
                C.REID_INDEX_TWO.statement,
                C.REID_INDEX_TWO.citation,
                tuple(base + ["transitive action", "rank(H^ab) = 1, so Omega^1 is two discrete points"]),
            )
        )
    if g_rank == 1:
        out.append(
            ReidConclusion(
                ReidKind.FINITE_INDEX,
                C.REID_FINITE_INDEX.statement,
                C.REID_FINITE_INDEX.citation,
                tuple(base + ["rank(G^ab) = 1, so the complement of Sigma^1 is two discrete rays"]),
            )
        )
    # Omega^1 = {chi|_G = 0} is a sphere, so it is never a single point here.
    return out
