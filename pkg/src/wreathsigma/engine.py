"""Tri-state decision engine for [chi] in Sigma^1 and [chi] in Sigma^2.

The engine recurses on the group expression.  Every step records the rule
it applied, so a :class:`Verdict` is both an answer and its justification.
Boolean combinations of sub-answers use Kleene's three-valued logic: a
combination is ``In`` or ``Out`` only when the known parts already decide it.
"""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import citations as C
from .character import (
    Character,
    Ray,
    TSize,
    require_nonzero,
    restrict,
    restriction_is_zero,
    support_T,
    wreath_parts,
)
from .errors import CharacterError, MissingPairDataError, NotFinitelyPresentedError
from .groups import (
    INF,
    WREATH_TYPES,
    AnnotatedAtom,
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GraphWreath,
    GroupExpr,
    GSetSpec,
    Wreath,
    free_rank,
    validate_finiteness,
)


class Status(enum.Enum):
    IN = "In"
    OUT = "Out"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, flag: bool) -> "Status":
        return cls.IN if flag else cls.OUT


def any_of(statuses: Iterable[Status]) -> Status:
    statuses = list(statuses)
    if Status.IN in statuses:
        return Status.IN
    if all(s is Status.OUT for s in statuses):
        return Status.OUT
    return Status.UNKNOWN


def all_of(statuses: Iterable[Status]) -> Status:
    statuses = list(statuses)
    if Status.OUT in statuses:
        return Status.OUT
    if all(s is Status.IN for s in statuses):
        return Status.IN
    return Status.UNKNOWN


@dataclass(frozen=True)
class RuleApplication:
    rule_id: str
    citation: str
    note: str
    sub_verdicts: tuple["Verdict", ...] = ()


@dataclass(frozen=True)
class Verdict:
    status: Status
    level: int
    subject: str
    trace: tuple[RuleApplication, ...] = field(default=())

    def walk(self) -> Iterator[RuleApplication]:
        """All rule applications, depth first."""
        for step in self.trace:
            yield step
            for sub in step.sub_verdicts:
                yield from sub.walk()

    def cites(self, text: str) -> bool:
        return any(text in step.citation for step in self.walk())


def _verdict(status, level, chi, rule, note, subs=()):
    return Verdict(
        status,
        level,
        f"{_describe(chi.group)} at {chi}",
        (RuleApplication(rule.id, rule.citation, note, tuple(subs)),),
    )


def _describe(g: GroupExpr) -> str:
    if isinstance(g, FreeAbelian):
        return f"Z^{g.rank}"
    if isinstance(g, Free):
        return f"F_{g.rank}"
    if isinstance(g, CyclicFinite):
        return f"Z/{g.modulus}"
    if isinstance(g, AnnotatedAtom):
        return g.name
    if isinstance(g, DirectProduct):
        return "(" + " x ".join(_describe(f) for f in g.factors) + ")"
    if isinstance(g, WREATH_TYPES):
        sym = "wr" if isinstance(g, Wreath) else "gwr"
        return f"({_describe(g.base)} {sym}_X {_describe(g.top)}, {len(g.gset.orbits)} orbit(s))"
    return type(g).__name__


def _check(expr: GroupExpr, chi: Character) -> None:
    if chi.group != expr:
        raise CharacterError("character is defined on a different group expression")
    require_nonzero(chi)


# -- Sigma^1 ------------------------------------------------------------------


def sigma1(expr: GroupExpr, chi: Character) -> Verdict:
    """Decide [chi] in Sigma^1(expr)."""
    _check(expr, chi)
    return _sigma1(chi)


def _sigma1(chi: Character) -> Verdict:
    g = chi.group
    if isinstance(g, FreeAbelian):
        return _verdict(Status.IN, 1, chi, C.A1_ABELIAN, "free abelian group")
    if isinstance(g, Free):
        if g.rank == 1:
            return _verdict(Status.IN, 1, chi, C.A1_ABELIAN, "F_1 is infinite cyclic")
        return _verdict(Status.OUT, 1, chi, C.A1_FREE, f"free group of rank {g.rank}")
    if isinstance(g, AnnotatedAtom):
        if g.sigma1 is None:
            return _verdict(Status.UNKNOWN, 1, chi, C.A_ANNOTATED, "no Sigma^1 data supplied")
        return _verdict(Status.of(g.sigma1.contains(chi.values)), 1, chi, C.A_ANNOTATED, "region lookup")
    if isinstance(g, DirectProduct):
        return _product1(chi)
    if isinstance(g, WREATH_TYPES):
        return _wreath1(chi)
    raise CharacterError(f"{_describe(g)} has no nonzero characters")


def _split(chi: Character) -> tuple[Character, Character]:
    factors = chi.group.factors
    n0 = free_rank(factors[0])
    right = factors[1] if len(factors) == 2 else DirectProduct(factors[1:])
    return Character(factors[0], chi.values[:n0]), Character(right, chi.values[n0:])


def _product1(chi: Character) -> Verdict:
    if len(chi.group.factors) == 1:
        return _sigma1(Character(chi.group.factors[0], chi.values))
    left, right = _split(chi)
    if not left.is_zero and not right.is_zero:
        return _verdict(Status.IN, 1, chi, C.P1, "both factor characters are nonzero")
    side, which = (left, "first") if not left.is_zero else (right, "second")
    sub = _sigma1(side)
    return _verdict(
        sub.status, 1, chi, C.P1, f"only the {which} factor character is nonzero; its Sigma^1 decides", [sub]
    )


def _wreath1(chi: Character) -> Verdict:
    g = chi.group
    parts = wreath_parts(chi)
    graph = isinstance(g, GraphWreath)
    if parts.vanishes_on_base:
        theta = parts.theta
        sub = _sigma1(theta)
        dead = [o.label for o in g.gset.orbits if restriction_is_zero(theta.values, o.stabilizer.images)]
        if dead:
            rule = C.GW1 if graph else C.W1_STAB
            note = f"chi|_M = 0 and chi|_G_x = 0 for orbit(s) {', '.join(dead)}"
            return _verdict(Status.OUT, 1, chi, rule, note, [sub])
        rule = C.GW1 if graph else C.W1
        note = "chi|_M = 0, chi|_G_x != 0 for every orbit; Sigma^1(G) decides"
        return _verdict(sub.status, 1, chi, rule, note, [sub])
    if graph:
        return _verdict(Status.UNKNOWN, 1, chi, C.GW_GAP, "graph-wreath product with chi|_M != 0")
    T = support_T(chi)
    moving = [o for o in g.gset.orbits if o.label in T.orbits and o.size != 1]
    if moving:
        return _verdict(
            Status.IN, 1, chi, C.W2_ORBIT, f"chi|_H_x != 0 on orbit {moving[0].label!r} of size {_size(moving[0].size)}"
        )
    if T.size.at_least_two:
        return _verdict(Status.IN, 1, chi, C.W2_SINGLETONS, f"T consists of {len(T.orbits)} fixed points")
    if not parts.theta.is_zero:
        return _verdict(Status.IN, 1, chi, C.W2_SINGLETONS, "T = {x1} and chi|_G != 0")
    idx = [o.label for o in g.gset.orbits].index(T.orbits[0])
    sub = _sigma1(parts.etas[idx])
    return _verdict(sub.status, 1, chi, C.W2_SINGLETONS, "T = {x1}, chi|_G = 0; Sigma^1(H) decides", [sub])


def _size(size) -> str:
    return "inf" if size == INF else str(size)


# -- Sigma^2 ------------------------------------------------------------------


def sigma2(expr: GroupExpr, chi: Character) -> Verdict:
    """Decide [chi] in Sigma^2(expr); ``expr`` must be finitely presented."""
    _check(expr, chi)
    check_sigma2_preconditions(expr)
    return _sigma2(chi)


def check_sigma2_preconditions(expr: GroupExpr) -> None:
    _require_pair_data(expr)
    report = validate_finiteness(expr)
    if not report.fp:
        raise NotFinitelyPresentedError(report.reasons)


def _require_pair_data(expr: GroupExpr, path: str = "group") -> None:
    if isinstance(expr, DirectProduct):
        for i, f in enumerate(expr.factors):
            _require_pair_data(f, f"{path}/factor[{i}]")
    elif isinstance(expr, WREATH_TYPES):
        if isinstance(expr, Wreath) and expr.gset.pairs is None:
            raise MissingPairDataError(f"{path}: wreath node has no pair-orbit data; Sigma^2 needs it")
        _require_pair_data(expr.base, f"{path}/base")
        _require_pair_data(expr.top, f"{path}/top")


def _sigma2(chi: Character) -> Verdict:
    g = chi.group
    if isinstance(g, FreeAbelian):
        return _verdict(Status.IN, 2, chi, C.A2_ABELIAN, "free abelian group")
    if isinstance(g, Free):
        if g.rank == 1:
            return _verdict(Status.IN, 2, chi, C.A2_ABELIAN, "F_1 is infinite cyclic")
        return _verdict(Status.OUT, 2, chi, C.A2_FREE, f"free group of rank {g.rank}")
    if isinstance(g, AnnotatedAtom):
        s1 = Status.UNKNOWN if g.sigma1 is None else Status.of(g.sigma1.contains(chi.values))
        s2 = Status.UNKNOWN if g.sigma2 is None else Status.of(g.sigma2.contains(chi.values))
        return _verdict(all_of([s1, s2]), 2, chi, C.A2_ANNOTATED, f"Sigma^1 region: {s1.value}, Sigma^2 region: {s2.value}")
    if isinstance(g, DirectProduct):
        return _product2(chi)
    if isinstance(g, Wreath):
        T = support_T(chi)
        if T.size is TSize.ZERO:
            return _wreath2_top(chi)
        if T.size is TSize.ONE:
            return _wreath2_single(chi, T.orbits[0])
        return _wreath2_spread(chi, T)
    if isinstance(g, GraphWreath):
        return _verdict(Status.UNKNOWN, 2, chi, C.GW_GAP, "Sigma^2 of graph-wreath products is not classified")
    raise CharacterError(f"{_describe(g)} has no nonzero characters")


def _product2(chi: Character) -> Verdict:
    if len(chi.group.factors) == 1:
        return _sigma2(Character(chi.group.factors[0], chi.values))
    left, right = _split(chi)
    subs, clauses, notes = [], [], []
    s1 = {}
    for name, side in (("1", left), ("2", right)):
        if side.is_zero:
            s1[name] = s2 = Status.OUT
        else:
            v1, v2 = _sigma1(side), _sigma2(side)
            subs += [v1, v2]
            s1[name], s2 = v1.status, v2.status
        clauses.append(s2)
        notes.append(f"Sigma^2(G{name}): {s2.value}")
    clauses.append(all_of([s1["1"], Status.of(not right.is_zero)]))
    clauses.append(all_of([s1["2"], Status.of(not left.is_zero)]))
    notes.append(f"Sigma^1(G1): {s1['1'].value}, chi_2 != 0: {not right.is_zero}")
    notes.append(f"Sigma^1(G2): {s1['2'].value}, chi_1 != 0: {not left.is_zero}")
    return _verdict(any_of(clauses), 2, chi, C.P2, "; ".join(notes), subs)


def _wreath2_spread(chi: Character, T) -> Verdict:
    g = chi.group
    parts = wreath_parts(chi)
    subs = [_sigma1(e) for o, e in zip(g.gset.orbits, parts.etas) if o.label in T.orbits]
    base = any_of(v.status for v in subs)
    theta_nonzero = not parts.theta.is_zero
    status = any_of([base, Status.of(theta_nonzero), Status.of(T.size.at_least_three)])
    note = (
        f"|T| class {T.size.value}; Sigma^1(H) on T: {base.value}; chi|_G != 0: {theta_nonzero}"
    )
    return _verdict(status, 2, chi, C.W3, note, subs)


def _wreath2_single(chi: Character, label: str) -> Verdict:
    g: Wreath = chi.group
    parts = wreath_parts(chi)
    labels = [o.label for o in g.gset.orbits]
    eta = parts.etas[labels.index(label)]
    rest = [o for o in g.gset.orbits if o.label != label]
    if rest:
        pairs = tuple(p for p in g.gset.pairs if p.between is None or label not in p.between)
        second = Wreath(g.base, g.top, GSetSpec(tuple(rest), pairs))
        second_values = tuple(v for o, e in zip(g.gset.orbits, parts.etas) if o.label != label for v in e.values)
        second_values += parts.theta.values
    else:
        second = g.top
        second_values = parts.theta.values
    product = Character(DirectProduct((g.base, second)), eta.values + second_values)
    sub = _product2(product)
    note = f"T = {{{label}}}: split off the copy of H at the fixed point and apply the product formula"
    return _verdict(sub.status, 2, chi, C.W3_SINGLE, note, [sub])


def _wreath2_top(chi: Character) -> Verdict:
    g: Wreath = chi.group
    theta = wreath_parts(chi).theta
    c1 = _sigma2(theta)
    stab_verdicts, stab_status = [], []
    for o in g.gset.orbits:
        r = restrict(theta, o.stabilizer)
        if r.is_zero:
            stab_status.append(Status.OUT)
        else:
            v = _sigma1(r)
            stab_verdicts.append(v)
            stab_status.append(v.status)
    c2 = all_of(stab_status)
    dead_pairs = [p.label for p in g.gset.pairs if restriction_is_zero(theta.values, p.images)]
    h_infinite = free_rank(g.base) >= 1
    subs = [c1] + stab_verdicts
    summary = (
        f"(1) Sigma^2(G): {c1.status.value}; (2) Sigma^1(G_x) for all x: {c2.value}; "
        f"(3) chi|_G_(x,y) != 0 for all pairs: {not dead_pairs}"
    )
    if c1.status is Status.OUT:
        return _verdict(Status.OUT, 2, chi, C.W4_RETRACT, summary + "; condition (1) fails", subs)
    if dead_pairs:
        note = summary + f"; condition (3) fails on pair record(s) {', '.join(dead_pairs)}"
        return _verdict(Status.OUT, 2, chi, C.W4_PAIRS, note, subs)
    if c2 is Status.OUT and h_infinite:
        return _verdict(Status.OUT, 2, chi, C.W4_STAB_NECESSARY, summary + "; condition (2) fails, H^ab infinite", subs)
    if c1.status is Status.IN and c2 is Status.IN:
        return _verdict(Status.IN, 2, chi, C.W4, summary + "; all three conditions hold", subs)
    if c2 is Status.OUT:
        return _verdict(Status.UNKNOWN, 2, chi, C.W4_GAP, summary + "; H^ab finite", subs)
    return _verdict(Status.UNKNOWN, 2, chi, C.W4, summary + "; a sub-verdict is Unknown", subs)


# -- sphere sampling ----------------------------------------------------------


def ray_grid(group: GroupExpr, resolution: int) -> list[Ray]:
    """Rays through the nonzero integer vectors of max-norm <= resolution,
    one per ray (primitive vectors), in canonical order."""
    n = free_rank(group)
    rays = set()
    for v in itertools.product(range(-resolution, resolution + 1), repeat=n):
        if any(v) and math.gcd(*v) == 1:
            rays.add(Ray.of(Character(group, v)))
    return sorted(rays, key=lambda r: r.values)


@dataclass(frozen=True)
class SphereSummary:
    level: int
    resolution: int
    dimension: int
    sample_count: int
    counts: dict
    components: tuple[str, ...]
    samples: tuple[tuple[Ray, Status], ...]

    def status_of(self, values: Sequence) -> Status:
        target = Ray.of(Character(self.samples[0][0].group, values))
        for ray, st in self.samples:
            if ray == target:
                return st
        raise KeyError(values)


def _evaluate(args) -> Status:
    level, chi = args
    return (_sigma1 if level == 1 else _sigma2)(chi).status


def sample_sphere(expr: GroupExpr, level: int, resolution: int, workers: int = 1) -> SphereSummary:
    """Evaluate the engine on the deterministic ray grid of ``expr``."""
    if level not in (1, 2):
        raise ValueError("level must be 1 or 2")
    n = free_rank(expr)
    if n < 1:
        raise CharacterError("the character sphere is empty (free rank 0)")
    if level == 2:
        check_sigma2_preconditions(expr)
    rays = ray_grid(expr, resolution)
    jobs = [(level, r.character()) for r in rays]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            statuses = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        statuses = [_evaluate(j) for j in jobs]
    counts = {s.value: statuses.count(s) for s in Status}
    samples = tuple(zip(rays, statuses))
    return SphereSummary(level, resolution, n - 1, len(rays), counts, _components(expr, samples), samples)


def _components(expr, samples) -> tuple[str, ...]:
    if not isinstance(expr, WREATH_TYPES):
        return ()
    k = len(expr.gset.orbits) * free_rank(expr.base)
    out = []
    for name, lo, hi, dim in (("chi|_M = 0", k, None, free_rank(expr.top)), ("chi|_G = 0", 0, k, k)):
        if dim == 0:
            out.append(f"{{{name}}} is empty")
            continue
        inside = [
            st
            for ray, st in samples
            if all(v == 0 for i, v in enumerate(ray.values) if (i < lo if hi is None else i >= hi))
        ]
        tally = ", ".join(f"{s.value}={inside.count(s)}" for s in Status if inside.count(s))
        shape = "two rays" if dim == 1 else f"a sphere of dimension {dim - 1}"
        out.append(f"{{{name}}} is {shape}; {len(inside)} sampled ray(s): {tally}")
    return tuple(out)
