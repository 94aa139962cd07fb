"""Renz's criterion for Sigma^1: certificates, verification and bounded search.

A certificate fixes a word ``t`` with chi(t) > 0 and adds it to the
generating set as an extra letter.  For every letter x of the symmetric
generating set other than t itself it supplies a word w_x, over the
extended alphabet, representing t^-1 x t with v_chi(t^-1 x t) < v_chi(w_x).
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import LabError, ResourceCapError
from ..rational import fmt, to_fraction
from .concrete import ConcreteGroup, Element
from .words import Letter, Word, format_word, letters, parse_word

SEARCH_CAP = 10**6


def chi_value(group: ConcreteGroup, chi: Sequence, elem: Element) -> Fraction:
    return group.chi(chi, elem)


class Extended:
    """The group with one extra letter standing for the word ``t``."""

    def __init__(self, group: ConcreteGroup, t: Word, t_name: Optional[str] = None):
        self.group = group
        self.t = t
        self.t_name = t_name or _fresh_name(group.alphabet)
        self.alphabet = group.alphabet + (self.t_name,)
        self.t_elem = group.evaluate(t)
        self._t_inv = group.inv(self.t_elem)

    def letter(self, x: Letter) -> Element:
        if x[0] == self.t_name:
            return self.t_elem if x[1] > 0 else self._t_inv
        return self.group.letter(x)

    def evaluate(self, word: Word) -> Element:
        out = self.group.identity
        for x in word:
            out = self.group.mul(out, self.letter(x))
        return out

    def parse(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def required_letters(self) -> list[Letter]:
        """Letters needing a rewriting word: X^{+-1}, minus t^{+-1} when t is a letter."""
        skip = {self.t[0][0]} if len(self.t) == 1 else set()
        return [x for x in letters(self.group.alphabet) if x[0] not in skip]


def _fresh_name(alphabet: Sequence[str]) -> str:
    for name in itertools.chain(["t"], (f"t{i}" for i in itertools.count(1))):
        if name not in alphabet:
            return name
    raise AssertionError  # unreachable


def v_chi(group, chi: Sequence, word: Word) -> Fraction:
    """Minimum of chi over the nonempty prefixes of ``word``; 0 for the empty word.

    ``group`` may be a :class:`ConcreteGroup` or an :class:`Extended` one.
    """
    base = group.group if isinstance(group, Extended) else group
    total, best = Fraction(0), None
    for x in word:
        total += base.chi(chi, group.letter(x))
        best = total if best is None else min(best, total)
    return Fraction(0) if best is None else best


def letter_key(x: Letter) -> str:
    return x[0] if x[1] > 0 else f"{x[0]}^-1"


@dataclass(frozen=True)
class RenzCertificate:
    t: Word
    table: tuple[tuple[Letter, Word], ...]
    t_name: str = "t"

    def to_json(self) -> dict:
        return {
            "t": format_word(self.t),
            "t_letter": self.t_name,
            "table": {letter_key(x): format_word(w) for x, w in self.table},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, group: ConcreteGroup, data) -> "RenzCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        t = parse_word(data["t"], group.alphabet)
        ext = Extended(group, t, data.get("t_letter"))
        table = []
        for key, text in data["table"].items():
            x = parse_word(key, group.alphabet)
            if len(x) != 1:
                raise LabError(f"table key {key!r} is not a single letter")
            table.append((x[0], ext.parse(text)))
        return cls(t, tuple(table), ext.t_name)

    @classmethod
    def build(cls, group: ConcreteGroup, t: str, table: dict, t_name: Optional[str] = None):
        return cls.from_json(group, {"t": t, "t_letter": t_name, "table": table})


@dataclass(frozen=True)
class RenzFailure:
    letter: Optional[str]
    clause: str  # positivity | coverage | group-equality | valuation
    detail: str


@dataclass(frozen=True)
class RenzCheck:
    ok: bool
    failures: tuple[RenzFailure, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_renz_certificate(group: ConcreteGroup, chi: Sequence, cert: RenzCertificate) -> RenzCheck:
    chi = [to_fraction(v) for v in chi]
    ext = Extended(group, cert.t, cert.t_name)
    failures = []
    ct = chi_value(group, chi, ext.t_elem)
    if ct <= 0:
        failures.append(RenzFailure(None, "positivity", f"chi(t) = {fmt(ct)} is not positive"))
    given = dict(cert.table)
    need = ext.required_letters()
    for x in need:
        if x not in given:
            failures.append(RenzFailure(letter_key(x), "coverage", "no rewriting word supplied"))
    for x, w in cert.table:
        if x not in need:
            failures.append(RenzFailure(letter_key(x), "coverage", "t itself needs no rewriting word"))
            continue
        lhs = ((ext.t_name, -1), x, (ext.t_name, 1))
        if ext.evaluate(w) != ext.evaluate(lhs):
            failures.append(
                RenzFailure(letter_key(x), "group-equality", f"{format_word(w)} does not represent t^-1 x t")
            )
            continue
        a, b = v_chi(ext, chi, lhs), v_chi(ext, chi, w)
        if not a < b:
            failures.append(
                RenzFailure(
                    letter_key(x), "valuation", f"v_chi(t^-1 x t) = {fmt(a)} is not below v_chi(w) = {fmt(b)}"
                )
            )
    return RenzCheck(not failures, tuple(failures))


def candidate_ts(group: ConcreteGroup, chi: Sequence, max_len: int):
    """Freely reduced words of length <= max_len with chi > 0, shortlex,
    one word per group element."""
    lets = letters(group.alphabet)
    seen = set()
    for n in range(1, max_len + 1):
        for word in itertools.product(lets, repeat=n):
            if any(word[i][0] == word[i + 1][0] and word[i][1] == -word[i + 1][1] for i in range(n - 1)):
                continue
            elem = group.evaluate(word)
            if elem in seen:
                continue
            seen.add(elem)
            if group.chi(chi, elem) > 0:
                yield word


class _RegionSearch:
    """Breadth-first search from the identity over words whose nonempty
    prefixes all have chi > floor, up to a length bound."""

    def __init__(self, ext: Extended, chi, floor: Fraction, max_len: int, budget: list):
        self.found: dict = {}
        lets = letters(ext.alphabet)
        steps = [(x, ext.letter(x), ext.group.chi(chi, ext.letter(x))) for x in lets]
        g = ext.group
        start = g.identity
        words = {start: ()}
        frontier = deque([(start, Fraction(0))])
        for _ in range(max_len):
            nxt = deque()
            for elem, val in frontier:
                base = words[elem]
                for x, step, dv in steps:
                    nv = val + dv
                    if nv <= floor:
                        continue
                    e2 = g.mul(elem, step)
                    if e2 in words:
                        continue
                    words[e2] = base + (x,)
                    nxt.append((e2, nv))
                    budget[0] += 1
                    if budget[0] > SEARCH_CAP:
                        raise ResourceCapError(
                            f"certificate search exceeded {SEARCH_CAP} visited elements", {"visited": budget[0]}
                        )
            frontier = nxt
        self.words = words


def find_renz_certificate(
    group: ConcreteGroup, chi: Sequence, max_t_len: int, max_w_len: int
) -> Optional[RenzCertificate]:
    """First certificate in the deterministic search order, or None (which
    is inconclusive: it is not a proof that [chi] lies outside Sigma^1)."""
    if max_t_len < 1 or max_w_len < 1:
        raise LabError("length bounds must be >= 1")
    chi = [to_fraction(v) for v in chi]
    if all(v == 0 for v in chi):
        raise LabError("the character must be nonzero")
    budget = [0]
    for t in candidate_ts(group, chi, max_t_len):
        ext = Extended(group, t)
        ct = group.chi(chi, ext.t_elem)
        searches: dict = {}
        table = []
        for x in ext.required_letters():
            cx = group.chi(chi, group.letter(x))
            floor = min(-ct, -ct + cx, cx)
            if floor not in searches:
                searches[floor] = _RegionSearch(ext, chi, floor, max_w_len, budget)
            target = group.mul(group.mul(ext._t_inv, group.letter(x)), ext.t_elem)
            w = searches[floor].words.get(target)
            if w is None:
                break
            table.append((x, w))
        else:
            return RenzCertificate(t, tuple(table), ext.t_name)
    return None
