"""Workspace language: named groups and characters.

::

    # comments run to the end of the line
    group L = wreath(base=cyclic(2), top=Z(1), orbits=[{size=inf, stab=Z(0), stabmap=[]}])
    group G = product(free(2), Z(1))
    group W = zwrz
    char theta on L = [1]
    char c on G = [1/2, -1, 3]

A statement ends at a newline unless a bracket is still open.  Calls:
``Z(n)``, ``free(k)``, ``cyclic(m)``, ``product(...)``, ``wreath(...)``,
``graphwreath(...)``, ``annotated(...)`` and the catalog shortcuts
(``lamplighter(m)``, ``zwrz``, ...).  A bare name refers to an earlier
group or to a catalog shortcut.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import catalog
from .character import Character
from .errors import CharacterError, DslError, GroupExprError
from .groups import (
    INF,
    AnnotatedAtom,
    Cone,
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GraphWreath,
    GroupExpr,
    GSetSpec,
    LatticeAction,
    OrbitRecord,
    PairOrbitRecord,
    RegularAction,
    SphereRegion,
    StabilizerData,
    Wreath,
    lattice_gset,
    regular_gset,
)
from .rational import fmt

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<num>-?\d+(?:/\d+)?)
  | (?P<str>"[^"\n]*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\]{},=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Tok]:
    out, line, start, pos = [], 1, 0, 0
    depth = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind, val = m.lastgroup, m.group()
        col = pos - start + 1
        if kind == "nl":
            if depth == 0:
                out.append(Tok("nl", "\n", line, col))
            line, start = line + 1, m.end()
        elif kind == "punct":
            depth += val in "([{"
            depth -= val in ")]}"
            out.append(Tok(val, val, line, col))
        elif kind not in ("ws", "comment"):
            out.append(Tok(kind, val, line, col))
        pos = m.end()
    out.append(Tok("nl", "\n", line, pos - start + 1))
    out.append(Tok("eof", "", line, pos - start + 1))
    return out


# -- generic value tree --------------------------------------------------------


@dataclass
class Call:
    name: str
    args: list
    kwargs: dict
    tok: Tok


@dataclass
class Ref:
    name: str
    tok: Tok


@dataclass
class Num:
    value: Fraction
    tok: Tok


@dataclass
class Str:
    value: str
    tok: Tok


@dataclass
class ListV:
    items: list
    tok: Tok


@dataclass
class DictV:
    items: dict
    tok: Tok


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def take(self, kind: Optional[str] = None, text: Optional[str] = None) -> Tok:
        t = self.cur
        if (kind and t.kind != kind) or (text and t.text != text):
            want = text or kind
            got = t.text if t.kind not in ("nl", "eof") else "end of statement"
            raise DslError(f"expected {want!r}, found {got!r}", t.line, t.col)
        self.i += 1
        return t

    def value(self):
        t = self.cur
        if t.kind == "num":
            self.i += 1
            return Num(Fraction(t.text), t)
        if t.kind == "str":
            self.i += 1
            return Str(t.text[1:-1], t)
        if t.kind == "[":
            self.i += 1
            items = self._seq("]", self.value)
            return ListV(items, t)
        if t.kind == "{":
            self.i += 1
            items = {}
            for key, val in self._seq("}", self._keyed):
                if key.text in items:
                    raise DslError(f"duplicate key {key.text!r}", key.line, key.col)
                items[key.text] = val
            return DictV(items, t)
        if t.kind == "name":
            self.i += 1
            if self.cur.kind == "(":
                self.i += 1
                args, kwargs = [], {}
                for item in self._seq(")", self._arg):
                    if isinstance(item, tuple):
                        if item[0].text in kwargs:
                            raise DslError(f"duplicate argument {item[0].text!r}", item[0].line, item[0].col)
                        kwargs[item[0].text] = item[1]
                    elif kwargs:
                        raise DslError("positional argument after keyword argument", t.line, t.col)
                    else:
                        args.append(item)
                return Call(t.text, args, kwargs, t)
            return Ref(t.text, t)
        got = t.text if t.kind not in ("nl", "eof") else "end of statement"
        raise DslError(f"expected a value, found {got!r}", t.line, t.col)

    def _seq(self, close, item):
        out = []
        if self.cur.kind == close:
            self.i += 1
            return out
        while True:
            out.append(item())
            if self.cur.kind == ",":
                self.i += 1
                if self.cur.kind == close:
                    self.i += 1
                    return out
                continue
            self.take(close)
            return out

    def _keyed(self):
        key = self.take("name")
        self.take("=")
        return key, self.value()

    def _arg(self):
        if self.cur.kind == "name" and self.toks[self.i + 1].kind == "=":
            return self._keyed()
        return self.value()


# -- workspace -----------------------------------------------------------------


@dataclass
class Workspace:
    groups: dict = field(default_factory=dict)
    chars: dict = field(default_factory=dict)
    char_groups: dict = field(default_factory=dict)
    letters: dict = field(default_factory=dict)

    def group(self, name: str) -> GroupExpr:
        if name in self.groups:
            return self.groups[name]
        entry = _catalog_entry(name, [])
        if entry is None:
            raise DslError(f"unknown group {name!r}")
        return entry.expr

    def letters_of(self, name: str) -> Optional[tuple[str, ...]]:
        if name in self.letters:
            return self.letters[name]
        entry = _catalog_entry(name, []) if name not in self.groups else None
        return entry.letters if entry else catalog.letters_for(self.group(name))

    def character(self, name: str) -> Character:
        if name not in self.chars:
            raise DslError(f"unknown character {name!r}")
        return self.chars[name]

    def merged(self, other: "Workspace") -> "Workspace":
        out = Workspace(dict(self.groups), dict(self.chars), dict(self.char_groups), dict(self.letters))
        for name, g in other.groups.items():
            out.groups[name] = g
            out.letters.pop(name, None)
        out.letters.update(other.letters)
        out.chars.update(other.chars)
        out.char_groups.update(other.char_groups)
        return out


def _catalog_entry(name: str, args: list):
    if name not in catalog.SHORTCUTS:
        return None
    ctor, arities = catalog.SHORTCUTS[name]
    if len(args) not in arities:
        raise DslError(f"{name} takes {' or '.join(map(str, arities))} argument(s)")
    return ctor(*args)


def parse_workspace(text: str, base: Optional[Workspace] = None) -> Workspace:
    """Parse workspace text.  Names from ``base`` may be referenced but not
    redefined."""
    p = _Parser(tokenize(text))
    ws = Workspace()
    known = base or Workspace()
    while p.cur.kind != "eof":
        if p.cur.kind == "nl":
            p.i += 1
            continue
        kw = p.take("name")
        if kw.text == "group":
            name = p.take("name")
            p.take("=")
            value = p.value()
            if name.text in ws.groups or name.text in known.groups:
                raise DslError(f"duplicate group name {name.text!r}", name.line, name.col)
            ev = _Eval(ws, known)
            ws.groups[name.text] = ev.group(value)
            if ev.letters is not None:
                ws.letters[name.text] = ev.letters
        elif kw.text == "char":
            name = p.take("name")
            p.take("name", "on")
            gname = p.take("name")
            p.take("=")
            value = p.value()
            if name.text in ws.chars or name.text in known.chars:
                raise DslError(f"duplicate character name {name.text!r}", name.line, name.col)
            ev = _Eval(ws, known)
            group = ev.group(Ref(gname.text, gname))
            vec = ev.vector(value)
            try:
                ws.chars[name.text] = Character(group, vec)
            except CharacterError as e:
                raise DslError(str(e), value.tok.line, value.tok.col) from None
            ws.char_groups[name.text] = gname.text
        else:
            raise DslError(f"expected 'group' or 'char', found {kw.text!r}", kw.line, kw.col)
        if p.cur.kind not in ("nl", "eof"):
            t = p.cur
            raise DslError(f"unexpected {t.text!r} after statement", t.line, t.col)
    return ws


class _Eval:
    def __init__(self, ws: Workspace, known: Workspace):
        self.ws = ws
        self.known = known
        self.letters = None

    def fail(self, node, msg):
        raise DslError(msg, node.tok.line, node.tok.col)

    def int_(self, node, minimum=None) -> int:
        if not isinstance(node, Num) or node.value.denominator != 1:
            self.fail(node, "expected an integer")
        v = int(node.value)
        if minimum is not None and v < minimum:
            self.fail(node, f"expected an integer >= {minimum}")
        return v

    def size(self, node):
        if isinstance(node, Ref) and node.name == "inf":
            return INF
        return self.int_(node, 1)

    def bool_(self, node) -> bool:
        if isinstance(node, Ref) and node.name in ("true", "false"):
            return node.name == "true"
        self.fail(node, "expected true or false")

    def list_(self, node) -> list:
        if not isinstance(node, ListV):
            self.fail(node, "expected a list")
        return node.items

    def vector(self, node) -> tuple:
        out = []
        for item in self.list_(node):
            if not isinstance(item, Num):
                self.fail(item, "expected a rational number")
            out.append(item.value)
        return tuple(out)

    def matrix(self, node) -> tuple:
        return tuple(self.vector(col) for col in self.list_(node))

    def group(self, node) -> GroupExpr:
        try:
            return self._group(node)
        except GroupExprError as e:
            self.fail(node, str(e))

    def _group(self, node) -> GroupExpr:
        if isinstance(node, Ref):
            if node.name in self.ws.groups:
                self.letters = self.ws.letters.get(node.name)
                return self.ws.groups[node.name]
            if node.name in self.known.groups:
                self.letters = self.known.letters.get(node.name)
                return self.known.groups[node.name]
            if node.name == "Z":
                return FreeAbelian(1)
            entry = _catalog_entry(node.name, [])
            if entry is None:
                self.fail(node, f"unknown group {node.name!r}")
            self.letters = entry.letters
            return entry.expr
        if not isinstance(node, Call):
            self.fail(node, "expected a group expression")
        name, args, kw = node.name, node.args, node.kwargs
        if name in ("Z", "free", "cyclic"):
            if len(args) != 1 or kw:
                self.fail(node, f"{name} takes one integer argument")
            n = self.int_(args[0], 1 if name == "cyclic" else 0)
            return {"Z": FreeAbelian, "free": Free, "cyclic": CyclicFinite}[name](n)
        if name == "product":
            if kw or not args:
                self.fail(node, "product takes one or more group arguments")
            return DirectProduct(tuple(self._group(a) for a in args))
        if name in ("wreath", "graphwreath"):
            return self._wreath(node)
        if name == "annotated":
            return self._annotated(node)
        if kw:
            self.fail(node, f"{name} takes no keyword arguments")
        entry = _catalog_entry(name, [self.int_(a, 1) for a in args])
        if entry is None:
            self.fail(node, f"unknown group constructor {name!r}")
        self.letters = entry.letters
        return entry.expr

    def _kw(self, node, allowed, required=()):
        for k in node.kwargs:
            if k not in allowed:
                self.fail(node.kwargs[k], f"unknown argument {k!r} for {node.name}")
        for k in required:
            if k not in node.kwargs:
                self.fail(node, f"{node.name} needs argument {k!r}")
        if node.args:
            self.fail(node, f"{node.name} takes keyword arguments only")
        return node.kwargs

    def _wreath(self, node) -> GroupExpr:
        graph = node.name == "graphwreath"
        allowed = {"base", "top", "orbits", "pairs", "action"} | ({"edges"} if graph else set())
        kw = self._kw(node, allowed, ("base", "top"))
        sub = _Eval(self.ws, self.known)
        base, top = sub._group(kw["base"]), sub._group(kw["top"])
        action = self._action(kw["action"]) if "action" in kw else None
        if "orbits" in kw:
            orbits = tuple(self._orbit(o, i) for i, o in enumerate(self.list_(kw["orbits"])))
            pairs = tuple(self._pair(p) for p in self.list_(kw["pairs"])) if "pairs" in kw else None
            gset = GSetSpec(orbits, pairs, action)
        elif isinstance(action, RegularAction):
            gset = regular_gset(top)
        elif isinstance(action, LatticeAction):
            if not isinstance(top, FreeAbelian):
                self.fail(node, "a lattice action needs top = Z(d)")
            gset = lattice_gset(top.rank, action.lattice)
        else:
            self.fail(node, f"{node.name} needs orbits=[...] or action=regular|lattice(...)")
        if graph:
            edges = frozenset(tuple(self._labels(e)) for e in self.list_(kw.get("edges", ListV([], node.tok))))
            return GraphWreath(base, top, gset, edges)
        return Wreath(base, top, gset)

    def _labels(self, node):
        out = []
        for item in self.list_(node):
            if not isinstance(item, (Str, Ref)):
                self.fail(item, "expected an orbit label")
            out.append(item.value if isinstance(item, Str) else item.name)
        return out

    def _label(self, node) -> str:
        if isinstance(node, Str):
            return node.value
        if isinstance(node, Ref):
            return node.name
        self.fail(node, "expected a label")

    def _action(self, node):
        if isinstance(node, Ref) and node.name == "regular":
            return RegularAction()
        if isinstance(node, Call) and node.name == "lattice" and len(node.args) == 1 and not node.kwargs:
            rows = self.list_(node.args[0])
            return LatticeAction(tuple(tuple(self.int_(x) for x in self.list_(r)) for r in rows))
        self.fail(node, "action must be regular or lattice([[...], ...])")

    def _stabmap(self, d: DictV):
        return self.matrix(d.items["stabmap"]) if "stabmap" in d.items else ()

    def _orbit(self, node, i) -> OrbitRecord:
        if not isinstance(node, DictV):
            self.fail(node, "an orbit is written {size=..., stab=..., stabmap=[...]}")
        items = node.items
        for k in items:
            if k not in ("label", "size", "stab", "stabmap", "fg"):
                self.fail(items[k], f"unknown orbit field {k!r}")
        label = self._label(items["label"]) if "label" in items else f"x{i + 1}"
        if "size" not in items:
            self.fail(node, "orbit needs size=")
        stab = _Eval(self.ws, self.known)._group(items["stab"]) if "stab" in items else FreeAbelian(0)
        fg = self.bool_(items["fg"]) if "fg" in items else True
        try:
            data = StabilizerData(stab, self._stabmap(node), fg)
            return OrbitRecord(label, self.size(items["size"]), data)
        except GroupExprError as e:
            self.fail(node, str(e))

    def _pair(self, node) -> PairOrbitRecord:
        if not isinstance(node, DictV):
            self.fail(node, "a pair record is written {stabmap=[...], count=...}")
        items = node.items
        for k in items:
            if k not in ("label", "stabmap", "count", "between", "diagonal"):
                self.fail(items[k], f"unknown pair field {k!r}")
        label = self._label(items["label"]) if "label" in items else f"p{node.tok.line}_{node.tok.col}"
        count = self.size(items["count"]) if "count" in items else 1
        between = tuple(self._labels(items["between"])) if "between" in items else None
        diagonal = self.bool_(items["diagonal"]) if "diagonal" in items else False
        return PairOrbitRecord(label, self._stabmap(node), count, between, diagonal)

    def _annotated(self, node) -> GroupExpr:
        kw = self._kw(node, {"name", "rank", "torsion", "fp", "sigma1", "sigma2"}, ("name", "rank"))
        if not isinstance(kw["name"], Str):
            self.fail(kw["name"], "name must be a string")
        return AnnotatedAtom(
            kw["name"].value,
            self.int_(kw["rank"], 0),
            self.bool_(kw["torsion"]) if "torsion" in kw else False,
            self.bool_(kw["fp"]) if "fp" in kw else True,
            self._region(kw["sigma1"]) if "sigma1" in kw else None,
            self._region(kw["sigma2"]) if "sigma2" in kw else None,
        )

    def _region(self, node):
        if isinstance(node, Ref):
            if node.name == "all":
                return SphereRegion.everything()
            if node.name == "none":
                return SphereRegion.nothing()
            if node.name == "unknown":
                return None
        if isinstance(node, Call) and node.name == "exclude" and not node.kwargs:
            cones = []
            for c in node.args:
                if not (isinstance(c, Call) and c.name == "cone" and not c.args):
                    self.fail(c, "expected cone(eq=[...], pos=[...])")
                for k in c.kwargs:
                    if k not in ("eq", "pos"):
                        self.fail(c.kwargs[k], f"unknown cone field {k!r}")
                eq = self.matrix(c.kwargs["eq"]) if "eq" in c.kwargs else ()
                pos = self.matrix(c.kwargs["pos"]) if "pos" in c.kwargs else ()
                cones.append(Cone(eq, pos))
            return SphereRegion(tuple(cones))
        self.fail(node, "region must be all, none, unknown or exclude(cone(...), ...)")


# -- printing ------------------------------------------------------------------


def _vec(v) -> str:
    return "[" + ", ".join(fmt(x) for x in v) + "]"


def _mat(m) -> str:
    return "[" + ", ".join(_vec(c) for c in m) + "]"


def _size(s) -> str:
    return "inf" if s == INF else str(s)


def format_group(g: GroupExpr) -> str:
    if isinstance(g, FreeAbelian):
        return f"Z({g.rank})"
    if isinstance(g, Free):
        return f"free({g.rank})"
    if isinstance(g, CyclicFinite):
        return f"cyclic({g.modulus})"
    if isinstance(g, DirectProduct):
        return "product(" + ", ".join(format_group(f) for f in g.factors) + ")"
    if isinstance(g, AnnotatedAtom):
        parts = [f'name="{g.name}"', f"rank={g.rank}", f"torsion={str(g.torsion).lower()}"]
        parts.append(f"fp={str(g.finitely_presented).lower()}")
        parts.append(f"sigma1={_format_region(g.sigma1)}")
        parts.append(f"sigma2={_format_region(g.sigma2)}")
        return "annotated(" + ", ".join(parts) + ")"
    if isinstance(g, (Wreath, GraphWreath)):
        kind = "wreath" if isinstance(g, Wreath) else "graphwreath"
        orbits = ", ".join(
            f'{{label="{o.label}", size={_size(o.size)}, stab={format_group(o.stabilizer.group)}, '
            f"stabmap={_mat(o.stabilizer.images)}, fg={str(o.stabilizer.finitely_generated).lower()}}}"
            for o in g.gset.orbits
        )
        parts = [f"base={format_group(g.base)}", f"top={format_group(g.top)}", f"orbits=[{orbits}]"]
        if g.gset.pairs is not None:
            recs = []
            for p in g.gset.pairs:
                between = "" if p.between is None else f', between=["{p.between[0]}", "{p.between[1]}"]'
                recs.append(
                    f'{{label="{p.label}", stabmap={_mat(p.images)}, count={_size(p.multiplicity)}'
                    f"{between}, diagonal={str(p.diagonal).lower()}}}"
                )
            parts.append("pairs=[" + ", ".join(recs) + "]")
        action = g.gset.action
        if isinstance(action, RegularAction):
            parts.append("action=regular")
        elif isinstance(action, LatticeAction):
            parts.append(f"action=lattice({_mat(action.lattice)})")
        if isinstance(g, GraphWreath):
            edges = ", ".join(f'["{a}", "{b}"]' for a, b in sorted(g.edges))
            parts.append(f"edges=[{edges}]")
        return f"{kind}(" + ", ".join(parts) + ")"
    raise GroupExprError(f"cannot format {g!r}")


def _format_region(r) -> str:
    if r is None:
        return "unknown"
    if not r.excluded:
        return "all"
    cones = ", ".join(f"cone(eq={_mat(c.equalities)}, pos={_mat(c.positives)})" for c in r.excluded)
    return f"exclude({cones})"


def format_workspace(ws: Workspace) -> str:
    lines = [f"group {name} = {format_group(g)}" for name, g in ws.groups.items()]
    for name, chi in ws.chars.items():
        lines.append(f"char {name} on {ws.char_groups[name]} = {_vec(chi.values)}")
    return "\n".join(lines) + "\n"
