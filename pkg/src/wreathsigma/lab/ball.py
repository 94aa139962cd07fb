"""Balls in Cayley graphs and connectivity evidence for Sigma^1.

Connectivity of the chi >= 0 part of a finite ball is evidence, not proof,
in both directions: components may merge outside the ball, and a ball that
looks connected says nothing about larger radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import LabError, ResourceCapError
from .concrete import ConcreteGroup, Element
from .words import Word, letters

VERTEX_CAP = 10**6
DEFAULT_RADIUS = 8
DEFAULT_MARGIN = 2


@dataclass
class BallGraph:
    """Vertices in BFS order (the identity first), so depth is nondecreasing.

    ``edges`` has one row ``(u, v, k)`` per directed edge ``u -> u * x_k``
    that stays inside the ball, where ``x_k`` is ``letters[k]``.
    """

    group: ConcreteGroup
    radius: int
    letters: list
    vertices: list
    index: dict
    depth: np.ndarray
    abel: np.ndarray
    edges: np.ndarray
    parent: np.ndarray
    parent_letter: np.ndarray

    def __len__(self) -> int:
        return len(self.vertices)

    def word(self, v: int) -> Word:
        """A geodesic word for vertex ``v`` read off the BFS tree."""
        out = []
        while v != 0:
            out.append(self.letters[self.parent_letter[v]])
            v = self.parent[v]
        return tuple(reversed(out))

    def sphere_sizes(self) -> list[int]:
        return np.bincount(self.depth, minlength=self.radius + 1).tolist()


def ball(group: ConcreteGroup, radius: int, cap: int = VERTEX_CAP) -> BallGraph:
    """Breadth-first ball of ``radius`` in the word metric of the declared
    (symmetric) generating set."""
    if radius < 0:
        raise LabError("radius must be >= 0")
    lets = letters(group.alphabet)
    gens = [group.letter(x) for x in lets]
    vertices = [group.identity]
    index = {group.identity: 0}
    depth = [0]
    parent, parent_letter = [0], [0]
    frontier = [0]
    for d in range(1, radius + 1):
        nxt = []
        for u in frontier:
            a = vertices[u]
            for k, g in enumerate(gens):
                b = group.mul(a, g)
                if b in index:
                    continue
                index[b] = len(vertices)
                nxt.append(len(vertices))
                vertices.append(b)
                depth.append(d)
                parent.append(u)
                parent_letter.append(k)
                if len(vertices) > cap:
                    raise ResourceCapError(
                        f"ball exceeded the cap of {cap} vertices at depth {d}",
                        {"vertices": len(vertices), "depth": d, "radius": radius},
                    )
        frontier = nxt
    edges = []
    for u, a in enumerate(vertices):
        for k, g in enumerate(gens):
            v = index.get(group.mul(a, g))
            if v is not None:
                edges.append((u, v, k))
    abel = np.array([group.abel(a) for a in vertices], dtype=np.int64).reshape(len(vertices), -1)
    return BallGraph(
        group,
        radius,
        lets,
        vertices,
        index,
        np.array(depth, dtype=np.int64),
        abel,
        np.array(edges, dtype=np.int64).reshape(-1, 3),
        np.array(parent, dtype=np.int64),
        np.array(parent_letter, dtype=np.int64),
    )


def _integer_direction(values: Sequence) -> np.ndarray:
    """A positive multiple of ``values`` with integer entries (same signs)."""
    fr = [Fraction(v) for v in values]
    den = math.lcm(*(f.denominator for f in fr)) if fr else 1
    return np.array([int(f * den) for f in fr], dtype=object)


@dataclass(frozen=True)
class Evidence:
    kind: str  # "ConnectedUpTo" or "DisconnectionWitness"
    radius: int
    margin: int
    nonnegative_vertices: int
    components: int
    witness: Optional[tuple[Word, Word]] = None
    separating_radius: Optional[int] = None

    @property
    def disconnected(self) -> bool:
        return self.kind == "DisconnectionWitness"


def chi_on_ball(b: BallGraph, values: Sequence) -> np.ndarray:
    direction = _integer_direction(values)
    if b.abel.shape[1] != len(direction):
        raise LabError("character length does not match the group")
    return (b.abel.astype(object) @ direction) if len(direction) else np.zeros(len(b), dtype=object)


def connectivity_evidence(b: BallGraph, values: Sequence, margin: int = DEFAULT_MARGIN) -> Evidence:
    """Look for two chi >= 0 vertices of depth <= R - margin lying in
    different components of the chi >= 0 subgraph of the ball."""
    if not 0 <= margin < b.radius:
        raise LabError("margin must satisfy 0 <= margin < radius")
    chi = chi_on_ball(b, values)
    mask = np.array([c >= 0 for c in chi], dtype=bool)
    keep = np.flatnonzero(mask)
    local = -np.ones(len(b), dtype=np.int64)
    local[keep] = np.arange(len(keep))
    e = b.edges
    sel = mask[e[:, 0]] & mask[e[:, 1]] if len(e) else np.zeros(0, dtype=bool)
    src, dst = local[e[sel, 0]], local[e[sel, 1]]
    n = len(keep)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n)).tocsr()
    ncomp, labels = connected_components(graph, directed=False)
    inner = keep[b.depth[keep] <= b.radius - margin]
    root = labels[local[0]]
    other = next((v for v in inner if labels[local[v]] != root), None)
    if other is None:
        return Evidence("ConnectedUpTo", b.radius, margin, n, int(ncomp))
    return Evidence(
        "DisconnectionWitness", b.radius, margin, n, int(ncomp), ((), b.word(int(other))), b.radius
    )
