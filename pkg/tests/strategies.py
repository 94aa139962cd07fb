"""Hypothesis strategies for group expressions and characters.

The G-set data produced here is shaped like real action data (fixed points
have the whole group as stabilizer, images have the right lengths) but is
not derived from a concrete action.  That is enough for the engine's
internal consistency properties.
"""

from hypothesis import strategies as st

from wreathsigma.character import Character
from wreathsigma.groups import (
    INF,
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GSetSpec,
    OrbitRecord,
    PairOrbitRecord,
    StabilizerData,
    Wreath,
    free_rank,
    trivial_stabilizer,
    whole_group_stabilizer,
)

atoms = st.sampled_from([FreeAbelian(1), FreeAbelian(2), Free(2), Free(1), CyclicFinite(2)])
tops = st.sampled_from([FreeAbelian(1), FreeAbelian(2), Free(2), CyclicFinite(3)])
small_ints = st.integers(-2, 2)


@st.composite
def stabilizers(draw, top):
    n = free_rank(top)
    kind = draw(st.sampled_from(["trivial", "cyclic", "free2"]))
    if kind == "trivial" or n == 0:
        return trivial_stabilizer()
    if kind == "cyclic":
        return StabilizerData(FreeAbelian(1), (tuple(draw(small_ints) for _ in range(n)),))
    return StabilizerData(Free(2), tuple(tuple(draw(small_ints) for _ in range(n)) for _ in range(2)))


@st.composite
def gsets(draw, top, with_pairs=True):
    count = draw(st.integers(1, 3))
    orbits = []
    for i in range(count):
        size = draw(st.sampled_from([1, 2, 3, INF]))
        stab = whole_group_stabilizer(top) if size == 1 else draw(stabilizers(top))
        orbits.append(OrbitRecord(f"o{i}", size, stab))
    pairs = None
    if with_pairs:
        n = free_rank(top)
        pairs = []
        for j in range(draw(st.integers(0, 2))):
            a, b = draw(st.sampled_from(orbits)), draw(st.sampled_from(orbits))
            images = tuple(tuple(draw(small_ints) for _ in range(n)) for _ in range(draw(st.integers(0, 2))))
            pairs.append(PairOrbitRecord(f"p{j}", images, draw(st.integers(1, 3)), (a.label, b.label)))
        pairs = tuple(pairs)
    return GSetSpec(tuple(orbits), pairs)


@st.composite
def wreaths(draw, with_pairs=True):
    base = draw(atoms)
    top = draw(tops)
    return Wreath(base, top, draw(gsets(top, with_pairs)))


def expressions(with_pairs=True):
    leaf = st.one_of(atoms, wreaths(with_pairs))
    return st.one_of(
        leaf,
        st.lists(leaf, min_size=2, max_size=3).map(lambda fs: DirectProduct(tuple(fs))),
    )


@st.composite
def characters(draw, expr):
    n = free_rank(expr)
    values = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n).filter(any))
    return Character(expr, values)


@st.composite
def expr_and_char(draw, with_pairs=True):
    expr = draw(expressions(with_pairs).filter(lambda e: free_rank(e) > 0))
    return expr, draw(characters(expr))
