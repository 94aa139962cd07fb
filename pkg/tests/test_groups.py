import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form

from wreathsigma.errors import GroupExprError
from wreathsigma.groups import (
    INF,
    AnnotatedAtom,
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GraphWreath,
    GSetSpec,
    OrbitRecord,
    PairOrbitRecord,
    SphereRegion,
    StabilizerData,
    Wreath,
    abelianization,
    free_rank,
    lattice_gset,
    regular_gset,
    trivial_stabilizer,
    validate_finiteness,
    whole_group_stabilizer,
)

Z = FreeAbelian(1)


def presentation_abelianization(n_gens, relator_exponents):
    """(free rank, torsion invariants) of Z^n / <relator exponent sums>."""
    if not relator_exponents:
        return n_gens, []
    m = sympy.Matrix(relator_exponents)
    snf = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0]
    return n_gens - len(diag), [d for d in diag if d != 1]


def test_abelianization_examples():
    assert abelianization(FreeAbelian(2)).free_rank == 2
    assert not abelianization(FreeAbelian(2)).has_torsion
    zwrz = Wreath(Z, Z, regular_gset(Z))
    lamp = Wreath(CyclicFinite(2), Z, regular_gset(Z))
    assert free_rank(zwrz) == 2
    assert free_rank(lamp) == 1 and abelianization(lamp).has_torsion


def test_abelianization_against_presentations():
    # lamplighter: <a, s | a^2, [a, s^n a s^-n]>; commutators have zero exponent sums
    assert presentation_abelianization(2, [[2, 0], [0, 0]]) == (1, [2])
    # Z wr Z: <h, z | [h, z^n h z^-n]>
    assert presentation_abelianization(2, [[0, 0]]) == (2, [])
    # Z wr_{Z/2} Z: <h, z | [h, z h z^-1], [h, z^2]>
    assert presentation_abelianization(2, [[0, 0], [0, 0]]) == (2, [])
    assert free_rank(Wreath(Z, Z, lattice_gset(1, [[2]]))) == 2


def test_wreath_layout_blocks():
    g = Wreath(FreeAbelian(2), Z, GSetSpec((OrbitRecord("a", INF, trivial_stabilizer()), OrbitRecord("b", 1, whole_group_stabilizer(Z)))))
    ab = abelianization(g)
    assert ab.free_rank == 2 * 2 + 1
    assert [(b.owner, b.start, b.stop) for b in ab.layout] == [("orbit[a]", 0, 2), ("orbit[b]", 2, 4), ("top", 4, 5)]


def test_validate_examples():
    r = validate_finiteness(DirectProduct((Free(2), FreeAbelian(3))))
    assert r.fg and r.fp
    stab = StabilizerData(Free(0), (), finitely_generated=False)
    g = Wreath(Z, Free(2), GSetSpec((OrbitRecord("x", INF, stab),), (PairOrbitRecord("p", (), 1, ("x", "x")),)))
    r = validate_finiteness(g)
    assert r.fg and not r.fp
    assert any("not finitely generated" in s for s in r.reasons)


def test_regular_actions_of_infinite_groups_are_not_fp():
    for base in (CyclicFinite(2), Z):
        r = validate_finiteness(Wreath(base, Z, regular_gset(Z)))
        assert r.fg and not r.fp
        assert any("infinitely many orbits" in s for s in r.reasons)


def test_finite_quotient_actions_are_fp():
    r = validate_finiteness(Wreath(Z, Z, lattice_gset(1, [[3]])))
    assert r.fg and r.fp
    r = validate_finiteness(Wreath(CyclicFinite(2), CyclicFinite(3), regular_gset(CyclicFinite(3))))
    assert r.fp


def test_missing_pairs_means_not_fp():
    g = Wreath(Z, Z, GSetSpec((OrbitRecord("x", INF, trivial_stabilizer()),)))
    r = validate_finiteness(g)
    assert r.fg and not r.fp


def test_graph_wreath_not_fp():
    g = GraphWreath(Z, Z, regular_gset(Z), {("x", "x")})
    assert not validate_finiteness(g).fp


def test_fp_implies_fg():
    atom = AnnotatedAtom("Q", 1, finitely_presented=False, sigma1=SphereRegion.everything())
    r = validate_finiteness(DirectProduct((atom, Z)))
    assert r.fg and not r.fp


def test_diagonal_records_added():
    stab = StabilizerData(Z, ((2,),))
    g = GSetSpec((OrbitRecord("x", 2, stab),), (PairOrbitRecord("off", ((2,),), 1, ("x", "x")),))
    diag = [p for p in g.pairs if p.diagonal]
    assert len(diag) == 1 and diag[0].images == stab.images


@pytest.mark.parametrize(
    "build",
    [
        lambda: Wreath(FreeAbelian(0), Z, regular_gset(Z)),
        lambda: GSetSpec(()),
        lambda: Wreath(Z, Z, GSetSpec((OrbitRecord("x", 1, trivial_stabilizer()),))),
        lambda: StabilizerData(Z, ()),
        lambda: OrbitRecord("x", 0, trivial_stabilizer()),
        lambda: FreeAbelian(-1),
        lambda: CyclicFinite(0),
        lambda: DirectProduct(()),
        lambda: GSetSpec((OrbitRecord("x", 2, trivial_stabilizer()), OrbitRecord("x", 2, trivial_stabilizer()))),
    ],
)
def test_malformed_expressions(build):
    with pytest.raises(GroupExprError):
        build()


def test_lattice_gset_data():
    g = lattice_gset(1, [[4], [6]])
    o = g.orbits[0]
    assert o.size == 2
    assert o.stabilizer.images == ((2,),)
    off = [p for p in g.pairs if not p.diagonal]
    assert off[0].multiplicity == 1
