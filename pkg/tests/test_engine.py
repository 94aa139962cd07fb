import pytest

from wreathsigma import catalog
from wreathsigma.character import Character
from wreathsigma.engine import Status, all_of, any_of, sample_sphere, sigma1, sigma2
from wreathsigma.errors import CharacterError, MissingPairDataError, NotFinitelyPresentedError
from wreathsigma.groups import (
    INF,
    AnnotatedAtom,
    Cone,
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
    lattice_gset,
    regular_gset,
    trivial_stabilizer,
    whole_group_stabilizer,
)

IN, OUT, UNKNOWN = Status.IN, Status.OUT, Status.UNKNOWN
Z = FreeAbelian(1)
F2 = Free(2)


def s1(expr, values):
    return sigma1(expr, Character(expr, values))


def s2(expr, values):
    return sigma2(expr, Character(expr, values))


def rules(v):
    return [step.rule_id for step in v.walk()]


def test_kleene_tables():
    assert any_of([OUT, UNKNOWN]) is UNKNOWN
    assert any_of([OUT, IN, UNKNOWN]) is IN
    assert any_of([OUT, OUT]) is OUT
    assert all_of([IN, UNKNOWN]) is UNKNOWN
    assert all_of([UNKNOWN, OUT]) is OUT
    assert all_of([IN, IN]) is IN


# -- atoms and products --------------------------------------------------------


def test_atoms():
    assert s1(FreeAbelian(3), [0, 1, 0]).status is IN
    assert s1(Free(1), [1]).status is IN
    assert s1(F2, [1, 0]).status is OUT
    assert s2(FreeAbelian(2), [1, 1]).status is IN
    assert s2(F2, [0, 1]).status is OUT


def test_annotated_atoms():
    half = SphereRegion((Cone(positives=((-1, 0),)),))
    a = AnnotatedAtom("A", 2, sigma1=half, sigma2=SphereRegion.everything())
    assert s1(a, [1, 5]).status is IN
    assert s1(a, [-1, 5]).status is OUT
    # Sigma^2 is cut down to Sigma^1
    assert s2(a, [-1, 0]).status is OUT
    assert s2(a, [1, 0]).status is IN
    blind = AnnotatedAtom("B", 1)
    assert s1(blind, [1]).status is UNKNOWN
    assert s2(blind, [1]).status is UNKNOWN


def test_products_reference_examples():
    ff = catalog.F2xF2().expr
    assert s1(ff, [1, 0, 1, 0]).status is IN
    assert s1(ff, [1, 0, 0, 0]).status is OUT
    v = s2(catalog.F2xZ().expr, [1, 0, 1])
    assert v.status is IN
    assert "P2" in rules(v)


def test_product_unknown_propagates_only_when_relevant():
    blind = AnnotatedAtom("B", 1)
    g = DirectProduct((blind, F2))
    assert s1(g, [1, 1, 0]).status is IN  # both factors nonzero decides
    assert s1(g, [1, 0, 0]).status is UNKNOWN
    assert s1(g, [0, 1, 0]).status is OUT


def test_three_factor_fold():
    g = DirectProduct((F2, F2, F2))
    assert s1(g, [1, 0, 0, 0, 0, 0]).status is OUT
    assert s1(g, [1, 0, 0, 0, 1, 0]).status is IN
    # Sigma^2 of F2^3 needs two nonzero factors on one side and Sigma^1 of the pair
    assert s2(g, [1, 0, 1, 0, 0, 0]).status is OUT
    assert s2(g, [1, 0, 1, 0, 1, 0]).status is IN


def test_single_factor_product_delegates():
    assert s1(DirectProduct((F2,)), [1, 0]).status is OUT


# -- Sigma^1 of wreath products -------------------------------------------------


def test_sigma1_reference_examples(zwrz, lamplighter):
    v = s1(lamplighter.expr, [1])
    assert v.status is OUT and v.cites("Thm 1.1(1)")
    assert s1(lamplighter.expr, [-1]).status is OUT
    v = s1(zwrz.expr, [1, 0])
    assert v.status is IN and v.cites("Prop sigma1viarenz")
    assert s1(zwrz.expr, [0, -1]).status is OUT


def test_W1_in_when_stabilizers_see_theta():
    g = Wreath(CyclicFinite(2), Z, lattice_gset(1, [[3]]))
    v = s1(g, [1])
    assert v.status is IN and rules(v)[0] == "W1"


def test_W1_recurses_into_top():
    g = Wreath(Z, F2, GSetSpec((OrbitRecord("x", 1, whole_group_stabilizer(F2)),)))
    assert s1(g, [0, 1, 0]).status is OUT
    g = Wreath(Z, DirectProduct((F2, Z)), GSetSpec((OrbitRecord("x", 1, whole_group_stabilizer(DirectProduct((F2, Z)))),)))
    assert s1(g, [0, 1, 0, 1]).status is IN


def _fixed(top, *labels):
    return GSetSpec(tuple(OrbitRecord(l, 1, whole_group_stabilizer(top)) for l in labels))


def test_W2_singleton_branches():
    two = Wreath(F2, Z, _fixed(Z, "p", "q"))
    assert s1(two, [1, 0, 1, 0, 0]).status is IN  # |T| = 2
    one = Wreath(F2, Z, _fixed(Z, "p"))
    assert s1(one, [1, 0, 1]).status is IN  # theta != 0
    v = s1(one, [1, 0, 0])
    assert v.status is OUT and "W2" in rules(v)  # Sigma^1(F2) empty
    zbase = Wreath(Z, Z, _fixed(Z, "p"))
    assert s1(zbase, [1, 0]).status is IN


def test_W2_moving_orbit():
    g = Wreath(F2, Z, lattice_gset(1, [[2]]))
    assert s1(g, [1, 0, 0]).status is IN


def test_graph_wreath():
    g = GraphWreath(Z, Z, lattice_gset(1, [[2]]), {("x", "x")})
    v = s1(g, [0, 1])
    assert v.status is IN and rules(v)[0] == "GW1"
    assert s1(GraphWreath(Z, Z, regular_gset(Z)), [0, 1]).status is OUT
    v = s1(g, [1, 0])
    assert v.status is UNKNOWN and rules(v) == ["GW-gap"]


def test_errors(zwrz):
    with pytest.raises(CharacterError):
        s1(zwrz.expr, [0, 0])
    with pytest.raises(CharacterError):
        sigma1(zwrz.expr, Character(catalog.lamplighter(2).expr, [1]))


# -- Sigma^2 --------------------------------------------------------------------


def test_sigma2_preconditions(zwrz):
    with pytest.raises(NotFinitelyPresentedError) as err:
        s2(zwrz.expr, [0, 1])
    assert any("infinitely many orbits" in r for r in err.value.reasons)
    nopairs = Wreath(Z, Z, GSetSpec((OrbitRecord("x", 2, StabilizerData(Z, ((2,),))),)))
    with pytest.raises(MissingPairDataError):
        s2(nopairs, [0, 1])
    with pytest.raises(MissingPairDataError):
        s2(DirectProduct((Z, nopairs)), [1, 0, 0])
    with pytest.raises(NotFinitelyPresentedError):
        s2(GraphWreath(Z, Z, lattice_gset(1, [[2]])), [0, 1])


def test_W3_fp_relative_of_zwrz():
    g = catalog.zwrz_mod(2).expr
    v = s2(g, [1, 0])
    assert v.status is IN and rules(v)[0] == "W3"
    assert s2(g, [1, 1]).status is IN


def test_W3_decides_out():
    # two fixed points, H = F2, theta = 0: conditions (1)-(3) all fail
    g = Wreath(F2, Z, GSetSpec(_fixed(Z, "p", "q").orbits, ()))
    v = s2(g, [1, 0, 0, 1, 0])
    assert v.status is OUT and rules(v)[0] == "W3"
    assert s2(g, [1, 0, 0, 1, 1]).status is IN
    three = Wreath(F2, Z, GSetSpec(_fixed(Z, "p", "q", "r").orbits, ()))
    assert s2(three, [1, 0, 1, 0, 1, 0, 0]).status is IN


def test_W3_single_fixed_point_split():
    # T = {p}; Gamma = F2 x (F2 wr_{q} Z) = F2 x F2 x Z
    g = Wreath(F2, Z, GSetSpec(_fixed(Z, "p", "q").orbits, ()))
    v = s2(g, [1, 0, 0, 0, 1])
    assert rules(v)[:2] == ["W3'", "P2"]
    # chi_1 = (1,0) on F2, second factor F2 x Z with (0,0,1): Sigma^1(F2 x Z) holds and chi_1 != 0
    assert v.status is IN
    assert s2(g, [1, 0, 0, 0, 0]).status is OUT
    lone = Wreath(Z, Z, GSetSpec(_fixed(Z, "p").orbits, ()))
    assert s2(lone, [1, 0]).status is IN


def _abstract_w4(base, stab_images=((1, 0, 0), (0, 1, 0)), pair_images=None):
    top = DirectProduct((F2, Z))
    stab = StabilizerData(F2, stab_images)
    pairs = (PairOrbitRecord("off", pair_images or stab_images, 1, ("x", "x")),)
    return Wreath(base, top, GSetSpec((OrbitRecord("x", INF, stab),), pairs))


def test_W4_gap_and_out():
    gap = _abstract_w4(CyclicFinite(2))
    v = s2(gap, [1, 0, 1])
    assert v.status is UNKNOWN and v.cites("Thm 1.3 gap")
    v = s2(_abstract_w4(Z), [0, 1, 0, 1])
    assert v.status is OUT and rules(v)[0] == "W4"


def test_W4_in():
    top = FreeAbelian(2)
    stab = StabilizerData(Z, ((1, 0),))
    g = Wreath(Z, top, GSetSpec((OrbitRecord("x", INF, stab),), (PairOrbitRecord("off", ((1, 0),), 3, ("x", "x")),)))
    v = s2(g, [0, 1, 1])
    assert v.status is IN and rules(v)[0] == "W4"


def test_W4_pair_and_retract_failures():
    top = FreeAbelian(2)
    stab = StabilizerData(Z, ((1, 0),))
    g = Wreath(Z, top, GSetSpec((OrbitRecord("x", INF, stab),), (PairOrbitRecord("off", (), 1, ("x", "x")),)))
    v = s2(g, [0, 1, 0])
    assert v.status is OUT and v.cites("Prop condneces1")
    g2 = Wreath(Z, F2, GSetSpec((OrbitRecord("x", 1, whole_group_stabilizer(F2)),), ()))
    v = s2(g2, [0, 1, 0])
    assert v.status is OUT and v.trace[0].citation.startswith("Thm retractsthm")


def test_W4_zero_stabilizer_restriction_is_out_via_diagonal():
    g = Wreath(Z, Z, lattice_gset(1, [[2]]))
    ok = s2(g, [0, 1])
    assert ok.status is IN
    top = FreeAbelian(2)
    stab = StabilizerData(Z, ((0, 1),))
    bad = Wreath(CyclicFinite(2), top, GSetSpec((OrbitRecord("x", INF, stab),), ()))
    assert s2(bad, [1, 0]).status is OUT


# -- sphere sampling --------------------------------------------------------------


def test_sample_zwrz_level1(zwrz):
    s = sample_sphere(zwrz.expr, 1, 2)
    out = [r.values for r, st in s.samples if st is OUT]
    assert sorted(out) == [(0, -1), (0, 1)]
    assert s.counts["In"] == s.sample_count - 2
    assert sum(s.counts.values()) == s.sample_count
    assert s.dimension == 1
    assert any("chi|_M = 0" in c and "Out=2" in c for c in s.components)


def test_sample_atoms():
    s = sample_sphere(FreeAbelian(2), 1, 3)
    assert s.counts == {"In": s.sample_count, "Out": 0, "Unknown": 0}
    s = sample_sphere(F2, 1, 2)
    assert s.counts["Out"] == s.sample_count


def test_sample_grid_is_deduplicated():
    s = sample_sphere(FreeAbelian(2), 1, 2)
    # primitive vectors of max-norm <= 2 in Z^2
    assert s.sample_count == 16
    assert len({r for r, _ in s.samples}) == 16


def test_sample_parallel_matches_serial():
    g = catalog.zwrz_mod(2).expr
    a = sample_sphere(g, 2, 2, workers=1)
    b = sample_sphere(g, 2, 2, workers=2)
    assert a == b


def test_sample_errors(zwrz):
    with pytest.raises(CharacterError):
        sample_sphere(CyclicFinite(3), 1, 2)
    with pytest.raises(NotFinitelyPresentedError):
        sample_sphere(zwrz.expr, 2, 1)
