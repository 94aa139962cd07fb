from fractions import Fraction

from hypothesis import given, strategies as st

from strategies import expr_and_char, wreaths
from wreathsigma.character import Character, factor_characters, wreath_parts
from wreathsigma.engine import Status, any_of, sigma1, sigma2
from wreathsigma.errors import NotFinitelyPresentedError
from wreathsigma.groups import DirectProduct, free_rank

IN, OUT = Status.IN, Status.OUT


def _sigma2_or_none(expr, chi):
    try:
        return sigma2(expr, chi).status
    except NotFinitelyPresentedError:
        return None


@given(expr_and_char())
def test_sigma2_in_implies_sigma1_in(pair):
    expr, chi = pair
    s1 = sigma1(expr, chi).status
    s2 = _sigma2_or_none(expr, chi)
    if s2 is IN:
        assert s1 is IN
    if s1 is OUT and s2 is not None:
        assert s2 is OUT


@given(expr_and_char(), st.fractions(min_value=Fraction(1, 9), max_value=7, max_denominator=9))
def test_verdicts_are_ray_invariant(pair, q):
    expr, chi = pair
    scaled = chi.scaled(q)
    assert sigma1(expr, chi).status is sigma1(expr, scaled).status
    assert _sigma2_or_none(expr, chi) is _sigma2_or_none(expr, scaled)


@given(expr_and_char())
def test_gehrke_coherence(pair):
    expr, chi = pair
    if not isinstance(expr, DirectProduct):
        return
    parts = factor_characters(chi)
    # fold left to right, matching the engine's association
    statuses = [OUT if p.is_zero else sigma1(p.group, p).status for p in parts]
    nonzero = [not p.is_zero for p in parts]
    right_s1 = statuses[-1]
    right_nz = nonzero[-1]
    for s, nz in zip(reversed(statuses[:-1]), reversed(nonzero[:-1])):
        both = Status.of(nz and right_nz)
        right_s1 = any_of([both, s if nz else OUT, right_s1 if right_nz else OUT])
        right_nz = nz or right_nz
    assert sigma1(expr, chi).status is right_s1


@given(wreaths(), st.data())
def test_sigma2_top_case_in_implies_sigma1_in(expr, data):
    n = free_rank(expr)
    k = n - free_rank(expr.top)
    theta = data.draw(st.lists(st.integers(-3, 3), min_size=n - k, max_size=n - k).filter(any))
    chi = Character(expr, [0] * k + theta)
    s2 = _sigma2_or_none(expr, chi)
    if s2 is IN:
        assert sigma1(expr, chi).status is IN


@given(expr_and_char())
def test_support_T_nonempty_means_no_W1(pair):
    expr, chi = pair
    v = sigma1(expr, chi)
    assert v.trace
    if hasattr(expr, "gset") and not wreath_parts(chi).vanishes_on_base:
        assert v.trace[0].rule_id in ("W2", "GW-gap")


@given(expr_and_char(with_pairs=False))
def test_sigma1_never_needs_pair_data(pair):
    expr, chi = pair
    assert sigma1(expr, chi).status in (Status.IN, Status.OUT, Status.UNKNOWN)
