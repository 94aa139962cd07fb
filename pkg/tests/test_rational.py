from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wreathsigma.errors import CharacterError
from wreathsigma.rational import dot, fmt, primitive_integer, rank, to_fraction, vector


def test_to_fraction_accepts_exact_inputs():
    assert to_fraction(3) == 3
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(" -2 ") == -2
    assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize("bad", [0.5, True, "x", None, "1/0"])
def test_to_fraction_rejects(bad):
    with pytest.raises(CharacterError):
        to_fraction(bad)


def test_rank_examples():
    assert rank([]) == 0
    assert rank([(1, 0), (0, 1)]) == 2
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(0, 0, 0)]) == 0


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), max_size=4))
def test_rank_matches_sympy(cols):
    import sympy

    expected = sympy.Matrix(cols).rank() if cols else 0
    assert rank(cols) == expected


def test_fmt_and_dot():
    assert fmt(Fraction(-3, 6)) == "-1/2"
    assert dot(vector([1, "1/2"]), vector([2, 2])) == 3


def test_primitive_integer():
    assert primitive_integer(vector(["1/2", "3/4"])) == (2, 3)
