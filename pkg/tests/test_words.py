import pytest
from hypothesis import given, strategies as st

from wreathsigma.errors import LabError
from wreathsigma.lab.words import format_word, inverse, letters, parse_word, reduce

AB = ("a", "b")
words = st.lists(st.sampled_from(letters(AB)), max_size=12).map(tuple)


def test_parse_forms():
    assert parse_word("a s a s⁻¹", ("a", "s")) == (("a", 1), ("s", 1), ("a", 1), ("s", -1))
    assert parse_word("a^2 b^-1", AB) == (("a", 1), ("a", 1), ("b", -1))
    assert parse_word("ab^(-2)", AB) == (("a", 1), ("b", -1), ("b", -1))
    assert parse_word("", AB) == ()
    assert parse_word("1", AB) == ()
    assert parse_word("t1 t", ("t", "t1")) == (("t1", 1), ("t", 1))


def test_parse_unknown_letter():
    with pytest.raises(LabError):
        parse_word("a c", AB)


@given(words)
def test_format_round_trip(w):
    assert parse_word(format_word(w), AB) == w


@given(words)
def test_reduce_properties(w):
    r = reduce(w)
    assert reduce(r) == r
    assert reduce(w + inverse(w)) == ()
    assert all(not (x[0] == y[0] and x[1] == -y[1]) for x, y in zip(r, r[1:]))
