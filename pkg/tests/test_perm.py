from hypothesis import given
from hypothesis import strategies as st

from plactic_forge import perm as P

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@given(perms)
def test_length_is_inversion_count(w):
    assert P.length(w) == len(P.inversions(w))
    assert P.compose(w, P.inverse(w)) == P.identity(len(w))


@given(perms)
def test_code_roundtrip(w):
    assert P.code_to_perm(P.lehmer_code(w), len(w)) == w
    assert sum(P.lehmer_code(w)) == P.length(w)


@given(perms)
def test_reduced_word(w):
    word = P.reduced_word(w)
    assert len(word) == P.length(w)
    assert P.from_word(word, len(w)) == w


def test_all_reduced_words_of_w0():
    words = P.reduced_words(P.longest(4))
    assert len(words) == 16
    assert all(P.from_word(x, 4) == (4, 3, 2, 1) for x in words)


def test_parse():
    assert P.parse_perm("2143") == (2, 1, 4, 3)
    assert P.parse_perm("2,1,4,3") == (2, 1, 4, 3)
    assert P.parse_word("121") == (1, 2, 1)


def test_bruhat():
    assert P.bruhat_leq((1, 2, 3), (3, 2, 1))
    assert not P.bruhat_leq((2, 1, 3), (1, 3, 2))
    assert P.bruhat_leq((2, 1, 3), (3, 1, 2))
