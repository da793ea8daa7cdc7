from hypothesis import given
from hypothesis import strategies as st

from plactic_forge import plactic as W
from plactic_forge import quotients as Q

words = st.lists(st.integers(1, 3), max_size=7).map(tuple)


def _knuth_moves(w):
    out = []
    for i in range(len(w) - 2):
        x, y, z = w[i:i + 3]
        # yxz <-> yzx for x < y <= z, xzy <-> zxy for x <= y < z
        if y < x <= z or z < x <= y:
            out.append(w[:i] + (x, z, y) + w[i + 3:])
        if x <= z < y or y <= z < x:
            out.append(w[:i] + (y, x, z) + w[i + 3:])
    return out


@given(words)
def test_rsk_invariant_under_knuth_moves(w):
    p = W.rsk_insert(w)
    for v in _knuth_moves(w):
        assert W.rsk_insert(v) == p


@given(words)
def test_reading_word_roundtrip(w):
    t = W.rsk_insert(w)
    r = W.reading_word(t)
    assert W.is_tableau_word(r)
    assert W.from_reading_word(r) == t
    assert W.rsk_normal_form(w) == r


def test_small_examples():
    assert W.rsk_normal_form((2, 3, 1)) == (2, 1, 3)
    assert W.is_tableau_word((5, 3, 2, 1, 4, 3, 2, 4, 3, 3))
    assert not W.is_tableau_word((1, 2, 1, 3, 2))
    assert W.knuth_class((2, 3, 1)) == {(2, 3, 1), (2, 1, 3)}


def test_closure_matches_knuth_class():
    pres = W.preset("P", 4)  # letters 1..3
    assert set(W.closure((2, 3, 1), pres).members) == {(2, 3, 1), (2, 1, 3)}


def test_nilcoxeter_square_vanishes():
    nc = Q.algebra("NC", 3)
    assert nc.normalize((1, 1)) == (None, None)
    assert nc.normalize((1, 2, 1))[1] is not None


def test_edelman_greene():
    assert W.eg_insert((2, 1, 2)) == ((1, 2), (2,))
    assert W.eg_insert((1, 1)) is None


def test_compatible_sequences():
    assert {b for _, b in W.compatible_sequences((3, 2, 3))} == {
        (1, 2, 2), (1, 1, 2), (1, 1, 3), (1, 2, 3), (2, 2, 3)}
    ic = W.compatible_sequences((3, 2, 3), "IC", 5)
    assert len(ic) == 11
    assert ((3, 2, 3, 2, 3), (1, 1, 2, 2, 3)) in ic
    assert W.compatible_sequences(()) == [((), ())]


def test_bottom_code():
    # lex-smallest exponent of C(323) comes from b = 223
    assert W.bottom_code((3, 2, 3), 3) == (0, 2, 1)
    assert W.bottom_code((1,), 1) == (1,)


def test_elementary_commute():
    for i_j, c in W.noncomm_elementary(4, W.preset("P", 4), 6).items():
        assert not c, i_j
    for i_j, c in W.noncomm_elementary(3, W.preset("OPL", 3), 6).items():
        assert not c, i_j
