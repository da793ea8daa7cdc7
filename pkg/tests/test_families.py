import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plactic_forge import families as F
from plactic_forge import perm as P
from plactic_forge.poly import ONE, X, parse


def test_schubert_values():
    assert F.schubert((1, 2, 3, 4)) == ONE
    assert F.schubert((2, 1, 4, 3)) == parse("x1^2 + x1*x2 + x1*x3")
    assert F.schubert((4, 3, 2, 1)) == parse("x1^3*x2^2*x3")


def test_grothendieck_values():
    assert F.grothendieck((1, 3, 2, 4), 1) == parse("x1 + x2 + x1*x2")
    assert F.grothendieck((1, 3, 4, 2), 1) == parse("2*x1*x2*x3 + x1*x2 + x1*x3 + x2*x3")


def test_grothendieck_at_zero_is_schubert():
    for w in P.all_perms(4):
        assert F.grothendieck(w, 0) == F.schubert(w)


def test_key_values():
    assert F.key((0, 2)) == parse("x1^2 + x1*x2 + x2^2")
    assert F.key((0, 2, 1), "reduced") == parse("x1*x2*x3 + x2^2*x3")
    assert F.key((0, 1, 1), "kg", beta=1) == parse("2*x1*x2*x3 + x1*x2 + x1*x3 + x2*x3")


@settings(max_examples=25)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_key_of_partition_is_monomial(a):
    lam = tuple(sorted(a, reverse=True))
    m = ONE
    for i, e in enumerate(lam, 1):
        m = m * X(i) ** e
    assert F.key(lam) == m


@settings(max_examples=25)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_key_of_increasing_code_is_schur(a):
    alpha = tuple(sorted(a))
    lam = tuple(sorted(a, reverse=True))
    assert F.key(alpha) == F.schur_from_tableaux(lam, 3)


def test_paths_agree():
    for w in P.all_perms(4):
        assert F.grothendieck(w, path="min") == F.grothendieck(w, path="max")


def test_kn_identity_and_top():
    assert F.at_one(F.kn((1, 2, 3, 4))) == ONE
    top = F.at_one(F.kn((4, 3, 2, 1))).subs({"alpha": 1, "beta": 1})
    assert top.constant() == 1145


def test_kn_one_letter():
    assert F.at_one(F.kn((2, 1, 3, 4))) == parse("alpha*beta + alpha + 1")
    assert F.at_one(F.kn((2, 1, 3, 4), convention="sec1")) == parse("alpha*beta + beta + 1")


def test_dz_is_kn_of_reversed_index():
    w0 = P.longest(4)
    for w in P.all_perms(4):
        kn = F.kn(P.compose(w0, w), beta=1, alpha=1)
        assert F.dz(w) == kn


def test_kn_rejects_zero_h():
    with pytest.raises(Exception):
        F.kn((2, 1, 3), h=0)


def test_key_expand_dz_positive():
    e = F.key_expand(F.dz((2, 3, 4, 1)), 4)
    assert e and all(c.nonnegative() and not c.is_zero() for c in e.values())


def test_generalized_matches_schubert():
    from plactic_forge.divdiff import NEWTON
    for w in P.all_perms(3):
        assert F.generalized_schubert(NEWTON, w) == F.schubert(w)
