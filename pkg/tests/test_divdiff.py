import pytest
from hypothesis import given
from hypothesis import strategies as st

from plactic_forge import divdiff as D
from plactic_forge.poly import ONE, X, Poly, isobaric_pi, parse

cubics = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)),
                  max_size=4).map(lambda ts: sum((c * X(1) ** a * X(2) ** b * X(3) ** e for a, b, e, c in ts),
                                                 Poly()))


def test_spec_application():
    assert D.apply_T(D.NEWTON, 1, X(1) ** 2 * X(2)) == X(1) * X(2)
    assert D.apply_T(D.KEY, 1, X(1)) == X(1) + X(2)
    assert D.apply_T(D.grothendieck_spec(), 1, X(1)) == ONE


def test_isobaric():
    assert isobaric_pi(X(1), 1) == X(1) + X(2)
    assert isobaric_pi(ONE, 1) == ONE
    assert isobaric_pi(X(1), 1, reduced=True) == X(2)


def test_coxeter_criterion():
    assert D.coxeter_valid(D.OperatorSpec.make("-beta", "beta+alpha", 0, 1, "beta*alpha"))
    assert D.coxeter_valid(D.NEWTON)
    assert not D.coxeter_valid(D.OperatorSpec.make(1, 1, 0, 1, 1))


@pytest.mark.parametrize("spec", D.battery(), ids=lambda s: s.tag)
def test_battery_is_coxeter_and_hecke(spec):
    assert D.coxeter_valid(spec)
    assert D.hecke_square_residual(spec).is_zero()
    assert D.crossing_residual(spec).is_zero()


def test_kn_hecke_relation():
    # T^2 = (alpha - beta) T + alpha beta over the KN spec with gamma
    spec = D.OperatorSpec.make("-beta", "beta+alpha+gamma", "gamma", 1, "(beta+gamma)*(alpha+gamma)")
    s, t = spec.hecke_coefficients
    assert s == parse("alpha - beta") and t == parse("alpha*beta")
    assert D.hecke_square_residual(spec, maxdeg=3).is_zero()


@given(cubics)
def test_braid_independence(f):
    spec = D.grothendieck_spec()
    assert D.apply_along_word(spec, (1, 2, 1), f) == D.apply_along_word(spec, (2, 1, 2), f)


def test_invalid_spec_refuses_words():
    bad = D.OperatorSpec.make(1, 1, 0, 1, 1)
    with pytest.raises(D.OperatorError):
        D.apply_along_word(bad, (1, 2, 1), X(1))


def test_parse_spec():
    s = D.OperatorSpec.parse("a=-beta,b=beta,h=1")
    assert s.astuple() == D.grothendieck_spec().astuple()
    with pytest.raises(D.OperatorError):
        D.OperatorSpec.parse("z=1")


def test_affine_shift():
    assert D.pi_shift(X(1), 3) == X(2)
    assert D.pi_shift(X(3), 3) == X(1) * parse("q").inverse()
    assert D.pi_shift_inverse(D.pi_shift(X(2) * X(3) ** 2, 3), 3) == X(2) * X(3) ** 2
