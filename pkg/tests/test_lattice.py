import pytest
from hypothesis import given
from hypothesis import strategies as st

from plactic_forge import lattice as L
from plactic_forge import perm as P

S4 = P.all_perms(4)
TRI4 = L.all_triangles(4)


def test_sizes():
    assert [len(L.all_triangles(n)) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]


def test_join_closure_is_everything():
    for n in range(1, 5):
        assert L.join_closure(n) == sorted(L.all_triangles(n))


@given(st.sampled_from(TRI4), st.sampled_from(TRI4))
def test_meet_join_stay_monotone(a, b):
    m, j = L.meet_join(a, b, 4)
    assert L.leq(m, a) and L.leq(a, j)


@given(st.sampled_from(TRI4), st.sampled_from(TRI4), st.sampled_from(TRI4))
def test_distributive(a, b, c):
    assert L.join(a, L.meet(b, c)) == L.meet(L.join(a, b), L.join(a, c))


def test_length_formula():
    ex = L.length_example()
    assert (ex["rank"], ex["correction"], ex["length"]) == (38, 25, 13)
    assert ex["length"] == ex["inversions"]
    assert not L.length_formula_failures(5)


def test_ehresmann_is_bruhat():
    assert not L.ehresmann_matches_bruhat(4)


def test_rank_polynomials():
    r_all, r_perm = L.rank_polynomials(3)
    assert (r_all, r_perm) == ([1, 2, 1, 2, 1], [1, 2, 0, 2, 1])


def test_permutation_roundtrip():
    lat = L.Lattice(4)
    for w in S4:
        assert lat.permutation_of(L.triangle_of(w)) == w
    assert sum(lat.permutation_of(t) is not None for t in lat.vertices) == 24


def test_dot():
    dot = L.to_dot(L.Lattice(3))
    assert dot.startswith("digraph MN3") and dot.count("->") == len(L.Lattice(3).covers())


def test_bound():
    with pytest.raises(L.LatticeError):
        L.Lattice(7)
