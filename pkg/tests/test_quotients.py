from math import comb

import pytest

from plactic_forge import counting as C
from plactic_forge import quotients as Q


def test_pc_dimension_is_asm():
    for n in range(1, 6):
        assert Q.algebra("PC", n).dim() == C.asm(n)


def test_hilbert_rows():
    assert Q.hilbert("PC", 3) == [1, 2, 3, 1]
    assert Q.hilbert("PC", 4) == [1, 3, 8, 12, 11, 6, 1]
    assert Q.hilbert("PC", 5) == [1, 4, 15, 35, 69, 91, 98, 70, 35, 10, 1]
    assert Q.hilbert("TL0", 4) == [1, 3, 5, 4, 1]
    assert Q.hilbert("NC", 4) == [1, 3, 5, 6, 5, 3, 1]


def test_coxeter_algebras_have_permutation_bases():
    assert Q.algebra("NC", 4).dim() == 24
    assert Q.algebra("IC", 4).dim() == 24


def test_pf_box():
    assert Q.pf_box(2, 3).dim() == 35
    h = Q.pf_box(2, 3).hilbert()
    assert h == h[::-1] and len(h) - 1 == 6
    for n in range(1, 5):
        assert Q.pf_box(2, n).dim() == comb(2 * n + 1, n)


def test_multiply_scalars():
    ic = Q.algebra("IC", 3, beta="beta")
    a = ic.element({(1,): 1})
    assert ic.multiply(a, a) == ic.element({(1,): "beta"})
    nc = Q.algebra("NC", 3)
    b = nc.element({(1,): 1})
    assert not nc.multiply(b, b)


def test_free_plactic_series():
    assert Q.free_plactic_hilbert(3, 4) == [1, 2, 4, 6, 9]


def test_unknown_algebra():
    with pytest.raises(Exception):
        Q.algebra("XYZ", 3)
