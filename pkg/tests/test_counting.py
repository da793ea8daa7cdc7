from hypothesis import given
from hypothesis import strategies as st

from plactic_forge import counting as C
from plactic_forge.plactic import partitions_in_staircase


def test_sequences():
    assert [v for _, v in C.sequence("asm", 6)] == [1, 2, 7, 42, 429, 7436]
    assert C.catalan(5) == 42
    assert C.schroeder(4) == 90
    assert C.b_nk(3, 3) == 112 == C.tspp(3) * C.asm(3)


def test_refined_asm():
    assert [C.asm_refined(4, j) for j in range(1, 5)] == [7, 14, 14, 7]


@given(st.integers(1, 4), st.integers(1, 6))
def test_determinant_counts_tableaux(n, N):
    for lam in partitions_in_staircase(n):
        assert C.a_lambda(lam, N) == len(C.tableaux(lam, N))


def test_staircase_sum_is_asm():
    for n in range(1, 6):
        assert sum(C.a_lambda(l, n) for l in partitions_in_staircase(n)) == C.asm(n)


def test_refined_statistic():
    r = C.refined_asm_check(4)
    assert r["top_ok"]
    assert r["literal"] == [19, 17, 6]


def test_genocchi_shifted_forms():
    for n in range(2, 6):
        g = C.genocchi_suite(n)
        assert g["shifted_product_ok"]
        assert g["sign_shifted_ok"]
        assert g["at_zero_ok"] and g["at_one_ok"]


def test_genocchi_delta6():
    assert C.genocchi_suite(6)["A(n+2;t)"] == [2073, 8146, 12840, 10248, 4200, 720]


def test_identities():
    rows = C.identity_suite(4)
    assert all(r["ok"] for r in rows if r["ok"] is not None)


def test_det_integer():
    assert C.det([[2, 1], [1, 1]]) == 1
    assert C.det([]) == 1


def test_counting_nonnegative():
    for n in (3, 4):
        for N in range(n, n + 3):
            assert all(ok for _, ok in C.nonnegativity_check(n, N))
