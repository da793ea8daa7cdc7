from plactic_forge import kernels as K
from plactic_forge import families as F
from plactic_forge import perm as P
from plactic_forge import quotients as Q


def test_free_kernel_term_count():
    spec = K.KernelSpec("C", 4)
    assert len(spec.factors()) == 6
    total = sum(len(c.terms) for c in K.expand_free(spec).values())
    assert total == 2 ** 6


def test_double_schubert_and_grothendieck():
    for n in (3, 4):
        assert K.schubert_check(n)["ok"]
        assert K.grothendieck_check(n)["ok"]
        assert K.compatible_check(n)["ok"]


def test_dual_kernel():
    out = K.dual_check(3)
    for w in P.all_perms(3):
        assert out[w] == F.dual_grothendieck(w, 1)


def test_table_sizes():
    assert len(K.coefficient_table("K", 4)) == 42
    assert len(K.coefficient_table("GK", 4)) == 26
    assert len(K.coefficient_table("U", 4, m=3)) == 35


def test_gk_modes_differ_at_n4():
    a = K.coefficient_table("GK", 4)
    b = K.coefficient_table("GK", 4, gk_mode="direct")
    assert a != b


def test_key_specialization():
    assert all(r["ok"] for r in K.key_specialization_check(4))
    assert all(r["ok"] for r in K.key_specialization_check(4, "GK"))


def test_bottom_code_lower_bound():
    for r in K.bottom_code_lower_bound(4):
        assert r["nonnegative"]
        assert r["equal"] == r["partition"]


def test_plactic_polynomials_partition_basis():
    groups = K.plactic_polynomials(4)
    assert sum(len(v) for v in groups.values()) == Q.algebra("PC", 4).dim()
