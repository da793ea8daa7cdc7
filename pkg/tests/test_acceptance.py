"""One test per acceptance criterion.  Exact comparisons throughout (tolerance
0); the time limits are asserted on wall-clock seconds."""
import time
from contextlib import contextmanager

import pytest

from plactic_forge import counting as C
from plactic_forge import verify as V


@contextmanager
def within(seconds):
    t = time.perf_counter()
    yield
    took = time.perf_counter() - t
    assert took < seconds, "took %.1f s, limit %d s" % (took, seconds)


def passes(suite, *names):
    rep = V.run_suite(suite, only=set(names) if names else None)
    assert not rep.failures, rep.failures
    assert not rep.skipped or all(s["name"].startswith("identities") for s in rep.skipped), rep.skipped
    return rep


def test_01_schubert_key_grothendieck_tables():
    with within(5):
        passes("appendix", "table_schubert_grothendieck", "table_key", "table_grothendieck_dual",
               "table_key_grothendieck")


def test_02_kernel_coefficient_tables():
    with within(30):
        passes("appendix", "table_double_key", "table_double_key_grothendieck", "table_rectangular_key")
        passes("kernels", "table_sizes")


def test_03_kn_values_and_totals():
    with within(30):
        passes("appendix", "kn_at_one", "kn_totals")


def test_04_pc_dimension_and_rows():
    with within(120):
        passes("hilbert", "pc_dimensions", "pc_rows")


def test_05_pf_and_box_counts():
    with within(60):
        passes("hilbert", "pf_rows", "pf_dimensions")
        passes("counting", "box_counts")


def test_06_kernel_family_cross_oracle():
    with within(60):
        passes("kernels", "nilcoxeter_double_schubert", "idcoxeter_double_grothendieck",
               "compatible_sequences")


def test_07_counting_identities():
    with within(60):
        passes("counting", "identities", "refined_vector", "refined_asm")


def test_07_refined_sum_with_literal_statistic():
    # t counted by lam_1 minus the entries equal to n - 1, as stated;
    # the sum only matches when t counts those entries directly
    with within(60):
        for n in range(2, 6):
            r = C.refined_asm_check(n)
            assert r["literal"] == r["target"], (n, r["literal"], r["target"])


def test_08_genocchi_product_as_stated():
    with within(60):
        for n in range(2, 7):
            g = C.genocchi_suite(n)
            assert g["product_ok"], (n, g["A(n+1;t)"], g["product_2..n(1+jt)"])


def test_08_genocchi_product_shifted():
    with within(60):
        for n in range(2, 7):
            assert C.genocchi_suite(n)["shifted_product_ok"]


def test_08_genocchi_delta6():
    with within(60):
        g = C.genocchi_suite(6)
        assert g["A(n+2;t)"] == [2073, 8146, 12840, 10248, 4200, 720]
        assert g["at_one"] == 38227


def test_08_sign_at_minus_one_as_stated():
    with within(60):
        for n in range(2, 7):
            g = C.genocchi_suite(n)
            assert g["at_minus_one"] == (-1) ** n, (n, g["at_minus_one"])


def test_08_sign_at_minus_one_shifted():
    with within(60):
        for n in range(2, 7):
            assert C.genocchi_suite(n)["sign_shifted_ok"]


def test_09_lattice():
    with within(60):
        passes("lattice", "sizes", "rank_rows", "length_example", "ehresmann_bruhat")


def test_10_property_suites():
    with within(300):
        passes("operators")


def test_11_flagged_discrepancies_recorded():
    rep = V.run_suite("conjectures")
    names = {f["name"].split(":")[0] for f in rep.flagged}
    for want in ("kn_gamma_value", "idplactic_semantics", "kn_positivity_gamma", "dz_positivity",
                 "mn_middle_coefficient"):
        assert want in names, want
    assert not rep.failures


@pytest.mark.parametrize("suite", V.SUITES)
def test_verify_suites_clean(suite):
    assert V.run_suite(suite).ok
