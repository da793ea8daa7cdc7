import pytest

from plactic_forge import appendix as A


@pytest.mark.parametrize("table", A.CHAIN_TABLES)
def test_chains(table):
    for row in A.check_table(table):
        assert row["ok"], row
        assert not row["stale_flags"], row


def test_kn_at_one():
    for row in A.check_kn():
        assert row["ok"] and not row["stale_flags"], row


def test_computed_kn_relations_hold():
    assert all(r["holds"] for r in A.kn_relations(A.KN_RELATIONS_COMPUTED))


def test_some_printed_relations_differ():
    rows = A.kn_relations()
    assert sum(not r["holds"] for r in rows) == 3


def test_typo_registry_only_names_real_heads():
    for table, heads in A.TYPOS.items():
        if table == "KN_AT_ONE":
            continue
        names = {row["head"] for row in A.check_table(table)}
        assert set(heads) <= names
