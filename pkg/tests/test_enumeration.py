import json

import pytest

from cremona.enumeration import (enumerate_noether, enumerate_proper, family_3m,
                                 family_de_jonquieres, family_sub2,
                                 named_family_types)
from cremona.errors import PreconditionError
from cremona.lattice import HomaloidalType, is_proper

from oracles import hudson_plain, noether_solutions

PROPER_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 4, 7: 5, 8: 9, 9: 10, 10: 17, 11: 19}


@pytest.mark.parametrize("d", range(1, 8))
def test_noether_matches_brute_force(d):
    got = {t.mults for t in enumerate_noether(d)}
    assert got == noether_solutions(d)


@pytest.mark.parametrize("d", range(1, 10))
def test_proper_subset_matches_plain_hudson(d):
    expect = [t for t in enumerate_noether(d) if hudson_plain(d, list(t.mults))]
    assert enumerate_proper(d) == expect


@pytest.mark.parametrize("d,n", PROPER_COUNTS.items())
def test_proper_counts(d, n):
    assert len(enumerate_proper(d)) == n


def test_table1_plus_families(table1):
    for d in range(2, 12):
        expect = {t for t in table1 if t.degree == d} | set(named_family_types(d)[:2])
        assert set(enumerate_proper(d)) == expect


def test_order_is_descending():
    ts = enumerate_proper(10)
    assert ts == sorted(ts, key=HomaloidalType.sort_key)
    assert ts[0] == family_de_jonquieres(10)


def test_threads_identical():
    assert enumerate_proper(14, threads=4) == enumerate_proper(14, threads=1)


def test_cache_round_trip_and_checksum(tmp_path):
    first = enumerate_proper(9, cache_dir=tmp_path)
    path = tmp_path / "proper-9.json"
    assert path.exists() and (tmp_path / "proper-9.json.sha256").exists()
    assert enumerate_proper(9, cache_dir=tmp_path) == first
    # a corrupted cache is detected and recomputed
    path.write_text(json.dumps([{"degree": 9, "mults": [8] + [1] * 16}]))
    assert enumerate_proper(9, cache_dir=tmp_path) == first


def test_bad_degree():
    with pytest.raises(PreconditionError):
        enumerate_noether(0)


class TestFamilies:
    def test_de_jonquieres(self):
        assert family_de_jonquieres(3) == HomaloidalType.parse("3;2,1^4")

    def test_sub2(self):
        assert family_sub2(5) == HomaloidalType.parse("5;3,2^3,1^3")

    @pytest.mark.parametrize("m", range(3, 12))
    def test_3m_proper(self, m):
        for t in family_3m(m):
            assert is_proper(t)
            assert hudson_plain(t.degree, list(t.mults))

    def test_3m_degree9(self):
        assert family_3m(3)[0] == HomaloidalType.parse("9;4^3,3^3,2,1")

    def test_guards(self):
        with pytest.raises(PreconditionError):
            family_3m(2)
        with pytest.raises(PreconditionError):
            family_sub2(3)
        with pytest.raises(PreconditionError):
            family_de_jonquieres(1)
