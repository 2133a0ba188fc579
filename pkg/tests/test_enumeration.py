import json

import pytest

from topofilt import enumeration as en
from topofilt import filtration as fl
from topofilt import topology as tp
from topofilt.errors import CacheCorrupt, GroundSizeTooLarge

from . import oracles

# n=3 pair count, frozen from the pair scan and cross-checked below
PAIRS_N3 = 192


def test_small_counts():
    assert [len(en.enumerate_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_catalog_matches_family_search(n):
    cat = en.enumerate_topologies(n)
    assert [t.opens for t in cat] == oracles.topologies_by_families(n)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_counts_match_preorder_oracle(n):
    assert len(en.enumerate_topologies(n)) == oracles.count_preorders_numpy(n)


@pytest.mark.slow
def test_n5_count():
    assert len(en.enumerate_topologies(5)) == oracles.count_preorders_numpy(5) == 6942


def test_n2_entries(S, S2, D2, I2):
    assert set(en.enumerate_topologies(2)) == {I2, S, S2, D2}


def test_ground_size_limits():
    with pytest.raises(GroundSizeTooLarge):
        en.enumerate_topologies(6)
    with pytest.raises(GroundSizeTooLarge):
        list(en.enumerate_pairs(5))
    with pytest.raises(GroundSizeTooLarge):
        list(en.enumerate_filtrations(tp.discrete(5), tp.discrete(5), 1))


def test_catalog_invariants():
    cat = en.enumerate_topologies(4)
    opens = [t.opens for t in cat]
    assert opens == sorted(set(opens))
    for i, t in enumerate(cat):
        assert cat.position(t) == i
        assert tp.from_preorder(4, tp.specialization_preorder(t)) == t


def test_sharded_generation_matches():
    assert en.enumerate_topologies(4, jobs=2).entries == en.enumerate_topologies(4).entries


def test_pair_counts():
    assert sum(1 for _ in en.enumerate_pairs(1)) == 1
    assert sum(1 for _ in en.enumerate_pairs(2)) == 9
    assert sum(1 for _ in en.enumerate_pairs(3)) == PAIRS_N3


def test_pair_count_oracle_n3():
    fams = oracles.topologies_by_families(3)
    assert sum(oracles.coarser(a, b) for a in fams for b in fams) == PAIRS_N3


def test_filtrations_examples(S, D2, I2):
    for T in en.enumerate_topologies(2):
        assert any(f.stages == (T,) for f in en.enumerate_filtrations(T, T, 1))
    found = [f.stages for f in en.enumerate_filtrations(S, D2, 2)]
    assert (S, D2) in found
    found = [f.stages for f in en.enumerate_filtrations(I2, D2, 2)]
    assert (I2, D2) in found
    assert list(en.enumerate_filtrations(D2, S, 2)) == []


@pytest.mark.parametrize("weak", [False, True])
def test_filtrations_complete_n2(weak):
    """Every chain of length <= 3 either appears or fails the check."""
    cat = list(en.enumerate_topologies(2))
    for s in cat:
        for t in cat:
            if not tp.is_coarser(s, t):
                continue
            got = {f.stages for f in en.enumerate_filtrations(s, t, 3, weak=weak)}
            chains = [(s,)]
            chains += [(s, a) for a in cat if tp.is_coarser(s, a) and tp.is_coarser(a, t)]
            chains += [c + (b,) for c in chains[1:] for b in cat
                       if tp.is_coarser(c[-1], b) and tp.is_coarser(b, t)]
            want = {c for c in chains if oracles.is_filtration(
                2, [x.opens for x in c], t.opens, weak=weak)}
            assert got == want


def test_cache_round_trip(tmp_path):
    cat = en.enumerate_topologies(3)
    path = en.cache_store(cat, tmp_path)
    assert path.name == "topologies_n3.jsonl"
    header = json.loads(path.read_text().splitlines()[0])
    assert header == {"format": en.CACHE_FORMAT, "n": 3, "count": 29}
    assert en.cache_load(3, tmp_path) == cat


def test_cache_tampered_count(tmp_path):
    path = en.cache_store(en.enumerate_topologies(3), tmp_path)
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(CacheCorrupt):
        en.cache_load(3, tmp_path)
    lines[0] = json.dumps({"format": en.CACHE_FORMAT, "n": 3, "count": 30})
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheCorrupt):
        en.cache_load(3, tmp_path)


def test_cache_bad_entry(tmp_path):
    path = en.cache_store(en.enumerate_topologies(2), tmp_path)
    lines = path.read_text().splitlines()
    lines[1] = json.dumps({"n": 2, "opens": [0, 1]})
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheCorrupt):
        en.cache_load(2, tmp_path)
    path.write_text("not json\n")
    with pytest.raises(CacheCorrupt):
        en.cache_load(2, tmp_path)


def test_cache_missing_regenerates(tmp_path):
    cat = en.cache_load(3, tmp_path / "fresh")
    assert len(cat) == 29
    assert en.cache_path(3, tmp_path / "fresh").exists()


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("TOPOFILT_CACHE", str(tmp_path))
    assert en.cache_path(2) == tmp_path / "topologies_n2.jsonl"


def test_dumps_deterministic():
    assert en.dumps_catalog(en.enumerate_topologies(4)) == en.dumps_catalog(en.enumerate_topologies(4))


def test_filtration_enumeration_feeds_is_filtration():
    for s, t in en.enumerate_pairs(3):
        for f in en.enumerate_filtrations(s, t, 2):
            assert fl.is_filtration(f) is None
