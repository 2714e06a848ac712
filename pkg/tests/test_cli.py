import json

import pytest
from hypothesis import given, settings, strategies as st

from cyclesys import construct, construct_df
from cyclesys.cli import main, sweep_triples
from cyclesys.jsonio import dumps, from_dict, loads, to_dict
from known_families import DF_28_4_C6


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write_28(tmp_path, tamper=False):
    m, n, ell, cycles = DF_28_4_C6
    cycles = [[x % 28 for x in c] for c in cycles]
    if tamper:
        cycles[1][4] = 4
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"kind": "df", "m": m, "n": n, "ell": ell, "v": 28, "base_cycles": cycles}))
    return p


@settings(max_examples=25)
@given(st.sampled_from([(7, 4, 6), (3, 15, 5), (7, 3, 9), (13, 5, 10), (11, 15, 15), (9, 1, 4)]))
def test_round_trip_is_byte_identical(t):
    obj = construct(*t)
    text = dumps(obj)
    assert text.endswith("\n")
    assert dumps(loads(text)) == text
    assert from_dict(to_dict(obj)).orbits == obj.orbits


def test_df_round_trip():
    df = construct_df(7, 4, 6)
    assert loads(dumps(df)) == df
    assert list(to_dict(df)) == ["kind", "m", "n", "ell", "v", "base_cycles"]


@pytest.mark.parametrize("text", [
    "{", "[]", '{"kind": "x"}',
    '{"kind": "df", "m": 7, "n": 1, "ell": 3, "v": 8, "base_cycles": []}',
    '{"kind": "df", "m": 7, "n": 1, "ell": 3, "base_cycles": [[0, "a", 3]]}',
    '{"kind": "system", "m": 7, "n": 1, "ell": 3, "base_cycles": [[0, 1, 3]]}',
])
def test_loads_rejects_malformed(text):
    with pytest.raises(ValueError):
        loads(text)


def test_construct_ok(capsys):
    code, out, _ = run(capsys, "construct", 7, 4, 6)
    assert code == 0
    d = json.loads(out)
    assert d["kind"] == "system" and d["v"] == 28


def test_construct_df_only(capsys):
    code, out, _ = run(capsys, "construct", 7, 4, 6, "--df-only")
    assert code == 0 and json.loads(out)["kind"] == "df"


def test_construct_nonexistent(capsys):
    code, out, err = run(capsys, "construct", 7, 2, 3)
    assert code == 2 and out == ""
    assert "m = 2,3 mod 4, n = 2 mod 4" in err


def test_construct_not_in_regime(capsys):
    code, _, err = run(capsys, "construct", 5, 3, 4)
    assert code == 3 and "not-in-regime" in err


@pytest.mark.parametrize("argv", [["construct", "x", 2, 3], ["bogus"], []])
def test_bad_input(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main([str(a) for a in argv])
    assert exc.value.code == 4
    capsys.readouterr()


def test_bad_triple_values(capsys):
    code, _, _ = run(capsys, "construct", 1, 2, 3)
    assert code == 4


def test_verify_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", write_28(tmp_path))
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "verify", write_28(tmp_path, tamper=True))
    assert code == 1 and not json.loads(out)["ok"]
    trunc = tmp_path / "t.json"
    trunc.write_text(write_28(tmp_path).read_text()[:30])
    code, _, _ = run(capsys, "verify", trunc)
    assert code == 4
    code, _, _ = run(capsys, "verify", tmp_path / "missing.json")
    assert code == 4


def test_construct_then_verify(capsys, tmp_path):
    _, out, _ = run(capsys, "construct", 11, 15, 15)
    p = tmp_path / "s.json"
    p.write_text(out)
    code, out, _ = run(capsys, "verify", p)
    assert code == 0


def test_search_codes(capsys, tmp_path):
    cache = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "search", 9, 1, 4, "--cache-path", cache, "--seed", 3)
    assert code == 0 and json.loads(out)["kind"] == "df"
    assert cache.exists()
    code, _, _ = run(capsys, "search", 7, 2, 3)
    assert code == 2
    code, _, _ = run(capsys, "search", 11, 1, 5, "--budget-nodes", 1, "--cache-path", tmp_path / "d.jsonl")
    assert code == 3


def test_admissible(capsys):
    code, out, _ = run(capsys, "admissible", 7, 2, 3)
    d = json.loads(out)
    assert code == 2 and d["exclusion"] == "C" and not d["admissible"]
    code, out, _ = run(capsys, "admissible", 7, 4, 6)
    assert code == 0 and json.loads(out)["admissible"]
    code, out, _ = run(capsys, "admissible", 5, 3, 4)
    assert code == 3 and not json.loads(out)["in_regime"]


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", 20)
    d = json.loads(out)
    assert code == 0 and d["verified"] and d["failed"] == 0
    assert d["triples"] == len(list(sweep_triples(20)))
    assert (7, 2, 3) in set(sweep_triples(20))
    assert d["nonexistent"] >= 1
    assert [3, 3, 3, "nonexistent", "no-triangle-df"] in d["admissible_but_nonexistent"]
    assert d["other_disagreements"] == []


def test_sweep_parallel_matches_serial(capsys):
    _, a, _ = run(capsys, "sweep", 60)
    _, b, _ = run(capsys, "sweep", 60, "--jobs", 2)
    a, b = json.loads(a), json.loads(b)
    for key in ("triples", "built", "nonexistent", "unsupported", "failed"):
        assert a[key] == b[key]


def test_sweep_bound(capsys):
    code, _, _ = run(capsys, "sweep", 5)
    assert code == 4
