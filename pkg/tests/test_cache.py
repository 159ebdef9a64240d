import json

from rho_r.cache import ENV_VAR, ResultCache, default_cache_path
from rho_r.search import SearchConfig, SearchResult, min_profiles_path


def test_default_path_honours_env(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "x.jsonl"))
    assert default_cache_path() == tmp_path / "x.jsonl"
    monkeypatch.delenv(ENV_VAR)
    assert default_cache_path().name == "results.jsonl"


def test_last_entry_wins_and_torn_lines_skipped(tmp_path, caplog):
    cache = ResultCache(tmp_path / "r.jsonl")
    assert cache.lookup("path", 5) is None
    cache.append({"family": "path", "n": 5, "rho": 11, "profiles": []})
    cache.append({"family": "path", "n": 5, "rho": 10, "profiles": [[1, 2, 2, 2, 3]]})
    with cache.path.open("a") as fh:
        fh.write('{"family": "path", "n": 5, "rho"')
    assert cache.lookup("path", 5)["rho"] == 10
    assert "skipping" in caplog.text


def test_search_round_trips_through_cache(tmp_path):
    path = tmp_path / "r.jsonl"
    cfg = SearchConfig(cache_path=str(path))
    first = min_profiles_path(7, cfg)
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    assert SearchResult.from_json(json.loads(lines[0])) == first
    # a doctored entry is served back without recomputation
    entry = json.loads(lines[0])
    entry["nodes"] = -1
    ResultCache(path).append(entry)
    assert min_profiles_path(7, cfg).nodes == -1
    fresh = min_profiles_path(7, SearchConfig(cache_path=str(path), recompute=True))
    assert fresh == first and fresh.nodes > 0
