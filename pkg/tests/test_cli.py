import json
import re
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from rho_r.cli import load_manifest, run
from rho_r.formats import parse_profile

SCHEMA = json.loads((resources.files("rho_r") / "data" / "output.schema.json").read_text())
ERROR_LINE = re.compile(r"^rho-r: error\[[a-z-]+\]: .+$")


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_verify_exit_codes(capsys):
    code, out, _ = invoke(capsys, "verify", "path", "--profile", "1,2,2,2,3")
    assert code == 0 and "feasible" in out
    code, data = invoke_json(capsys, "verify", "path", "--profile", "1,1,2,2,3")
    assert code == 1
    assert data["results"][0]["witness"] == {"subset": [0, 1, 3], "achieved": 2}


def test_verify_targets(capsys, tmp_path):
    assert invoke(capsys, "verify", "cycle:4", "--profile", "1,1,2,2")[0] == 0
    assert invoke(capsys, "verify", "cycle", "--profile", "1,2,1,2")[0] == 1
    assert invoke(capsys, "verify", "doublestar:2,3", "--profile", "2,4,2,2,1,3,5")[0] == 0
    assert invoke(capsys, "verify", "anticlique:3", "--profile", "1,1,3")[0] == 1
    graph = tmp_path / "k3.txt"
    graph.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, data = invoke_json(capsys, "verify", f"@{graph}", "--profile", "1,1,1")
    assert code == 0 and data["feasible"]
    listing = tmp_path / "p5.txt"
    listing.write_text("# minimal P_5 profiles\n1,2,2,2,3\n3,1,1,2,3\n")
    code, data = invoke_json(capsys, "verify", "path", "--profile-file", str(listing))
    assert code == 0 and len(data["results"]) == 2


def test_construct(capsys):
    code, data = invoke_json(capsys, "construct", "path-ub", "16")
    assert code == 0
    assert data["profile"] == [1, 8, 5, 4, 2, 8, 6, 4, 3, 8, 7, 4, 4, 8, 8, 8]
    assert data["value"] == 88
    code, data = invoke_json(capsys, "construct", "double-star", "2", "3")
    assert data["value"] == data["total"] == 19 and data["feasible"]
    code, data = invoke_json(capsys, "construct", "anticlique", "5")
    assert data["total"] == 15
    assert invoke(capsys, "construct", "double-star", "3")[0] == 2


def test_bounds(capsys):
    code, data = invoke_json(capsys, "bounds", "path", "28")
    assert code == 0 and data["th1"] == "421/2" and data["corollary"] == "421/2"
    code, data = invoke_json(capsys, "bounds", "path", "28", "--as-stated")
    assert data["corollary"] == "211"
    code, data = invoke_json(capsys, "bounds", "path", "56", "--params", "1/2,9/28,1/4,1/14,1/14")
    assert data["th1"] == "815"
    code, _, err = invoke(capsys, "bounds", "path", "28", "--params", "3/10,2/5,1/10,0,0")
    assert code == 2 and "condition 1" in err and ERROR_LINE.match(err.strip())


def test_search_and_cache(capsys, isolated_cache):
    code, data = invoke_json(capsys, "search", "path", "5")
    assert code == 0 and data["rho"] == 10 and data["count"] == 5
    assert isolated_cache.exists()
    code, data = invoke_json(capsys, "search", "cycle", "5", "--no-prune", "--no-cache")
    assert data["rho"] == 9
    code, out, _ = invoke(capsys, "search", "path", "6", "--threads", "2")
    assert out.startswith("rho_R(P_6) = 14 (14 profiles)")
    code, _, err = invoke(capsys, "search", "path", "6", "--budget", "13", "--recompute")
    assert code == 3 and "error[budget]" in err and ERROR_LINE.match(err.strip())
    code, _, err = invoke(capsys, "search", "path", "6", "--budget", "2", "--recompute")
    assert code == 2 and "error[parameter]" in err


def test_conjectures(capsys):
    code, data = invoke_json(capsys, "conjectures", "--max", "7")
    assert code == 0 and [r["n"] for r in data["rows"]] == [5, 6, 7]
    assert data["rows"][-1]["odd_tight"] is True


def test_rainbow_and_badcolor(capsys, tmp_path):
    code, data = invoke_json(capsys, "rainbow", "path", "--profile", "1,2,2,2,3", "--seed", "3")
    assert code == 0 and data["found"] and len(set(data["colors"])) == 5
    coloring = tmp_path / "c.txt"
    coloring.write_text("1\n2\n3\n1\n")
    code, data = invoke_json(capsys, "rainbow", "path", "--profile", "1,2,1",
                             "--coloring", str(coloring))
    assert code == 1 and sorted(data["hall_set"]) == [0, 2]
    code, data = invoke_json(capsys, "badcolor", "path", "--profile", "1,1,2,2,3")
    assert code == 1 and data["subset"] == [0, 1, 3]
    coloring.write_text("".join(f"{c}\n" for c in data["coloring"]))
    code, _ = invoke_json(capsys, "rainbow", "path", "--profile", "1,1,2,2,3",
                          "--coloring", str(coloring))
    assert code == 1
    code, data = invoke_json(capsys, "badcolor", "path", "--profile", "1,2,2,2,3")
    assert code == 0 and data["feasible"]
    code, _, err = invoke(capsys, "badcolor", "path", "--profile", "1,2,2,2,3", "--subset", "0,1")
    assert code == 2 and ERROR_LINE.match(err.strip())


def test_improper_coloring_is_a_usage_error(capsys, tmp_path):
    coloring = tmp_path / "c.txt"
    coloring.write_text("0\n0\n")
    code, _, err = invoke(capsys, "rainbow", "path", "--profile", "1,1", "--coloring", str(coloring))
    assert code == 2 and "error[validation]" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "path", "--profile", "1,0,2"],
        ["verify", "path", "--profile", "1,x"],
        ["verify", "cycle", "--profile", "1,2"],
        ["verify", "hypercube:3", "--profile", "1"],
        ["verify", "path"],
        ["construct", "path-ub", "0"],
        ["bounds", "path", "27", "--params", "1/2,1/3"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2
    if argv and argv[0] != "frobnicate":
        assert ERROR_LINE.match(err.strip().splitlines()[-1]) or "usage" in err


def test_printed_profiles_round_trip(capsys):
    _, out, _ = invoke(capsys, "search", "path", "7")
    for line in out.splitlines()[1:]:
        text = line.split(") ", 1)[1]
        p = parse_profile(text)
        assert ",".join(map(str, p)) == text
    _, data = invoke_json(capsys, "construct", "path-ub", "13")
    _, out, _ = invoke(capsys, "construct", "path-ub", "13")
    assert list(parse_profile(out.splitlines()[0])) == data["profile"]


def test_suite_controls(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text('{"cases": []}')
    assert invoke(capsys, "suite", str(empty))[0] == 0
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"cases": [
        {"name": "P_5 with a wrong value", "argv": ["search", "path", "5"],
         "expect": {"exit": 0, "json": {"rho": 9}}},
        {"name": "P_5 right", "argv": ["search", "path", "5"],
         "expect": {"exit": 0, "json": {"rho": 10, "count": 5}}},
    ]}))
    code, data = invoke_json(capsys, "suite", str(wrong))
    assert code == 1 and data["passed"] == 1 and data["failed"] == 1
    assert invoke(capsys, "suite", str(tmp_path / "missing.json"))[0] == 2


def test_shipped_manifests_cover_every_table():
    extended = load_manifest("builtin:paper_tables_extended")
    assert {c["name"] for c in extended["cases"]} >= {"search path 13", "search path 14"}
    manifest = load_manifest("builtin:paper_tables")
    searched = {tuple(c["argv"][:3]) for c in manifest["cases"] if c["argv"][0] == "search"}
    assert {("search", "path", str(n)) for n in range(5, 13)} <= searched
    assert {("search", "cycle", str(n)) for n in range(4, 11)} <= searched


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rho_r", "verify", "path", "--profile", "1,1,2,2,3"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "witness=0,1,3" in proc.stdout
