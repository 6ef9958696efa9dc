import json

import pytest

from burntpancake.cli import main
from burntpancake.perm import apply_flips, parse_permutation as P


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(out):
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


def test_distance_321(capsys):
    code, out, _ = run(capsys, "distance", "3", "2", "1")
    d = kv(out)
    assert code == 0
    assert (d["g"], d["simple"], d["t"], d["psrd"]) == ("4", "yes", "1", "5")


def test_distance_identity(capsys):
    d = kv(run(capsys, "distance", "1 2 3")[1])
    assert d["g"] == "0" and d["psrd"] == "0"


def test_distance_non_simple(capsys):
    code, out, _ = run(capsys, "distance", "2", "1")
    d = kv(out)
    assert code == 0 and d["g"] == "2" and d["simple"] == "no" and "psrd" not in d
    assert d["note"] == "not simple: formula unavailable, lower bound only"


def test_distance_machine_keys_fixed(capsys):
    out = run(capsys, "distance", "--machine", "-2 -3 1")[1]
    obj = json.loads(out)
    assert list(obj) == ["perm", "n", "c_bg", "c1_bg", "first_element_fixed", "simple",
                         "lower_bound", "t", "formula_value", "c_gamma", "c1_gamma", "ped"]
    assert obj["formula_value"] == 4


def test_distance_parse_error(capsys):
    code, _, err = run(capsys, "distance", "2", "2")
    assert code == 1 and "'2'" in err


@pytest.mark.parametrize("text, expected", [("3 2 1", "2 3 2 3 2"), ("1 2 3", ""), ("-1", "1")])
def test_sort_outputs(capsys, text, expected):
    code, out, _ = run(capsys, "sort", text)
    assert code == 0 and out == expected + "\n"


def test_sort_trace(capsys):
    code, out, _ = run(capsys, "sort", "--trace", "3", "2", "1")
    lines = out.splitlines()
    assert lines[0] == "source 3 2 1"
    assert lines[1] == "2 lemma5-orient -2 -3 1"
    assert lines[-2] == "2 proper-split 1 2 3"
    assert lines[-1] == "2 3 2 3 2"


def test_sort_non_simple(capsys):
    code, _, err = run(capsys, "sort", "2", "1")
    assert code == 2 and "distance" in err


def test_sort_machine_folds_to_identity(capsys):
    obj = json.loads(run(capsys, "sort", "--machine", "1 4 3 2")[1])
    assert apply_flips(P("1 4 3 2"), obj["flips"]).is_identity()
    assert obj["length"] == 6


def test_batch_file(tmp_path, capsys):
    f = tmp_path / "perms.txt"
    f.write_text("# corpus\n3 2 1\n\n-1\n2 1\n")
    code, out, _ = run(capsys, "distance", "--file", str(f))
    assert code == 0
    assert out.splitlines() == [
        "3 2 1\tg=4\tsimple=yes\tpsrd=5",
        "-1\tg=1\tsimple=yes\tpsrd=1",
        "2 1\tg=2\tsimple=no\tpsrd=?",
    ]


def test_missing_file(capsys):
    assert run(capsys, "sort", "--file", "/nonexistent/perms.txt")[0] == 1


def test_analyze_figure(capsys):
    code, out, _ = run(capsys, "analyze", "-7 3 -1 4 2 8 -6 -5")
    cycles = [ln for ln in out.splitlines() if ln.startswith("cycle ")]
    assert code == 0 and len(cycles) == 2
    assert sorted(int(ln.split()[3]) for ln in cycles) == [1, 8]


def test_analyze_321_and_identity(capsys):
    out = run(capsys, "analyze", "--machine", "3 2 1")[1]
    tree = json.loads(out)
    assert [c["length"] for c in tree["cycles"]] == [2, 2]
    assert not any(c["oriented"] for c in tree["cycles"])
    assert len(tree["components"]) == 1
    tree = json.loads(run(capsys, "analyze", "--machine", "1 2 3")[1])
    assert tree["c"] == tree["c1"] == 4


def test_verify_n3(capsys):
    code, out, _ = run(capsys, "verify", "3", "--generators", "signed")
    assert code == 0
    assert "PASS lower bound n=3: 48 cases" in out


def test_verify_unsigned_7(capsys):
    code, out, _ = run(capsys, "verify", "7", "--generators", "unsigned")
    assert code == 0 and "PASS ped formula n=7: 5040 cases, 0 violations" in out


def test_verify_over_cap(capsys):
    code, _, err = run(capsys, "verify", "20")
    assert code == 2 and "cap" in err


def test_verify_lemma9_machine(capsys):
    code, out, _ = run(capsys, "verify", "3", "--lemma9", "--machine")
    obj = json.loads(out)
    assert code == 0 and obj["ok"] and obj["checks"][-1]["name"] == "lemma 9 n=3"


def test_verify_violation_exit_code(capsys, monkeypatch):
    import burntpancake.verify as v
    monkeypatch.setattr(v, "psrd_lower_bound", lambda pi: 99)
    code, out, _ = run(capsys, "verify", "2", "--generators", "signed")
    assert code == 3 and "FAIL lower bound" in out


def test_enumerate_simple(capsys):
    out = run(capsys, "enumerate-simple", "2")[1]
    assert out.splitlines() == ["1 2", "1 -2", "-1 2", "-2 -1"]


def test_random_is_seeded(capsys):
    a = run(capsys, "random", "--n", "6", "--seed", "5", "--simple", "--count", "3")[1]
    b = run(capsys, "random", "--n", "6", "--seed", "5", "--simple", "--count", "3")[1]
    assert a == b and len(a.splitlines()) == 3
    from burntpancake.breakpoint import build_breakpoint_graph, is_simple
    assert all(is_simple(build_breakpoint_graph(P(line))) for line in a.splitlines())


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1
