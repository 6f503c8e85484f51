import json
from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from solenoid_lab.cli import EXIT_CONFIG, EXIT_INVARIANT, EXIT_LIMIT, EXIT_OK, main
from solenoid_lab.config import parse_config
from solenoid_lab.report import Report, emit, parse_json, run, to_json


def bundled(name):
    return str(resources.files("solenoid_lab.configs").joinpath(name))


@pytest.fixture
def write(tmp_path):
    def w(text, name="c.ini"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return w


NON_NORMAL = """
[group]
generators = x, y
relators = "x x", "y y y", "x y x y"

[tower]
builder = explicit
subgroups = "x"
"""


def test_analyze_dyadic_text(capsys):
    assert main(["analyze", bundled("dyadic.ini")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "BIHOMOGENEOUS_CERTIFIED(0)" in out
    assert "L6: order 64" in out


def test_dot_output(capsys):
    assert main(["analyze", bundled("dyadic.ini"), "--depth", "3", "--format", "dot"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("digraph tower {")
    assert out.count("[label=\"L") == 4
    assert out.count("->") == 3
    assert out.count('[label="2"]') == 3


def test_json_round_trip_and_determinism(capsys):
    main(["analyze", bundled("klein.ini"), "--format", "json"])
    a = capsys.readouterr().out
    main(["analyze", bundled("klein.ini"), "--format", "json"])
    b = capsys.readouterr().out
    assert a == b
    d = json.loads(a)
    assert list(d) == ["input", "levels", "verdict", "checks", "timing"]
    assert d["timing"] == {}
    assert to_json(parse_json(a)) == a


def test_timing_flag(capsys):
    main(["analyze", bundled("dyadic.ini"), "--format", "json", "--timing"])
    d = json.loads(capsys.readouterr().out)
    assert d["timing"] and all(v >= 0 for v in d["timing"].values())


def test_group_only_config_echoes_input(write, capsys):
    path = write("[group]\ngenerators = a, b\nrelators = \"a b a' b'\"\n")
    assert main(["analyze", path, "--format", "json"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["levels"] == [] and d["verdict"] is None and d["checks"] == {}
    assert d["input"]["group"]["generators"] == "a, b"


def test_exit_config_error(write, capsys):
    assert main(["analyze", write("[group]\ngenerators = a\nrelators = \"a e\"\n")]) == EXIT_CONFIG
    assert "line 3" in capsys.readouterr().err
    assert main(["analyze", "/nonexistent.ini"]) == EXIT_CONFIG
    assert main(["frobnicate"]) == EXIT_CONFIG


def test_exit_limit(capsys):
    assert main(["analyze", bundled("dyadic.ini"), "--limit", "5"]) == EXIT_LIMIT
    assert "limit exceeded" in capsys.readouterr().err


def test_exit_invariant(write, capsys):
    assert main(["analyze", write(NON_NORMAL)]) == EXIT_INVARIANT
    assert "regularity" in capsys.readouterr().err


def test_model_command(capsys):
    assert main(["model", bundled("s3_model.ini"), "--format", "json"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["checks"]["lemma_equivalence"] is True
    assert main(["model", bundled("dyadic.ini")]) == EXIT_CONFIG


def test_cosets_command(capsys):
    assert main(["cosets", bundled("klein.ini"), "--subgroup", '"a a", "b b"']) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "index 4; normal: yes"
    assert len(out) == 2 + 4
    assert out[2].split()[0] == "0" and out[2].split()[-1] == "e"
    assert main(["cosets", bundled("klein.ini"), "--subgroup", '"a", "b b"', "--index-only"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("index 2; normal: yes")
    assert main(["cosets", bundled("dyadic.ini"), "--subgroup", '"z"']) == EXIT_CONFIG


def test_subgroup_presentation_command(capsys):
    assert main(["subgroup-presentation", bundled("genus2_s3.ini"), "--subgroup", '"a"']) in (EXIT_OK, EXIT_LIMIT)
    capsys.readouterr()
    assert main(["subgroup-presentation", bundled("klein.ini"), "--subgroup", '"a a", "b"']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("index 2:")
    assert "simplified" in out


def test_report_failures_lists_false_checks():
    r = Report({}, checks={"regularity": False, "invariants": {"density": True, "order_bookkeeping": False}, "status": "complete"})
    assert r.failures() == ["regularity", "invariants.order_bookkeeping"]
    assert r.complete


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit(Report({}), "yaml")


@settings(max_examples=15)
@given(st.lists(st.sampled_from([2, 3, 4]), min_size=1, max_size=3), st.integers(0, 1000))
def test_cyclic_reports_are_deterministic(mults, seed):
    text = "[group]\ngenerators = a\n[tower]\nbuilder = cyclic\nmultipliers = " + ", ".join(map(str, mults))
    cfg = parse_config(text).with_overrides(seed=seed)
    a, b = to_json(run(cfg)), to_json(run(cfg))
    assert a == b
    d = json.loads(a)
    assert [lv["index_step"] for lv in d["levels"][1:]] == mults
