import json

import pytest

from lcverify.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_all_passes(capsys):
    code, out, _ = run(["verify-all", "--depth", "1"], capsys)
    assert code == 0
    assert "0 failed" in out


def test_bad_alphas_config_error(capsys):
    code, _, err = run(["--alphas", "0,0,1,2", "verify-all"], capsys)
    assert code == 2
    assert "alphas not distinct" in err


def test_depth_zero_skips_towers(capsys):
    code, out, _ = run(["verify-all", "--depth", "0"], capsys)
    assert code == 0
    assert "SKIP" in out


def test_json_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _, _ = run(["verify-all", "--depth", "1", "--format", "json",
                          "--out", str(p)], capsys)
        assert code == 0
    blobs = []
    for p in paths:
        data = json.loads(p.read_text())
        data.pop("timings")
        blobs.append(json.dumps(data, sort_keys=True))
    assert blobs[0] == blobs[1]


def test_json_schema(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(["verify-all", "--depth", "1", "--format", "json",
                      "--out", str(out)], capsys)
    assert code == 0
    data = json.loads(out.read_text())
    assert set(data) == {"checks", "timings"}
    for chk in data["checks"]:
        assert {"check", "status", "degrees", "witness", "certificate",
                "stats", "detail"} <= set(chk)
        for d in chk["degrees"]:
            assert isinstance(d, str)  # rationals travel as "p/q" strings


def test_tower_command(capsys):
    code, out, _ = run(["tower", "ex2", "--depth", "2"], capsys)
    assert code == 0
    assert "eps = 1/3" in out and "eps = 1/9" in out


def test_tower_budget_exhaustion(capsys):
    code, out, _ = run(["--budget", "50", "tower", "ex1", "--depth", "3"], capsys)
    assert code == 3
    assert "budget exceeded" in out


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("LCVERIFY_BUDGET", "50")
    code, out, _ = run(["tower", "ex1", "--depth", "3"], capsys)
    assert code == 3


def test_cohomology_command(capsys):
    code, out, _ = run(["cohomology", "--ring", "ex1R", "--window=-2..2",
                        "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["tables"]["h2_kunneth"] == {"-2": 0, "-1": 0, "0": 1,
                                            "1": 0, "2": 0}


def test_cohomology_unknown_ring(capsys):
    code, _, err = run(["cohomology", "--ring", "nope", "--window", "0..1"],
                       capsys)
    assert code == 2
    assert "unknown ring" in err


def test_cohomology_bad_window(capsys):
    code, _, err = run(["cohomology", "--ring", "B", "--window", "3..1"],
                       capsys)
    assert code == 2


def test_member_command(tmp_path, capsys):
    from lcverify.verifiers import load_fixture
    from lcverify.presentations import dump_presentation
    p = tmp_path / "r.pres"
    p.write_text(dump_presentation(load_fixture("ex1R")))
    code, out, _ = run(["member", "--presentation", str(p),
                        "--element", "e1", "--ideal", "x,y"], capsys)
    assert code == 0
    assert "OUT" in out
    code, out, _ = run(["member", "--presentation", str(p),
                        "--element", "x*y - z*w", "--ideal", ""], capsys)
    assert code == 0
    assert "IN" in out
