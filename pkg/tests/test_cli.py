import json

from localp12.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_potential_two_term_table(capsys):
    code, out, _ = _run(capsys, "potential", "--qmax", "1", "--zorder", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["vars"] == ["z0", "z1", "z2", "q"]
    assert doc["caps"] == [1, 1, 1, 1]
    exps = [tuple(t["exp"]) for t in doc["terms"]]
    assert exps == [(0, 0, 1, 1), (0, 1, 1, 1)]
    # both coefficients are t1 + t2 over 1
    for t in doc["terms"]:
        assert t["coeff"]["num"] == [
            [1, 0, ["1", "0", "0", "0"]],
            [0, 1, ["1", "0", "0", "0"]],
        ]
        assert t["coeff"]["den"] == [[0, 0, ["1", "0", "0", "0"]]]


def test_potential_order_zero_is_empty(capsys):
    code, out, _ = _run(capsys, "potential", "--qmax", "0", "--zorder", "0")
    assert code == 0
    assert json.loads(out)["terms"] == []


def test_potential_extended_adds_u_column(capsys):
    code, out, _ = _run(
        capsys, "potential", "--qmax", "1", "--zorder", "1", "--uorder", "1",
        "--extended",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["vars"] == ["z0", "z1", "z2", "q", "u"]
    exps = {tuple(t["exp"]) for t in doc["terms"]}
    # the z2 insertion may now land on u instead
    assert (0, 0, 0, 1, 1) in exps
    assert (0, 0, 1, 1, 0) in exps


def test_potential_csv_golden(capsys):
    code, out, _ = _run(
        capsys, "potential", "--qmax", "1", "--zorder", "1", "--format", "csv"
    )
    assert code == 0
    assert out == (
        "z0,z1,z2,q,num,den\n"
        "0,0,1,1,t1 + t2,1\n"
        "0,1,1,1,t1 + t2,1\n"
    )


def test_csv_is_potential_only(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "degree0", "--format", "csv")
    assert code == 2
    assert "csv" in err


def test_verify_single_suite_report(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "degree0")
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "degree0"
    assert len(doc["cases"]) == 6
    assert all(c["pass"] for c in doc["cases"])
    assert all(c["first_mismatch"] is None for c in doc["cases"])


def test_verify_all_runs_every_suite(capsys):
    code, out, _ = _run(
        capsys, "verify", "--suite", "all",
        "--qmax", "3", "--zorder", "6", "--uorder", "6",
    )
    assert code == 0
    docs = json.loads(out)
    assert [d["suite"] for d in docs] == [
        "degree0", "resummation", "assembly", "bracket", "residual", "corollary",
    ]
    assert all(c["pass"] for d in docs for c in d["cases"])


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "nonsense")
    assert code == 2
    assert "nonsense" in err


def test_invariants_degree_zero(capsys):
    code, out, _ = _run(capsys, "invariants", "--d", "0", "--classes", "1,H,H")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 0
    assert doc["classes"] == ["1", "H", "H"]
    assert doc["pretty"] == "-2/3"


def test_invariants_positive_degree(capsys):
    code, out, _ = _run(capsys, "invariants", "--d", "1", "--n2", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "d": 1,
        "n1": 0,
        "n2": 1,
        "pretty": "t1 + t2",
        "value": {
            "num": [[1, 0, ["1", "0", "0", "0"]], [0, 1, ["1", "0", "0", "0"]]],
            "den": [[0, 0, ["1", "0", "0", "0"]]],
        },
    }


def test_invariants_parity_rejected(capsys):
    code, _, err = _run(capsys, "invariants", "--d", "1", "--n2", "0")
    assert code == 2
    assert "parity" in err


def test_invariants_classes_need_degree_zero(capsys):
    code, _, _ = _run(capsys, "invariants", "--d", "2", "--classes", "1,1,1")
    assert code == 2


def test_eval_classical_point(capsys):
    code, out, _ = _run(
        capsys, "eval", "--at", "t1=1,t2=1,z0=1", "--qmax", "0", "--zorder", "3"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == {"re": "0.0555555555555556", "im": "0"}
    # unset series variables default to zero
    assert doc["at"]["z1"] == "0"
    assert doc["at"]["q"] == "0"
    assert "uorder" not in doc


def test_eval_extended_records_uorder(capsys):
    code, out, _ = _run(
        capsys, "eval", "--at", "t1=1,t2=2", "--extended",
        "--qmax", "1", "--zorder", "2", "--uorder", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["extended"] is True
    assert doc["uorder"] == 2


def test_eval_pole_exits_one(capsys):
    code, _, err = _run(capsys, "eval", "--at", "t1=0,t2=1")
    assert code == 1
    assert "pole" in err


def test_eval_requires_torus_weights(capsys):
    code, _, _ = _run(capsys, "eval", "--at", "t2=1")
    assert code == 2


def test_eval_rejects_unknown_variable(capsys):
    code, _, _ = _run(capsys, "eval", "--at", "t1=1,t2=1,w=3")
    assert code == 2


def test_bad_at_spec_is_usage_error(capsys):
    code, _, _ = _run(capsys, "eval", "--at", "t1")
    assert code == 2


def test_config_file_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"qmax": 1, "zorder": 1}))
    code, from_cfg, _ = _run(capsys, "potential", "--config", str(cfg))
    assert code == 0
    code, from_flags, _ = _run(capsys, "potential", "--qmax", "1", "--zorder", "1")
    assert code == 0
    assert from_cfg == from_flags


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"qmax": 1, "zorder": 1}))
    code, out, _ = _run(capsys, "potential", "--config", str(cfg), "--qmax", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["caps"][3] == 0
    assert doc["terms"] == []


def test_unknown_config_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"qqmax": 1}))
    code, _, err = _run(capsys, "potential", "--config", str(cfg))
    assert code == 2
    assert "qqmax" in err


def test_out_writes_the_same_bytes(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, _, _ = _run(
        capsys, "potential", "--qmax", "1", "--zorder", "1", "--out", str(target)
    )
    assert code == 0
    code, out, _ = _run(capsys, "potential", "--qmax", "1", "--zorder", "1")
    assert code == 0
    assert target.read_text() == out


def test_repeat_runs_are_byte_identical(capsys):
    first = _run(capsys, "verify", "--suite", "corollary")
    second = _run(capsys, "verify", "--suite", "corollary")
    assert first == second
