"""JSON round trips, schema rejection paths, and the CLI exit-code contract."""

import json
from importlib import resources

import pytest

from modcheck.cli import FIEP_WITNESS_LIMIT, main
from modcheck.corpus import roundtrip_module
from modcheck.errors import SchemaError
from modcheck.io import (
    load_module,
    module_from_json,
    module_to_json,
    save_module,
    validate_module_json,
)


def fixture_path(name: str) -> str:
    return str(resources.files("modcheck.data").joinpath(f"fixtures/{name}.json"))


# -- io round trips ------------------------------------------------------------


def test_every_fixture_round_trips_exactly(fixtures):
    for fx in fixtures:
        M = roundtrip_module(fx)
        again = module_from_json(module_to_json(M, name=fx.name))
        assert again.dim == M.dim
        assert again.actions == M.actions
        assert again.algebra.constants == M.algebra.constants
        assert again.algebra.unity == M.algebra.unity


def test_save_and_load_round_trip(tmp_path, fixtures_by_name):
    M = roundtrip_module(fixtures_by_name["tri4_f3"])
    path = tmp_path / "m.json"
    save_module(M, str(path), name="tri4_f3")
    loaded, doc = load_module(str(path))
    assert loaded.actions == M.actions and doc["name"] == "tri4_f3"


def test_schema_rejections_carry_paths():
    with pytest.raises(SchemaError) as e:
        validate_module_json({"schema_version": 1})
    assert "required" in str(e.value)

    good = json.loads(
        resources.files("modcheck.data").joinpath("fixtures/chain_f2_k2.json").read_text()
    )
    bad = json.loads(json.dumps(good))
    bad["field"]["p"] = 0
    with pytest.raises(SchemaError) as e:
        module_from_json(bad)
    assert e.value.path and "field" in e.value.path

    bad = json.loads(json.dumps(good))
    bad["module"]["actions"] = bad["module"]["actions"][:-1]
    with pytest.raises(SchemaError) as e:
        module_from_json(bad)
    assert e.value.path == ["module", "actions"]


def test_load_module_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(SchemaError) as e:
        load_module(str(path))
    assert "not valid JSON" in str(e.value)


# -- CLI ------------------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_report_json_and_text(capsys):
    code, out, _ = run_cli(capsys, "report", fixture_path("tri4_f2"))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"]["hollow"] is True and doc["verdicts"]["uniserial"] is False

    code, out, _ = run_cli(capsys, "report", fixture_path("tri4_f2"), "--format", "text")
    assert code == 0 and "hollow" in out


def test_cli_lattice_json_and_dot(capsys):
    code, out, _ = run_cli(capsys, "lattice", fixture_path("tri4_f2"))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["nodes"]) == 6 and len(doc["edges"]) == 6

    code, out, _ = run_cli(capsys, "lattice", fixture_path("mat2_simple_f2"), "--format", "dot")
    assert code == 0 and out.startswith("digraph") and "n0 -> n1" in out


def test_cli_cap_exceeded_exits_3(capsys):
    code, _, err = run_cli(capsys, "lattice", fixture_path("tri4_f2"), "--cap-dim", "2")
    assert code == 3 and "error" in err
    code, _, err = run_cli(
        capsys, "homs", fixture_path("chain_f2_k2"), fixture_path("chain_f2_k2"),
        "--cap-hom", "1",
    )
    assert code == 3


def test_cli_usage_errors_exit_2(capsys, tmp_path):
    code, _, err = run_cli(capsys, "report", str(tmp_path / "missing.json"))
    assert code == 2

    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1}')
    code, _, err = run_cli(capsys, "report", str(bad))
    assert code == 2 and "error" in err

    assert main(["no-such-command"]) == 2
    assert main([]) == 2


def test_cli_fiep_reports_and_truncates(capsys):
    code, out, _ = run_cli(capsys, "fiep", fixture_path("chain_f2_k2_sq"))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] is True
    assert doc["witnesses_truncated_to"] == FIEP_WITNESS_LIMIT
    assert len(doc["witnesses"]) == FIEP_WITNESS_LIMIT
    assert doc["pairs_checked"] > FIEP_WITNESS_LIMIT

    code, out, _ = run_cli(capsys, "fiep", fixture_path("mat2_simple_f2_sq"))
    doc = json.loads(out)
    assert code == 0 and "witnesses_truncated_to" not in doc


def test_cli_summands(capsys):
    code, out, _ = run_cli(capsys, "summands", fixture_path("mat2_simple_f2"))
    assert code == 0
    doc = json.loads(out)
    dims = sorted(s["dim"] for s in doc["summands"])
    assert dims == [0, 2]  # simple module: only the trivial summands


def test_cli_homs(capsys):
    code, out, _ = run_cli(
        capsys, "homs", fixture_path("chain_f2_k2"), fixture_path("chain_f2_k3")
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["source_dim"] == 2 and doc["target_dim"] == 3
    assert doc["hom_dim"] == len(doc["basis"]) == 2


def test_cli_exact_cases_contract(capsys):
    code, out, _ = run_cli(capsys, "exact")
    assert code == 0
    doc = json.loads(out)
    assert doc["example"] == "localization-counterexample"
    assert doc["verdict"] == "pass" and doc["unresolved"] == []
    cases = [c.get("case") for c in doc["certificates"]]
    # 3 direct + 3 partial with their graph companions + 2 witness certs + 1 report
    assert cases.count("direct") == 3
    assert cases.count("partial") == 3 and cases.count("graph") == 3
    assert cases.count("nonlocal-witness") == 2
    assert any(c.get("label") == "CITED-IMPLICATION" for c in doc["certificates"])


def test_cli_exact_single_x_and_zext(capsys):
    code, out, _ = run_cli(capsys, "exact", "--x", "4/3")
    assert code == 0
    doc = json.loads(out)
    assert [c.get("case") for c in doc["certificates"][:2]] == ["partial", "graph"]

    code, out, _ = run_cli(capsys, "exact", "zext", "--a", "2", "--b", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["neither"] is True

    assert main(["exact", "zext"]) == 2  # --a/--b are required here
    capsys.readouterr()
    assert main(["exact", "zext", "--a", "0", "--b", "3"]) == 2
    capsys.readouterr()


def test_cli_verify_only_anchor(capsys):
    code, out, err = run_cli(capsys, "verify", "--only", "integer-routes")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["check_id"] for c in doc["checks"]] == ["integer-routes/a2-b3"]
    assert "PASS" in err


def test_cli_verify_cap_failure_exits_1(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--only", "running-example", "--cap-dim", "2"
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    assert any(c.get("error", "").startswith("TooLarge") for c in doc["checks"])


def test_cli_config_file_defaults_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 99, "only": ["integer-routes"]}))
    code, out, _ = run_cli(capsys, "verify", "--config", str(cfg))
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["seed"] == 99
    assert [c["check_id"] for c in doc["checks"]] == ["integer-routes/a2-b3"]

    code, out, _ = run_cli(capsys, "verify", "--config", str(cfg), "--seed", "5")
    doc = json.loads(out)
    assert doc["config"]["seed"] == 5  # explicit flag beats the config file

    cfg.write_text(json.dumps({"unknown_knob": 1}))
    assert main(["verify", "--config", str(cfg)]) == 2
    capsys.readouterr()

    cfg.write_text("[1, 2]")
    assert main(["verify", "--config", str(cfg)]) == 2
    capsys.readouterr()


def test_cli_out_writes_a_copy(capsys, tmp_path):
    out_path = tmp_path / "lat.json"
    code, out, _ = run_cli(
        capsys, "lattice", fixture_path("chain_f2_k2"), "--out", str(out_path)
    )
    assert code == 0
    assert json.loads(out_path.read_text()) == json.loads(out)
