"""Command-line surface: outputs, exit codes, JSON schema, determinism."""

import io
import json
import re

from delpezzo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


TOP_KEYS = [
    "degree", "fibers", "sing", "rho", "isotrivial", "j",
    "coreg1", "coreg2", "coreg", "toric_model", "extremal", "labels", "errors",
]


def test_classify_text_report(capsys):
    code, out, err = run(capsys, "classify", "w^2 + z^3 + x^3*y^3")
    assert code == 0
    assert "fibers: 2I0*" in out
    assert "sing: 2D4" in out
    assert "rho: 1" in out
    assert "isotrivial: yes (j = 0)" in out
    assert "coreg1: 1" in out
    assert "coreg: 0" in out
    assert "toric model: no" in out


def test_classify_json_schema(capsys):
    code, out, err = run(capsys, "classify", "--json", "w^2 + z^3 + x^5*y")
    assert code == 0
    payload = json.loads(out)
    assert [k for k in payload if k != "moduli_dim"] == TOP_KEYS
    assert payload["degree"] == 1
    assert payload["errors"] == []
    for entry in payload["fibers"]:
        assert set(entry) <= {"type", "n", "count", "place_poly",
                              "place_degree", "v4", "v6", "vD"}
        assert {"type", "count", "place_poly", "place_degree",
                "v4", "v6", "vD"} <= set(entry)
    assert payload["j"] == {"kind": "constant", "value": "0"}
    assert payload["sing"] == [{"family": "E", "index": 8, "count": 1}]
    # exactness: no floating point numbers anywhere
    assert not re.search(r"\d\.\d", out)


def test_classify_invalid_surface_exit_2(capsys):
    code, out, err = run(capsys, "classify", "--json", "w^2 + z^3 + x^6")
    assert code == 2
    payload = json.loads(out)
    assert payload["errors"][0]["code"] == "non-minimal"
    assert "not du Val" in payload["errors"][0]["message"]
    assert payload["errors"][0]["stage"] == "validate"
    code, out, _ = run(capsys, "classify", "--json", "--f4", "q", "--f6", "0")
    assert code == 1
    assert json.loads(out)["errors"][0]["stage"] == "parse"


def test_classify_each_missing_term_code(capsys):
    code, _, err = run(capsys, "classify", "z^3 + x^6")
    assert code == 2 and "w^2" in err
    code, _, err = run(capsys, "classify", "w^2 + x^6")
    assert code == 2 and "z^3" in err
    code, _, err = run(capsys, "classify", "w^2 = z^3")
    assert code == 2 and "discriminant" in err


def test_classify_parse_error_exit_1(capsys):
    code, out, err = run(capsys, "classify", "w^2 + q^6")
    assert code == 1
    assert "unknown variable" in err


def test_classify_multiple_inputs_mixed_exit(capsys):
    code, out, err = run(
        capsys, "classify", "w^2 + z^3 + x^5*y", "w^2 + z^3 + x^6"
    )
    assert code == 2
    assert "fibers: II* + II" in out


def test_classify_pair_entry_path_matches_equation(capsys):
    _, direct, _ = run(capsys, "classify", "--json", "--f4", "x^4",
                       "--f6", "x^5*y")
    _, via_eq, _ = run(capsys, "classify", "--json",
                       "w^2 - z^3 - x^4*z - x^5*y")
    assert direct == via_eq


def test_classify_pair_requires_both(capsys):
    code, out, err = run(capsys, "classify", "--f4", "x^4")
    assert code == 1
    assert "together" in err


def test_classify_degree_rule(capsys):
    code, out, err = run(capsys, "classify", "--degree", "5")
    assert code == 0
    assert "degree: 5" in out and "coreg: 0" in out and "toric model: yes" in out
    code, out, err = run(capsys, "classify", "--degree", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 5 and payload["toric_model"] is True
    code, _, err = run(capsys, "classify", "--degree", "1")
    assert code == 1 and "equation" in err
    code, _, err = run(capsys, "classify", "--degree", "11")
    assert code == 1


def test_classify_from_file_and_parallel(tmp_path, capsys):
    batch = tmp_path / "batch.txt"
    batch.write_text(
        "w^2 + z^3 + x^5*y\nw^2 + z^3 + x^4*y^2\nw^2 + z^3 + x^3*y^3\n"
    )
    code, seq_out, _ = run(capsys, "classify", "--json", "--file", str(batch))
    assert code == 0
    code, par_out, _ = run(
        capsys, "classify", "--json", "--parallel", "--file", str(batch)
    )
    assert code == 0
    assert seq_out == par_out
    assert len(seq_out.strip().splitlines()) == 3


def test_classify_stdin(monkeypatch, capsys):
    stream = io.StringIO("w^2 + z^3 + x^5*y\n")
    stream.isatty = lambda: False
    monkeypatch.setattr("sys.stdin", stream)
    code, out, _ = run(capsys, "classify")
    assert code == 0
    assert "II* + II" in out


def test_classify_no_input(monkeypatch, capsys):
    stream = io.StringIO("")
    stream.isatty = lambda: True
    monkeypatch.setattr("sys.stdin", stream)
    code, out, err = run(capsys, "classify")
    assert code == 1
    assert "nothing to classify" in err


def test_byte_determinism(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "classify", "--json",
                        "w^2 + z^3 - 3*(x^2-y^2)*y^2*z + 2*(x^2-y^2)*x*y^3")
        outs.add(out)
    assert len(outs) == 1


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--j", "0")
    assert code == 0 and len(out.strip().splitlines()) == 10
    code, out, _ = run(capsys, "enumerate", "--j", "1728")
    assert code == 0 and len(out.strip().splitlines()) == 4
    code, out, _ = run(capsys, "enumerate", "--j", "generic")
    assert code == 0 and out.strip().splitlines() == ["2I0*  [witness: j0/2D4]"]
    code, out, _ = run(capsys, "enumerate", "--instar")
    assert code == 0 and len(out.strip().splitlines()) == 5
    code, out, _ = run(capsys, "enumerate", "--instar", "--rank-cap", "10")
    assert len(out.strip().splitlines()) == 6


def test_enumerate_json_annotations(capsys):
    code, out, _ = run(capsys, "enumerate", "--instar", "--json")
    payload = json.loads(out)
    rows = {row["display"]: row for row in payload["configurations"]}
    assert rows["I2* + IV"]["excluded"] is True
    assert rows["I2* + IV"]["witness"] is None
    assert rows["I1* + III + II"]["excluded"] is False
    assert rows["I1* + III + II"]["witness"] == "no-toric-model/D5+A1"
    code, out, _ = run(capsys, "enumerate", "--j", "1728", "--json")
    payload = json.loads(out)
    assert len(payload["configurations"]) == 4
    for row in payload["configurations"]:
        assert row["chi"] == 12
        assert row["witness"] is not None


def test_enumerate_requires_mode(capsys):
    code, _, _ = run(capsys, "enumerate")
    assert code == 1


def test_catalog_verify_ok(capsys):
    code, out, _ = run(capsys, "catalog", "--verify")
    assert code == 0
    assert "[ok]" in out and "[FAIL]" not in out


def test_catalog_json(capsys):
    code, out, _ = run(capsys, "catalog", "--json", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert len(payload["witnesses"]) >= 20
    first = payload["witnesses"][0]
    assert {"name", "equation", "fibers", "sing", "rho", "isotrivial",
            "j", "coreg1", "coreg2", "coreg", "toric_model"} <= set(first)


def test_catalog_verify_failure_exit_3(monkeypatch, capsys):
    import delpezzo.cli as cli_module
    from delpezzo.catalog import Witness, witness_catalog

    witnesses = list(witness_catalog())
    witnesses[0] = Witness(**{**witnesses[0].__dict__, "rho": 7})
    monkeypatch.setattr(cli_module, "witness_catalog",
                        lambda: tuple(witnesses))
    code, out, err = run(capsys, "catalog", "--verify")
    assert code == 3
    assert "[FAIL]" in out
    assert "rho" in err


def test_tables_text_and_json(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert "Isotrivial fibrations with j = 0" in out
    assert "Isotrivial fibrations with j = 1728" in out
    code, out, _ = run(capsys, "tables", "--json")
    payload = json.loads(out)
    assert len(payload["j0"]["rows"]) == 10
    assert len(payload["j1728"]["rows"]) == 4


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 1
    capsys.readouterr()
