import json

import pytest

from torusdual import cli


def run(argv):
    return cli.main(argv)


def test_dual_command(tmp_path, capsys):
    out = tmp_path / "dual.json"
    assert run(["dual", "--type", "A", "--rank", "2", "--form", "sc",
                "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "A2[sc]" in text and "A2[adjoint]" in text
    payload = json.loads(out.read_text())
    assert set(payload) == {"primal", "dual"}
    assert payload["primal"]["type"] == "A"
    assert payload["dual"]["form"] == "adjoint"


def test_dual_self_dual_e8(capsys):
    assert run(["dual", "--type", "E", "--rank", "8"]) == 0
    text = capsys.readouterr().out
    assert "E8" in text


def test_invalid_type_exits_2():
    with pytest.raises(SystemExit) as err:
        run(["dual", "--type", "H", "--rank", "2"])
    assert err.value.code == 2


def test_invalid_rank_exits_2(capsys):
    assert run(["dual", "--type", "G", "--rank", "5"]) == 2


def test_table_check_passes(tmp_path, capsys):
    out = tmp_path / "table.json"
    assert run(["table-check", "--json", str(out)]) == 0
    assert "9/9 rows pass" in capsys.readouterr().out
    payload = json.loads(out.read_text())
    assert payload["pass"] is True
    assert [r["f_computed"] for r in payload["rows"]] == [3, 2, 2, 4, 3, 2, 1, 1, 1]


def test_table_check_corrupted_row():
    rows = list(cli.REFERENCE_TABLE)
    bad = cli.ReferenceTableRow("A", 2, "sc", "SU3", "PSU3", "A", "adjoint", 4)
    rows[0] = bad
    results = cli.run_table_check(rows)
    assert not results[0]["pass"]
    assert all(r["pass"] for r in results[1:])
    assert results[0]["name"] == "SU3"


def test_table_check_corrupted_row_exits_1(monkeypatch, capsys):
    rows = list(cli.REFERENCE_TABLE)
    rows[3] = cli.ReferenceTableRow("D", 4, cli.SO_FORM, "SO8", "SO8", "D", "quotient", 5)
    monkeypatch.setattr(cli, "REFERENCE_TABLE", tuple(rows))
    assert run(["table-check"]) == 1
    out = capsys.readouterr().out
    assert "failing rows: SO8" in out
    assert "8/9 rows pass" in out


def test_verify_duality_small(tmp_path, capsys):
    out = tmp_path / "dual.json"
    assert run(["verify-duality", "--max-rank", "2", "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "verdict=equal" in text
    payload = json.loads(out.read_text())
    assert payload["pass"] is True
    assert all(r["verdict"] == "equal" for r in payload["reports"])


def test_verify_duality_rank_cap(capsys):
    assert run(["verify-duality", "--max-rank", "7"]) == 2
    assert "--allow-large" in capsys.readouterr().err


def test_affine_compare_small(capsys):
    assert run(["affine-compare", "--max-rank", "2"]) == 0
    text = capsys.readouterr().out
    assert "dual_equal=True" in text
    assert "n/a (type excluded)" in text  # the B2/C2 lines


def test_ktheory_command(tmp_path, capsys):
    out = tmp_path / "k.json"
    assert run(["ktheory", "--type", "A", "--rank", "2", "--form", "sc",
                "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["k0"] == 5 and payload["k1"] == 1
    assert payload["weyl_order"] == 6 and payload["class_count"] == 3


def test_fixed_points_command(tmp_path, capsys):
    out = tmp_path / "fp.json"
    assert run(["fixed-points", "--type", "A", "--rank", "2", "--form", "sc",
                "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["full_fixed_points"]) == 3
    assert run(["fixed-points", "--type", "A", "--rank", "2", "--form", "adjoint"]) == 0


def test_oscillator_command_small(tmp_path, capsys):
    out = tmp_path / "osc.json"
    assert run(["oscillator", "--grid", "400", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["pass"] is True
    assert payload["kernel_dim"] == 1
    assert payload["kernel_parity"] == "even"


def test_oscillator_bad_grid(capsys):
    assert run(["oscillator", "--grid", "10"]) == 2


def test_clifford_check(tmp_path, capsys):
    out = tmp_path / "cl.json"
    assert run(["clifford-check", "--max-dim", "2", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["pass"] is True and payload["failures"] == []


def test_poincare_check(tmp_path, capsys):
    out = tmp_path / "pc.json"
    assert run(["poincare-check", "--samples", "25", "--seed", "11",
                "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["pass"] is True
    assert payload["max_deviation"] <= 1e-10


def test_poincare_check_deterministic(capsys):
    assert run(["poincare-check", "--samples", "10", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert run(["poincare-check", "--samples", "10", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first


def test_so_form_flag(capsys):
    assert run(["dual", "--type", "D", "--rank", "4", "--form", "so"]) == 0
    text = capsys.readouterr().out
    assert "Z/2 -> Z/2" in text
