import json

import pytest

from ncgraded.cli import (
    EXAMPLE_WORKSPACE,
    main,
    parse_rational,
    parse_workspace,
    serialize_workspace,
)
from ncgraded.errors import NonHomogeneous, ParseError, UnknownReference


def test_example_workspace_parses():
    ws = parse_workspace(EXAMPLE_WORKSPACE)
    assert ws.field.p == 13
    assert sorted(ws.algebras) == ["A", "S"]
    assert sorted(ws.modules) == ["AF", "X", "X1", "X2", "X3", "X4"]


def test_workspace_roundtrip():
    ws = parse_workspace(EXAMPLE_WORKSPACE)
    ws2 = parse_workspace(serialize_workspace(ws))
    assert sorted(ws2.algebras) == sorted(ws.algebras)
    assert sorted(ws2.modules) == sorted(ws.modules)
    for n, m in ws.modules.items():
        for d in range(0, 5):
            assert ws2.modules[n].dim(d) == m.dim(d)


def test_nonhomogeneous_relation_diagnosed():
    text = '[field]\nname = "GF(13)"\n[algebra T]\ngenerators = "x, y, z"\nrelations = "x*y + y*x - z^3"\n'
    with pytest.raises(NonHomogeneous):
        parse_workspace(text)


def test_dangling_base_reference():
    text = '[field]\nname = "GF(13)"\n[algebra A]\nbase = "T"\n'
    with pytest.raises(UnknownReference):
        parse_workspace(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_workspace("junk line without section")
    assert exc.value.line == 1


def test_rational_parser():
    assert parse_rational("(1+t)/(1-t)^2") == ([1, 1], [1, -2, 1])
    assert parse_rational("9*(1+t)/(1-t)^2") == ([9, 9], [1, -2, 1])
    assert parse_rational("1/(1-t)^3") == ([1], [1, -3, 3, -1])
    with pytest.raises(ParseError):
        parse_rational("t +")


def test_hilbert_command_exit_codes(tmp_path, capsys):
    wsfile = tmp_path / "w.nws"
    wsfile.write_text(EXAMPLE_WORKSPACE)
    code = main(["hilbert", "A", "-w", str(wsfile), "--max-deg", "6",
                 "--match", "(1+t)/(1-t)^2"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["verdict"] == "pass"
    code = main(["hilbert", "A", "-w", str(wsfile), "--max-deg", "6",
                 "--match", "1/(1-t)^3"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert out["verdict"] == "fail"


def test_points_command(tmp_path, capsys):
    wsfile = tmp_path / "w.nws"
    wsfile.write_text(EXAMPLE_WORKSPACE)
    code = main(["points", "A", "x*y + z^2; x^2 - y^2", "-w", str(wsfile),
                 "--max-deg", "4"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["count"] == 4


def test_unknown_module_is_an_error(tmp_path, capsys):
    wsfile = tmp_path / "w.nws"
    wsfile.write_text(EXAMPLE_WORKSPACE)
    code = main(["mcm", "NOPE", "-w", str(wsfile)])
    out = json.loads(capsys.readouterr().out)
    assert code == 3
    assert out["error"] == "UnknownReference"


def test_clifford_command(tmp_path, capsys):
    wsfile = tmp_path / "w.nws"
    wsfile.write_text(EXAMPLE_WORKSPACE)
    code = main(["clifford", "A", "--central", "x^2", "-w", str(wsfile)])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["dim"] == 4
    assert any(c["check"] == "split-semisimple" and c["verdict"] == "pass"
               for c in out["checks"])


def test_verify_example_wrong_prime_is_error(capsys):
    code = main(["verify-example", "--p", "7"])
    out = json.loads(capsys.readouterr().out)
    assert code == 3
    assert out["error"] == "NoSuchRoot"


def test_json_report_written(tmp_path, capsys):
    wsfile = tmp_path / "w.nws"
    wsfile.write_text(EXAMPLE_WORKSPACE)
    target = tmp_path / "out.json"
    main(["hilbert", "S", "-w", str(wsfile), "--max-deg", "4",
          "--json", str(target)])
    capsys.readouterr()
    blob = json.loads(target.read_text())
    assert blob["command"] == "hilbert"
    assert blob["coeffs"][:3] == [1, 3, 6]
