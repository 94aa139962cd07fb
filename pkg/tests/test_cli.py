import json

import pytest

from wreathsigma.cli import main

KNOWN_CERT = {
    "t": "z h z^-1",
    "table": {"h": "h", "h^-1": "h^-1", "z": "z t z^-1 t^-1 z", "z^-1": "z^-1 t z t^-1 z^-1"},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, code, summary",
    [
        (["sigma1", "--group", "zwrz", "--char", "eta1"], 0, "In"),
        (["sigma1", "--group", "zwrz", "--char", "theta1"], 3, "Out"),
        (["sigma1", "--group", "L", "--char", "theta"], 3, "Out"),
        (["sigma1", "--group", "zwrz", "--char", "[1, -1]"], 0, "In"),
        (["sigma2", "--group", "zwrz2", "--char", "top"], 0, "In"),
        (["validate", "--group", "L"], 0, "fg=true fp=false"),
        (["find-cert", "--group", "zwrz", "--char", "eta1"], 0, "found t = h"),
    ],
)
def test_summaries_and_exit_codes(capsys, argv, code, summary):
    got, out, _ = run(capsys, *argv)
    assert got == code
    assert out.strip() == summary


def test_sigma2_on_infinitely_presented_group_is_an_error(capsys):
    code, out, err = run(capsys, "sigma2", "--group", "zwrz", "--char", "theta1")
    assert code == 1 and out == ""
    assert "not finitely presented" in err


def test_json_is_deterministic(capsys):
    argv = ["sigma2", "--group", "zwrz2", "--char", "eta", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == "wreathsigma.report/1"
    assert doc["command"] == {"name": "sigma2", "group": "zwrz2", "char": "eta"}
    assert doc["result"]["status"] == "In" and doc["result"]["trace"]


def test_omega_and_reid(capsys):
    code, out, _ = run(capsys, "omega1", "--group", "zwrz", "--json")
    doc = json.loads(out)["result"]
    assert code == 0 and doc["cardinality"] == "two points"
    code, out, _ = run(capsys, "reid", "--group", "zwrz", "--json")
    cites = [c["citation"] for c in json.loads(out)["result"]["conclusions"]]
    assert code == 0 and any("crlr1" in c for c in cites) and any("crlr2" in c for c in cites)


def test_certify_inline_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "certify", "--group", "zwrz", "--char", "eta1", "--cert", json.dumps(KNOWN_CERT))
    assert (code, out.strip()) == (0, "valid")
    bad = dict(KNOWN_CERT, table={"z": "z"})
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "certify", "--group", "zwrz", "--char", "eta1", "--cert", str(path), "--json")
    doc = json.loads(out)["result"]
    assert code == 3 and doc["check"]["valid"] is False


def test_ball_evidence_and_sample(capsys):
    code, out, _ = run(capsys, "ball-evidence", "--group", "L", "--char", "theta", "--radius", "6", "--json")
    doc = json.loads(out)["result"]
    assert code == 3 and doc["kind"] == "DisconnectionWitness" and "not a proof" in doc["note"]
    code, out, _ = run(capsys, "sample", "--group", "zwrz", "--resolution", "2")
    assert code == 0 and "Out=2" in out


def test_workspace_file(capsys, tmp_path):
    ws = tmp_path / "mine.sigws"
    ws.write_text("group P = product(free(2), Z(1))\nchar c on P = [0, 0, 1]\n")
    code, out, _ = run(capsys, "sigma1", "-w", str(ws), "--group", "P", "--char", "c")
    assert (code, out.strip()) == (0, "In")


@pytest.mark.parametrize(
    "argv",
    [
        ["sigma1", "--group", "nosuch", "--char", "[1]"],
        ["sigma1", "--group", "zwrz", "--char", "eta"],
        ["sigma1", "--group", "zwrz", "--char", "[1,2,3]"],
        ["sigma1", "--group", "zwrz"],
        ["certify", "--group", "zwrz", "--char", "eta1", "--cert", "/no/such/file"],
    ],
)
def test_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")
