import io
import json

import pytest

from monideal.cli import main
from monideal.families import herzog_example, star_triangle
from monideal.formats import (
    FormatError,
    format_graph,
    format_ideal,
    ideal_from_json,
    ideal_to_json,
    parse_graph_file,
    parse_ideal_file,
)

HERZOG_TEXT = """vars x1,x2,x3,x4
# generators
x2^3
x2^2*x3
x2*x3^2
x3^3
x1^2
x1*x2
x1*x3
x1*x4
"""


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_parse_ideal_text():
    assert parse_ideal_file(HERZOG_TEXT) == herzog_example()
    assert str(parse_ideal_file("vars x\nx^2\n")) == "(x^2)"
    assert parse_ideal_file("vars x,y\n").is_zero()


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("x^2\n", 1, 1),
        ("vars \n", 1, 6),
        ("vars x,y\n\nx*w\n", 3, 3),
        ("vars x\nx^a\n", 2, 3),
        ('{"vars": ["x"],\n "gens": [[1]\n', 3, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(FormatError) as err:
        parse_ideal_file(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_json_round_trip():
    I = herzog_example()
    assert ideal_from_json(json.dumps(ideal_to_json(I))) == I
    assert parse_ideal_file(format_ideal(I)) == I
    with pytest.raises(FormatError):
        ideal_from_json({"gens": []})


def test_graph_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(format_graph(star_triangle(2)))
    assert parse_graph_file(str(path)) == star_triangle(2)
    with pytest.raises(FormatError):
        parse_graph_file("vertices 3\n1\n")
    with pytest.raises(FormatError):
        parse_graph_file("3 vertices\n")


def test_cli_invariants_herzog():
    code, out = run("invariants", "--family", "herzog", "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["reg"], data["dim"], data["depth"], data["h_coeffs"], data["is_CM"]) == (2, 1, 0, [1, 3, 2], False)


def test_cli_invariants_text():
    code, out = run("invariants", "--family", "g2:3")
    assert code == 0 and "h-vector         [1, 5, 4, 5, 1]" in out
    code, out = run("invariants", "--family", "thm:5,2", "--json")
    data = json.loads(out)
    assert (data["reg"], data["deg_h"]) == (5, 2)


def test_cli_ideal_round_trip(tmp_path):
    code, out = run("ideal", "--family", "herzog", "--json")
    path = tmp_path / "h.json"
    path.write_text(out)
    assert parse_ideal_file(str(path)) == herzog_example()
    code, again = run("ideal", "--ideal", str(path), "--json")
    assert code == 0 and again == out


def test_cli_sources(tmp_path):
    path = tmp_path / "tri.txt"
    path.write_text("vertices 3\n1 2\n2 3\n1 3\n")
    code, out = run("betti", "--graph", str(path), "--edge-ideal", "--json")
    assert code == 0
    assert json.loads(out)["entries"] == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]
    code, out = run("hilbert", "--inline", "vars x,y;x^2;y^2", "--json", "--dmax", "3")
    assert json.loads(out) == {"numerator": [1, 2, 1], "denom_power": 0, "values": [1, 2, 1, 0]}


def test_engines_agree():
    for spec in ["herzog", "star:3", "Irs:2,4", "K:4"]:
        _, a = run("betti", "--family", spec, "--json")
        _, b = run("betti", "--family", spec, "--json", "--engine", "taylor")
        assert a == b


def test_cli_output_is_deterministic():
    assert run("invariants", "--family", "g2:2") == run("invariants", "--family", "g2:2")


def test_cli_exit_codes(tmp_path):
    assert run("invariants", "--inline", "vars x;1")[0] == 2
    assert run("invariants", "--family", "bogus")[0] == 2
    assert run("invariants", "--ideal", str(tmp_path / "missing"))[0] == 2
    assert run("betti", "--graph", "g.txt")[0] == 2
    assert run("verify", "thm", "--r", "1..20")[0] == 2
    assert run("verify", "propA", "--r", "3..1")[0] == 2
    assert run("invariants", "--family", "herzog", "--char", "4")[0] == 2
    assert run("nonsense")[0] == 2


def test_cli_verify_pass():
    code, out = run("verify", "propI", "--n", "2..3")
    assert code == 0 and out.strip().endswith("6/6 passed")
    code, out = run("verify", "herzog", "--json")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_cli_verify_failure_exit(monkeypatch):
    from monideal import cli
    from monideal.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda *a: [Check("bogus", "", 1, 2)])
    code, out = run("verify", "herzog")
    assert code == 1 and out.startswith("FAIL")
