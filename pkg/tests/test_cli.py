import json
import subprocess
import sys

import pytest

from hopfspecies.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_park_default_prints_json_array(capsys):
    code, out, _ = run(capsys, "park", '[["a"],[],["b","c","d"],[],["e"],[],[]]')
    assert code == 0
    assert json.loads(out) == [["a"], ["b", "c", "d"], [], ["e"], []]


def test_park_trace_has_eight_rows(capsys):
    code, out, _ = run(capsys, "park", "--trace", '[["a"],[],["b","c","d"],[],["e"],[],[]]')
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[1] == "Φ = (a), ∅ ? ✗    Γ̇ = (∅,bcd,∅,e,∅,∅)"


def test_park_json_format(capsys):
    code, out, _ = run(capsys, "park", "--format", "json", '[[],["a"]]')
    payload = json.loads(out)
    assert payload["input"] == [[], ["a"]]
    assert payload["output"] == [["a"]]


def test_mobius_to_bottom(capsys):
    code, out, _ = run(capsys, "mobius", "--sigma", '[["a","d","c","b"]]', "--tau", "bottom")
    assert (code, out.strip()) == (0, "-6")


def test_mobius_full_ideal_json(capsys):
    code, out, _ = run(capsys, "mobius", "--format", "json", "--sigma", '[["a","b","c"]]')
    payload = json.loads(out)
    assert len(payload["output"]) == 5
    assert sorted(e["mobius"] for e in payload["output"]) == ["-1/1"] * 3 + ["1/1", "2/1"]
    assert len(payload["hasse"]) == 6


def test_dims_spot_value(capsys):
    code, out, _ = run(capsys, "dims", "--family", "sigma", "-r", "2", "-n", "3")
    assert code == 0
    assert "enumerated 5, predicted 5" in out


def test_dims_kbar(capsys):
    code, out, _ = run(capsys, "dims", "--monoid", "pf", "--fock", "Kbar", "-n", "5",
                       "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["output"]["enumerated"] == [42]


def test_mu_and_delta_terms(capsys):
    code, out, _ = run(capsys, "mu", "--monoid", "sigma", "--format", "json",
                       '[["a"]]', '[["b"]]')
    assert json.loads(out)["terms"] == [{"basis": [["a"], ["b"]], "coeff": "1/1"}]
    code, out, _ = run(capsys, "delta", "--monoid", "pf", '[["a","b"],[],["c"]]',
                       "--left", '["c"]')
    assert code == 0 and "⊗" in out


def test_antipode_text(capsys):
    code, out, _ = run(capsys, "antipode", "--monoid", "pi", '[["a","b"]]')
    assert code == 0
    assert out.strip() == "2·{{a},{b}} - {{a,b}}"


def test_port_and_infinity(capsys):
    x = '{"r":1,"large":[["a","b"],["c","d","e"]],"small":[]}'
    code, out, _ = run(capsys, "port", "--family", "sigma", "-r", "1", "-s", "3",
                       "--format", "json", x)
    assert json.loads(out)["output"] == {"r": 3, "large": [["c", "d", "e"]], "small": [["a", "b"]]}
    code, out, _ = run(capsys, "port", "--family", "sigma", "-r", "1", "--infinity",
                       "--format", "json", x)
    assert json.loads(out)["output"] == [["a", "b"], ["c", "d", "e"]]


def test_powersum(capsys):
    code, out, _ = run(capsys, "powersum", "--sigma", '[["a","d"],["b","c"]]', "--format", "json")
    coeffs = sorted(t["coeff"] for t in json.loads(out)["terms"])
    assert coeffs == ["-1/1", "-1/1", "1/1", "1/1"]


def test_fock_tables(capsys):
    code, out, _ = run(capsys, "fock", "--kind", "K", "--monoid", "sigma", "-n", "2",
                       "--format", "json")
    payload = json.loads(out)["output"]
    assert [len(payload["basis"][k]) for k in "012"] == [1, 1, 3]
    assert all(e["coeff"] == "1/1" for e in payload["product"])


@pytest.mark.parametrize("argv, fragment", [
    (["park", '[["a"],'], "char 7"),
    (["park", '[["a"],["a"]]'], "$[1]"),
    (["mu", "--monoid", "sigma", '[["a"]]', '[["a"]]'], "disjoint"),
    (["delta", "--monoid", "sigma", '[["a"]]', "--left", '["z"]'], "not in the support"),
    (["mobius", "--sigma", '[["a","b"]]', "--tau", '[["a"],["c"]]'], "different label sets"),
    (["port", "--family", "sigma", "-r", "3", "-s", "2", '{"r":3,"large":[],"small":[]}'], "r < s"),
    (["delta", "--monoid", "pf", '[[],["a"]]', "--left", "[]"], "parking"),
])
def test_input_errors_exit_two(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert fragment in err


def test_check_suites_pass(capsys):
    code, out, _ = run(capsys, "check", "--suite", "posets", "--suite", "parking",
                       "--max-size", "3")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_check_literal_lemma_fails(capsys):
    code, out, _ = run(capsys, "check", "--suite", "park-lemma-literal", "--max-size", "3")
    assert code == 1
    assert "counterexample" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfspecies.cli", "park", "[[],[\"a\"]]"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == [["a"]]
