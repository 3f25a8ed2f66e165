import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from quantlang.catalog import bank, long_run_a, motor_abstract, motor_refined, one_state
from quantlang.cli import main
from quantlang.core import LIMAVG, disc
from quantlang.documents import (
    DocumentError,
    automaton_from_dict,
    automaton_to_dict,
    load_automaton,
    save_automaton,
)
from quantlang.errors import MissingLambda, NotTotal
from quantlang.words import parse_word
from quantlang.valuation import evaluate


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, A in {
        "motor_a": motor_refined(),
        "motor_b": motor_abstract(),
        "bank1": bank(1),
        "bank2": bank(2),
        "long_run": long_run_a(),
        "quarter": one_state({"a": 1, "b": 0}, disc("1/4")),
    }.items():
        paths[name] = str(tmp_path / f"{name}.json")
        save_automaton(A, paths[name])
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out else None
    return code, doc, captured.err


def test_document_round_trip(tmp_path):
    A = bank(1, "3/4")
    save_automaton(A, tmp_path / "b.json")
    B = load_automaton(tmp_path / "b.json")
    assert automaton_to_dict(A) == automaton_to_dict(B)
    w = parse_word("g1b2 (b1g2)")
    assert evaluate(A, w) == evaluate(B, w)


def test_document_errors():
    doc = automaton_to_dict(long_run_a())
    with pytest.raises(NotTotal):
        automaton_from_dict(dict(doc, transitions=doc["transitions"][:1]))
    with pytest.raises(MissingLambda):
        automaton_from_dict(dict(doc, type="disc"))
    with pytest.raises(DocumentError):
        automaton_from_dict(dict(doc, transitions=[dict(doc["transitions"][0], weight=0.5)]))
    with pytest.raises(DocumentError):
        automaton_from_dict({"type": "limavg"})


def test_eval_bank(capsys, files):
    code, doc, _ = run(capsys, "eval", files["bank1"], "--word", "(g1g2)")
    assert code == 0 and doc["value"] == "16/1"
    code, doc, _ = run(capsys, "--decimal", "3", "eval", files["quarter"], "--word", "a (b)")
    assert doc["value"] == "1/1" and doc["value_decimal"] == "1.000"


def test_eval_bad_word(capsys, files):
    code, _, err = run(capsys, "eval", files["bank1"], "--word", "(zz)")
    assert code == 1 and "alphabet" in err


def test_validate(capsys, files, tmp_path):
    code, doc, _ = run(capsys, "validate", files["motor_a"])
    assert code == 0 and doc["is_total"] and doc["is_deterministic"]
    partial = automaton_to_dict(long_run_a())
    partial["transitions"] = partial["transitions"][:1]
    (tmp_path / "partial.json").write_text(json.dumps(partial))
    code, doc, _ = run(capsys, "validate", str(tmp_path / "partial.json"))
    assert code == 1 and doc["missing"] == [["q", "b"]]


def test_compose_deterministic_limavg_max_is_refused(capsys, files):
    code, _, err = run(capsys, "compose", "max", files["motor_a"], files["motor_b"])
    assert code == 2 and "not closed" in err


def test_compose_nondeterministic_max(capsys, files, tmp_path):
    out = str(tmp_path / "m.json")
    code, doc, _ = run(capsys, "compose", "max", files["motor_a"], files["motor_b"], "--nondeterministic", "-o", out)
    assert code == 0 and doc["output"] == out
    C = load_automaton(out)
    w = parse_word("(on slow)")
    assert evaluate(C, w) == max(evaluate(motor_refined(), w), evaluate(motor_abstract(), w))


def test_compose_sum_embeds_automaton(capsys, files):
    code, doc, _ = run(capsys, "compose", "sum", files["bank1"], files["bank2"])
    assert code == 0
    C = automaton_from_dict(doc["automaton"])
    assert evaluate(C, parse_word("(g1g2)")) == 28


def test_complement_shift_scale(capsys, files):
    code, doc, _ = run(capsys, "complement", files["quarter"])
    assert code == 0
    C = automaton_from_dict(doc["automaton"])
    assert evaluate(C, parse_word("(a)")) == 1 - F(4, 3)
    code, doc, _ = run(capsys, "shift", files["long_run"], "-c", "1/2")
    assert evaluate(automaton_from_dict(doc["automaton"]), parse_word("(b)")) == F(1, 2)
    code, doc, _ = run(capsys, "scale", files["long_run"], "-c", "-1")
    assert code == 1


def test_cutpoint_and_isolate(capsys, files):
    code, doc, _ = run(capsys, "cutpoint", files["quarter"], "--eta", "1/2", "--eps", "1/8")
    assert code == 0 and doc["depth"] == 2 and doc["automaton"]["type"] == "buchi"
    code, _, err = run(capsys, "cutpoint", files["quarter"], "--eta", "1/2")
    assert code == 1 and "--eps" in err
    code, doc, _ = run(capsys, "isolate", files["long_run"], "--eta", "1/2")
    assert code == 2 and doc["verdict"] == "not_isolated" and doc["value"] == "1/2"
    code, _, _ = run(capsys, "cutpoint", files["long_run"], "--eta", "1/2")
    assert code == 2
    code, doc, _ = run(capsys, "isolate", files["long_run"], "--eta", "2")
    assert code == 0 and doc["margin"] == "1/1"


def test_reduce_perturb_dsup_top_diff(capsys, files, tmp_path):
    code, doc, _ = run(capsys, "reduce-bool", files["long_run"])
    assert code == 0 and doc["states"] == 1
    out = str(tmp_path / "p.json")
    code, _, _ = run(capsys, "perturb", files["long_run"], "--eps", "1/10", "--seed", "3", "-o", out)
    code, doc, _ = run(capsys, "dsup", files["long_run"], out, "--samples", "50")
    assert code == 0 and F(doc["sampled_dsup"]) <= F(1, 10)
    code, doc, _ = run(capsys, "top", files["bank1"])
    assert doc["value"] == "16/1"
    code, doc, _ = run(capsys, "diff", files["motor_b"], files["motor_a"], "--samples", "200")
    assert code == 0 and doc["witness"] is not None


def test_missing_file(capsys):
    code, _, err = run(capsys, "top", "/nonexistent.json")
    assert code == 1 and "error" in err


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "quantlang", "top", files["bank2"]],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["value"] == "12/1"
