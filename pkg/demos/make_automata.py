"""Regenerate the JSON automata in demos/automata/ from the catalog."""

from pathlib import Path

from quantlang.catalog import bank, counter, long_run_a, motor_abstract, motor_refined, one_state, two_scc_limavg
from quantlang.core import LIMAVG, disc
from quantlang.documents import save_automaton

OUT = Path(__file__).parent / "automata"

AUTOMATA = {
    "motor_a": motor_refined(),
    "motor_b": motor_abstract(),
    "bank_a1": bank(1),
    "bank_a2": bank(2),
    "long_run_a": long_run_a(),
    "long_run_b": one_state({"a": 0, "b": 1}, LIMAVG, "long-run-b"),
    "two_scc": two_scc_limavg(),
    "quarter_disc": one_state({"a": 1, "b": 0}, disc("1/4"), "quarter-disc"),
    "count_a": counter("a"),
    "count_b": counter("b"),
}

if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for stem, A in AUTOMATA.items():
        save_automaton(A, OUT / f"{stem}.json")
        print(f"wrote {stem}.json  ({len(A.states)} states, {A.value_function})")
