"""Small named automata used in demos, tests and documentation."""

from __future__ import annotations

from fractions import Fraction

from .core import LIMAVG, MAX, SUM, ValueFunction, as_rational, disc, make_automaton

BANK_ALPHABET = ("g1g2", "g1b2", "b1g2", "b1b2")


def motor_refined():
    """Three-mode motor energy model (off/on/slow) with smooth slow-down."""
    return make_automaton(
        [
            ("OFF", "off", "OFF", 0), ("OFF", "on", "ON", 10), ("OFF", "slow", "SLOW", 5),
            ("ON", "on", "ON", 2), ("ON", "off", "OFF", 10), ("ON", "slow", "SLOW", 5),
            ("SLOW", "slow", "SLOW", 1), ("SLOW", "off", "OFF", 5), ("SLOW", "on", "ON", 5),
        ],
        "OFF", LIMAVG, alphabet=("on", "off", "slow"), name="motor-A",
    )


def motor_abstract():
    """Two-mode motor model where ``slow`` is treated as a full mode change."""
    return make_automaton(
        [
            ("OFF", "off", "OFF", 0), ("OFF", "on", "ON", 10), ("OFF", "slow", "ON", 10),
            ("ON", "on", "ON", 2), ("ON", "off", "OFF", 10), ("ON", "slow", "OFF", 10),
        ],
        "OFF", LIMAVG, alphabet=("on", "off", "slow"), name="motor-B",
    )


def bank(which: int, lam="1/2"):
    """Discounted reward of 100 dollars in bank 1 (8%/2%) or bank 2 (6%/4%).

    Symbols pair the moves of both banks: ``g1b2`` means bank 1 turns good
    and bank 2 turns bad.
    """
    good, bad = {1: (8, 2), 2: (6, 4)}[which]
    G, B = f"G{which}", f"B{which}"
    trans = []
    for sym in BANK_ALPHABET:
        is_good = sym[:2] == "g1" if which == 1 else sym[2:] == "g2"
        for src in (G, B):
            trans.append((src, sym, G if is_good else B, good if is_good else bad))
    return make_automaton(trans, G, disc(lam), alphabet=BANK_ALPHABET, name=f"bank-{which}")


def one_state(weights: dict, value_function: ValueFunction, name: str = ""):
    """Single state ``q`` with a self-loop per symbol."""
    return make_automaton(
        [("q", sym, "q", w) for sym, w in weights.items()], "q", value_function,
        alphabet=tuple(weights), name=name,
    )


def long_run_a():
    """One state, ``a`` weighs 1 and ``b`` weighs 0, read as a limit average."""
    return one_state({"a": 1, "b": 0}, LIMAVG, "long-run-a")


def two_scc_limavg():
    """``q0 -a:1-> q0``, ``q0 -b:0-> q1``, ``q1`` a 0-weight sink."""
    return make_automaton(
        [("q0", "a", "q0", 1), ("q0", "b", "q1", 0), ("q1", "a", "q1", 0), ("q1", "b", "q1", 0)],
        "q0", LIMAVG, alphabet=("a", "b"), name="two-scc",
    )


def boolean_weight_gap(lam):
    """Discounted ``a`` loop of weight ``(1 + lam) / 2``, ``b`` loop of weight 0."""
    lam = as_rational(lam)
    return one_state({"a": (1 + lam) / 2, "b": Fraction(0)}, disc(lam), "boolean-gap")


def counter(symbol: str, alphabet=("a", "b"), value_function=SUM):
    """Counts occurrences of ``symbol`` (weight 1 on it, 0 elsewhere)."""
    return one_state({s: int(s == symbol) for s in alphabet}, value_function, f"count-{symbol}")


def constant(c, value_function=MAX, alphabet=("a", "b")):
    return one_state({s: as_rational(c) for s in alphabet}, value_function, f"const-{c}")
