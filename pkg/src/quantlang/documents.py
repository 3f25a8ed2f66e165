"""JSON documents for automata and results.

An automaton document looks like::

    {
      "name": "bank-1",
      "type": "disc",
      "lambda": "1/2",
      "alphabet": ["g1g2", "g1b2", "b1g2", "b1b2"],
      "states": ["G1", "B1"],
      "initial": "G1",
      "transitions": [{"from": "G1", "symbol": "g1g2", "to": "G1", "weight": "8/1"}, ...]
    }

Boolean omega-automata use ``"type": "buchi"`` or ``"cobuchi"`` and an
``"accepting"`` flag on each transition instead of a weight.  Rationals are
always strings ``"p/q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .core import FINITE_KINDS, INFINITE_KINDS, ValueFunction, WeightedAutomaton, format_rational, validate
from .errors import MissingLambda, NotTotal, QuantlangError
from .omega_boolean import BUCHI, COBUCHI, BooleanOmegaAutomaton


class DocumentError(QuantlangError):
    """A document is malformed."""


def automaton_to_dict(A: Union[WeightedAutomaton, BooleanOmegaAutomaton]) -> dict:
    if isinstance(A, BooleanOmegaAutomaton):
        return {
            "name": A.name,
            "type": A.kind,
            "alphabet": list(A.alphabet),
            "states": list(A.states),
            "initial": A.initial,
            "transitions": [
                {"from": t.source, "symbol": t.symbol, "to": t.target, "accepting": t.accepting}
                for t in A.transitions
            ],
        }
    doc = {"name": A.name, "type": A.value_function.kind}
    if A.value_function.kind == "disc":
        doc["lambda"] = format_rational(A.value_function.lam)
    doc.update(
        alphabet=list(A.alphabet),
        states=list(A.states),
        initial=A.initial,
        transitions=[
            {"from": t.source, "symbol": t.symbol, "to": t.target, "weight": format_rational(t.weight)}
            for t in A.transitions
        ],
    )
    return doc


def _field(doc: dict, key: str):
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    return doc[key]


def _rational(text, where: str) -> Fraction:
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise DocumentError(f"{where}: rationals must be strings like \"3/4\", got {text!r}")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: not a rational: {text!r}") from exc


def automaton_from_dict(doc: dict, require_total: bool = True):
    """Build an automaton from a parsed document.

    Weighted automata must be total unless ``require_total`` is off; the
    error then lists every missing ``(state, symbol)`` pair.
    """
    if not isinstance(doc, dict):
        raise DocumentError("an automaton document must be a JSON object")
    kind = _field(doc, "type")
    alphabet = _field(doc, "alphabet")
    states = _field(doc, "states")
    initial = _field(doc, "initial")
    raw = _field(doc, "transitions")
    name = doc.get("name", "")
    try:
        if kind in (BUCHI, COBUCHI):
            trans = [(_field(t, "from"), _field(t, "symbol"), _field(t, "to"), bool(_field(t, "accepting"))) for t in raw]
            B = BooleanOmegaAutomaton(tuple(states), initial, tuple(alphabet), tuple(trans), kind, name)
            missing = [pair for pair, succ in B.successors.items() if not succ]
            if require_total and missing:
                raise NotTotal(missing)
            return B
        if kind not in FINITE_KINDS + INFINITE_KINDS:
            raise DocumentError(f"unknown type {kind!r}")
        if kind == "disc":
            if "lambda" not in doc:
                raise MissingLambda("type disc requires a \"lambda\" field")
            vf = ValueFunction("disc", _rational(doc["lambda"], "lambda"))
        else:
            if "lambda" in doc:
                raise DocumentError(f"type {kind} takes no lambda")
            vf = ValueFunction(kind)
        trans = [
            (_field(t, "from"), _field(t, "symbol"), _field(t, "to"), _rational(_field(t, "weight"), "weight"))
            for t in raw
        ]
        A = WeightedAutomaton(tuple(states), initial, tuple(alphabet), tuple(trans), vf, name)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, QuantlangError):
            raise
        raise DocumentError(str(exc)) from exc
    if require_total:
        report = validate(A)
        if not report.is_total:
            raise NotTotal(report.violations)
    return A


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_automaton(path, require_total: bool = True):
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON: {exc}") from exc
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from exc
    return automaton_from_dict(doc, require_total)


def save_automaton(A, path) -> None:
    Path(path).write_text(dumps(automaton_to_dict(A)))
