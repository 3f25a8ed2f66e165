"""Exception types raised across the package."""

from __future__ import annotations


class QuantlangError(Exception):
    """Base class for all errors raised by quantlang."""


class WordSyntaxError(QuantlangError, ValueError):
    """A word could not be parsed; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotTotal(QuantlangError):
    def __init__(self, missing):
        self.missing = list(missing)
        pairs = ", ".join(f"({q}, {s})" for q, s in self.missing)
        super().__init__(f"transition relation is not total; missing: {pairs}")


class AlphabetMismatch(QuantlangError):
    pass


class TagMismatch(QuantlangError):
    pass


class LambdaMismatch(TagMismatch):
    pass


class WrongArity(QuantlangError):
    """A finite-word value function was used on an infinite word, or vice versa."""


class MissingLambda(QuantlangError):
    pass


class NegativeScale(QuantlangError):
    pass


class UnsupportedTag(QuantlangError):
    pass


class WeightOutOfRange(QuantlangError):
    pass


class EpsNotPositive(QuantlangError):
    pass


class Acyclic(QuantlangError):
    pass


class DeadEnd(QuantlangError):
    pass


class TooLarge(QuantlangError):
    """A hard resource cap was exceeded."""


class ClosureError(QuantlangError):
    """The requested operation is proven not closed for this automaton class.

    ``reason`` names the counterexample language that witnesses non-closure.
    """

    def __init__(self, operation: str, class_name: str, reason: str):
        self.operation = operation
        self.class_name = class_name
        self.reason = reason
        super().__init__(f"{class_name} automata are not closed under {operation}: {reason}")


class NotIsolated(QuantlangError):
    def __init__(self, eta, witness=None, value=None):
        self.eta = eta
        self.witness = witness
        self.value = value
        msg = f"cut-point {eta} is not isolated"
        if witness is not None:
            msg += f"; witness {witness} has value {value}"
        super().__init__(msg)


class NotDeterministic(QuantlangError):
    """The operation is only defined for deterministic automata."""
