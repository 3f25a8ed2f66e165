"""Generators and cost formulas shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from quantlang.core import LIMAVG, LIMINF, LIMSUP, SUP, disc, weight_set
from quantlang.sampling import random_automaton

F = Fraction
WEIGHTS = (0, F(1, 3), F(1, 2), 1)
LAMBDAS = (F(1, 4), F(1, 2), F(3, 4))

#: constant for the NLsup complement size bound c * m * 2^(n log2 n)
NLSUP_COMPLEMENT_C = 4

# ✓ cells of the infinite-word closure table as (kind, deterministic, op)
OMEGA_CLOSED = [
    ("sup", True, "max"), ("sup", True, "min"), ("sup", True, "sum"),
    ("sup", False, "max"), ("sup", False, "min"), ("sup", False, "sum"),
    ("liminf", True, "max"), ("liminf", True, "min"), ("liminf", True, "sum"),
    ("liminf", False, "max"), ("liminf", False, "min"), ("liminf", False, "sum"),
    ("limsup", True, "max"), ("limsup", True, "min"), ("limsup", True, "sum"),
    ("limsup", False, "max"), ("limsup", False, "min"), ("limsup", False, "sum"),
    ("limsup", False, "complement"),
    ("limavg", False, "max"),
    ("disc", True, "complement"), ("disc", True, "sum"),
    ("disc", False, "max"), ("disc", False, "sum"),
]
OMEGA_KINDS = ("sup", "limsup", "liminf", "limavg", "disc")
OPS = ("max", "min", "sum", "complement")
OMEGA_OPEN = [
    (k, d, op) for k in OMEGA_KINDS for d in (True, False) for op in OPS
    if (k, d, op) not in OMEGA_CLOSED
]

FINITE_CLOSED = [
    ("max", True, "max"), ("max", True, "min"), ("max", True, "sum"),
    ("max", False, "max"), ("max", False, "min"), ("max", False, "sum"),
    ("last", True, "max"), ("last", True, "min"), ("last", True, "sum"), ("last", True, "complement"),
    ("last", False, "max"), ("last", False, "min"), ("last", False, "sum"), ("last", False, "complement"),
    ("sum", True, "sum"), ("sum", True, "complement"),
    ("sum", False, "max"), ("sum", False, "sum"),
]
FINITE_OPEN = [
    (k, d, op) for k in ("max", "last", "sum") for d in (True, False) for op in OPS
    if (k, d, op) not in FINITE_CLOSED
]


def value_function(kind: str, rng: random.Random):
    return {"sup": SUP, "limsup": LIMSUP, "liminf": LIMINF, "limavg": LIMAVG}.get(kind) or disc(rng.choice(LAMBDAS))


def pair(rng, kind, det, max_states=3, weights=WEIGHTS):
    vf = value_function(kind, rng)
    return tuple(
        random_automaton(rng, vf, rng.randint(1, max_states), weights=weights, deterministic=det)
        for _ in range(2)
    )


def combine(op, a, b=None):
    if op == "max":
        return max(a, b)
    if op == "min":
        return min(a, b)
    if op == "sum":
        return a + b
    return 1 - a


def omega_cost(kind, det, op, A1, A2=None) -> int:
    """Upper bound on the state count of a construction for the given inputs."""
    n1, m1 = len(A1.states), len(weight_set(A1))
    if op == "complement":
        if kind == "disc":
            return n1
        # 2^(n log2 n) == n^n
        return NLSUP_COMPLEMENT_C * m1 * n1**n1
    n2, m2 = len(A2.states), len(weight_set(A2))
    union = len(set(weight_set(A1)) | set(weight_set(A2)))
    if op == "max":
        if not det:
            return n1 + n2 + 1
        if kind == "liminf":
            return (m1 + m2) ** (n1 + n2)
        return n1 * n2
    if kind == "sup":
        return n1 * m1 * n2 * m2
    if op == "min":
        if kind == "liminf":
            return n1 * n2
        if det:
            return n1 * n2 * 2 ** union
        return 2 * n1 * n2 * union + 1
    if kind == "limsup" and not det:
        return 2 * n1 * m1 * n2 * m2 + 1
    if kind in ("limsup", "liminf"):
        return n1 * n2 * 2 ** (m1 * m2)
    return n1 * n2
