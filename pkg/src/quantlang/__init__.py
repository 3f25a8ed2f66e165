"""Quantitative languages as executable objects.

Weighted automata with exact rational weights, valued on finite words
(Max, Last, Sum) and on ultimately periodic infinite words (Sup, LimSup,
LimInf, LimAvg, discounted sum), together with their closure constructions
and cut-point analysis.
"""

from .core import (
    LAST,
    LIMAVG,
    LIMINF,
    LIMSUP,
    MAX,
    SUM,
    SUP,
    Rational,
    Transition,
    ValidationReport,
    ValueFunction,
    WeightedAutomaton,
    as_rational,
    disc,
    epsilon_approximation,
    format_rational,
    make_automaton,
    scale,
    shift,
    validate,
)
from .errors import ClosureError, NotIsolated, QuantlangError
from .valuation import evaluate, evaluate_finite, evaluate_lasso, top_value
from .words import FiniteWord, LassoWord, normalize_lasso, parse_word
from .closure_finite import complement_finite, max_finite, min_finite, sum_finite
from .closure_omega import complement_omega, max_omega, min_omega, sum_omega
from .omega_boolean import (
    BooleanOmegaAutomaton,
    lasso_membership,
    nbw_complement,
    nbw_emptiness,
    ncw_determinize,
    nlinf_determinize,
    threshold_automaton,
)
from .analysis import (
    CutpointAutomaton,
    IsolationResult,
    boolean_weight_reduction,
    cutpoint_ddisc,
    cutpoint_dlavg,
    dsup_bound,
    isolation_check_dlavg,
    isolation_probe_disc,
    sampled_dsup,
)

__version__ = "0.1.0"
