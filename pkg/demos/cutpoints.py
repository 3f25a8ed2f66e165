"""From quantitative to boolean: cut-point languages.

A cut-point ``eta`` splits words into those worth at least ``eta`` and the
rest.  When no word value comes close to ``eta`` the split is a regular
omega-language and we can build a Büchi automaton for it.
"""

from fractions import Fraction as F

from quantlang.analysis import cutpoint_ddisc, cutpoint_dlavg, isolation_check_dlavg, isolation_probe_disc
from quantlang.catalog import long_run_a, one_state, two_scc_limavg
from quantlang.core import disc
from quantlang.errors import NotIsolated
from quantlang.words import all_lassos

words = all_lassos("ab", 3)

# Discounted sum with lambda 1/4: a first a is worth at least 1 and a first b
# at most 1/3, so eta = 1/2 is isolated.
A = one_state({"a": 1, "b": 0}, disc(F(1, 4)))
probe = isolation_probe_disc(A, F(1, 2), F(1, 8))
print(f"Discounted, lambda 1/4, eta 1/2: {probe.verdict} (no value within {probe.margin}, seen at depth {probe.depth})")
cp = cutpoint_ddisc(A, F(1, 2), F(1, 8))
print(f"  Büchi automaton of {len(cp.automaton.states)} states after unfolding to depth {cp.depth}")
print("  accepted:", ", ".join(str(w) for w in words if cp.accepts(w)))

# A limit average with two components: either a forever, or a 0-weight sink.
T = two_scc_limavg()
res = isolation_check_dlavg(T, F(1, 2))
print(f"\nTwo components, eta 1/2: {res.verdict}, margin {res.margin}")
cp = cutpoint_dlavg(T, F(1, 2))
print("  accepted:", ", ".join(str(w) for w in words if cp.accepts(w)))

# Counting a's in the long run: every rational in [0, 1] is a value, so no
# cut-point in that range is isolated.  The check returns a word sitting on it.
L = long_run_a()
for eta in (F(1, 2), F(2, 3)):
    try:
        cutpoint_dlavg(L, eta)
    except NotIsolated as exc:
        print(f"\neta {eta} on the long-run a-counter: {exc}")
res = isolation_check_dlavg(L, 2)
print(f"eta 2 on the long-run a-counter: {res.verdict}, margin {res.margin}")
