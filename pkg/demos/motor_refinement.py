"""Does a detailed motor model refine a coarse one?

The refined model has a SLOW mode that makes mode changes cheaper.  The
abstract model treats ``slow`` as a full switch.  Refinement here means the
long-run energy of the refined model never exceeds the abstract one, on any
behaviour.  We check it on sampled behaviours and then look at a few by hand.
"""

from quantlang.catalog import motor_abstract, motor_refined
from quantlang.closure_omega import max_omega
from quantlang.valuation import evaluate, top_value
from quantlang.words import parse_word, sample_lassos

A, B = motor_refined(), motor_abstract()

print("Long-run average energy of a few behaviours:")
for text in ["(on)", "(off)", "(on off)", "(on slow)", "on (slow off on)"]:
    w = parse_word(text)
    print(f"  {text:18}  refined {evaluate(A, w)!s:>6}   abstract {evaluate(B, w)!s:>6}")

sample = sample_lassos(A.alphabet, 1000, seed=7)
worse = [w for w in sample if evaluate(A, w) > evaluate(B, w)]
print(f"\nSampled 1000 behaviours: {len(worse)} where the refined model costs more.")

gap = max(evaluate(B, w) - evaluate(A, w) for w in sample)
print(f"Largest saving seen from the SLOW mode: {gap}")

# Worst case of each model, with a behaviour reaching it.
for label, M in (("refined", A), ("abstract", B)):
    value, witness = top_value(M)
    print(f"Worst long-run energy of the {label} model: {value} on {witness}")

# Both models are deterministic, and deterministic limit-average automata
# cannot express a max.  Reading them as nondeterministic works.
M = max_omega(A, B, deterministic=False)
print(f"\nmax(refined, abstract) as a nondeterministic automaton: {len(M.states)} states")
print(f"  value on (on slow): {evaluate(M, parse_word('(on slow)'))}")
