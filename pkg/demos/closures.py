"""What the closure operations can and cannot build.

Counters are the running example.  ``count_a`` counts a's and ``count_b``
counts b's; both are deterministic Sum automata over finite words.
"""

from quantlang.catalog import counter, one_state
from quantlang.closure_finite import complement_finite, max_finite, min_finite, sum_finite
from quantlang.closure_omega import complement_omega, min_omega, sum_omega
from quantlang.core import LIMINF, LIMSUP
from quantlang.errors import ClosureError
from quantlang.valuation import evaluate
from quantlang.words import parse_word

a, b = counter("a"), counter("b")
w = parse_word("a b a a")
print(f"On {w}: count_a = {evaluate(a, w)}, count_b = {evaluate(b, w)}")
print(f"  sum         = {evaluate(sum_finite(a, b), w)}")
print(f"  complement  = {evaluate(complement_finite(a), w)}  (1 - count_a)")

for name, build in (("max", lambda: max_finite(a, b)), ("min", lambda: min_finite(a, b))):
    try:
        build()
    except ClosureError as exc:
        print(f"  {name}: refused. {exc.reason}")

M = max_finite(a, b, deterministic=False)
print(f"  max with nondeterminism: {evaluate(M, w)} using {len(M.states)} states")

# Infinite words: a LimInf sum needs to remember recent weights, because the
# two inputs may dip at different times.
x = one_state({"a": 1, "b": 0}, LIMINF, "inf-a")
y = one_state({"a": 0, "b": 1}, LIMINF, "inf-b")
s = sum_omega(x, y)
for text in ["(a)", "(a b)", "b (a)"]:
    v = parse_word(text)
    print(f"\nLimInf sum on {text}: {evaluate(s, v)}  (inputs {evaluate(x, v)} and {evaluate(y, v)})")

# LimSup: nondeterministic complement goes through Büchi complementation.
p = one_state({"a": 1, "b": 0}, LIMSUP, "inf-often-a")
c = complement_omega(p, deterministic=False)
m = min_omega(p, one_state({"a": 0, "b": 1}, LIMSUP))
print(f"\nComplement of 'infinitely many a' has {len(c.states)} states")
for text in ["(a)", "a (b)", "(a b)"]:
    v = parse_word(text)
    print(f"  {text:6} L = {evaluate(p, v)}  1 - L = {evaluate(c, v)}  min with inf-often-b = {evaluate(m, v)}")
