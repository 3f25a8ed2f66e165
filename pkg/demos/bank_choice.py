"""Comparing two banks with discounted rewards.

Each bank is good or bad each period.  Bank 1 pays 8 when good and 2 when
bad, bank 2 pays 6 and 4.  A symbol such as ``g1b2`` says how both banks did.
Future payments are discounted by a factor lambda per period.
"""

from fractions import Fraction

from quantlang.catalog import bank
from quantlang.closure_omega import complement_omega, sum_omega
from quantlang.valuation import evaluate, top_value
from quantlang.words import parse_word

for lam in ("1/2", "3/4"):
    b1, b2 = bank(1, lam), bank(2, lam)
    print(f"lambda = {lam}")
    for text in ["(g1g2)", "(b1b2)", "(g1b2 b1g2)", "g1g2 (b1b2)"]:
        w = parse_word(text)
        v1, v2 = evaluate(b1, w), evaluate(b2, w)
        better = "bank 1" if v1 > v2 else "bank 2" if v2 > v1 else "tie"
        print(f"  {text:14} bank 1 {v1!s:>8}  bank 2 {v2!s:>8}  -> {better}")
    v, w = top_value(b1)
    print(f"  best case for bank 1: {v} on {w}")

# Splitting money evenly between the banks is their sum, scaled by one half.
b1, b2 = bank(1), bank(2)
both = sum_omega(b1, b2)
w = parse_word("(g1b2)")
print(f"\nSplit evenly on (g1b2): {evaluate(both, w) * Fraction(1, 2)}")

# The deterministic complement maps each value v to 1 - v.
c = complement_omega(b1)
print(f"bank 1 on (g1g2): {evaluate(b1, parse_word('(g1g2)'))}, complement: {evaluate(c, parse_word('(g1g2)'))}")
