"""Finite words and ultimately periodic (lasso) words.

Textual grammar: symbols separated by whitespace, with the period of a lasso
word in parentheses::

    a a b          finite word aab
    a b (b a)      lasso word ab(ba)^omega
    (g1g2)         lasso word (g1g2)^omega over a one-symbol period

Parentheses may touch symbols (``a(b)`` parses as ``a (b)``).
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional, Union

from .errors import WordSyntaxError


@dataclass(frozen=True)
class FiniteWord:
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("finite words are nonempty")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return " ".join(self.symbols)


@dataclass(frozen=True)
class LassoWord:
    """The infinite word ``prefix . period^omega``."""

    prefix: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("lasso period must be nonempty")

    def __len__(self):
        """Number of positions in the representation, ``|u| + |v|``."""
        return len(self.prefix) + len(self.period)

    def symbol_at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def __str__(self):
        head = " ".join(self.prefix)
        body = "(" + " ".join(self.period) + ")"
        return f"{head} {body}" if head else body


Word = Union[FiniteWord, LassoWord]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def parse_word(text: str, alphabet: Optional[Iterable[str]] = None) -> Word:
    """Parse ``sym+`` or ``sym* ( sym+ )``; optionally check symbols against ``alphabet``."""
    prefix, period = [], None
    in_period = closed = False
    pos = 0
    allowed = set(alphabet) if alphabet is not None else None
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches non-space input
            raise WordSyntaxError("unexpected character", pos)
        start = m.start(m.lastindex)
        if closed:
            raise WordSyntaxError("nothing may follow the period", start)
        if m.group(1):
            if in_period:
                raise WordSyntaxError("nested parenthesis", start)
            in_period, period = True, []
        elif m.group(2):
            if not in_period:
                raise WordSyntaxError("unbalanced ')'", start)
            if not period:
                raise WordSyntaxError("empty period", start)
            in_period, closed = False, True
        else:
            sym = m.group(3)
            if allowed is not None and sym not in allowed:
                raise WordSyntaxError(f"symbol {sym!r} is not in the alphabet", start)
            (period if in_period else prefix).append(sym)
        pos = m.end()
    if in_period:
        raise WordSyntaxError("unclosed '('", len(text))
    if period is None:
        if not prefix:
            raise WordSyntaxError("empty word", 0)
        return FiniteWord(tuple(prefix))
    return LassoWord(tuple(prefix), tuple(period))


def _primitive_root(seq: tuple) -> tuple:
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq[:d] * (n // d) == seq:
            return seq[:d]
    return seq  # pragma: no cover


def normalize_lasso(w: LassoWord) -> LassoWord:
    """Canonical representative: primitive period, shortest prefix."""
    prefix, period = list(w.prefix), _primitive_root(w.period)
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period = (period[-1],) + period[:-1]
    return LassoWord(tuple(prefix), period)


def unroll(w: Word, n: int) -> FiniteWord:
    """First ``n`` symbols of the word."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if isinstance(w, FiniteWord):
        if n > len(w):
            raise ValueError("finite word is shorter than n")
        return FiniteWord(w.symbols[:n])
    return FiniteWord(tuple(w.symbol_at(i) for i in range(n)))


def same_omega_word(w1: LassoWord, w2: LassoWord) -> bool:
    """Compare two lassos by unrolling far enough to decide equality."""
    p1, p2 = len(w1.period), len(w2.period)
    n = len(w1.prefix) + len(w2.prefix) + 2 * (p1 * p2 // gcd(p1, p2))
    return unroll(w1, n) == unroll(w2, n)


def random_lasso(
    alphabet, rng: random.Random, max_prefix: int = 4, max_period: int = 4
) -> LassoWord:
    alphabet = list(alphabet)
    u = [rng.choice(alphabet) for _ in range(rng.randint(0, max_prefix))]
    v = [rng.choice(alphabet) for _ in range(rng.randint(1, max_period))]
    return LassoWord(tuple(u), tuple(v))


def sample_lassos(
    alphabet, count: int, seed: int = 0, max_prefix: int = 4, max_period: int = 4
) -> list:
    """``count`` seeded uniformly-shaped random lassos."""
    rng = random.Random(seed)
    return [random_lasso(alphabet, rng, max_prefix, max_period) for _ in range(count)]


def all_lassos(alphabet, max_length: int, normalized: bool = True) -> list:
    """Every lasso with ``|u| + |v| <= max_length``; duplicates of the same
    omega-word removed when ``normalized``."""
    alphabet = list(alphabet)
    out, seen = [], set()
    for total in range(1, max_length + 1):
        for plen in range(total):
            for u in itertools.product(alphabet, repeat=plen):
                for v in itertools.product(alphabet, repeat=total - plen):
                    w = LassoWord(u, v)
                    if normalized:
                        w = normalize_lasso(w)
                        if w in seen:
                            continue
                        seen.add(w)
                    out.append(w)
    return out


def all_finite_words(alphabet, max_length: int) -> Iterator[FiniteWord]:
    alphabet = list(alphabet)
    for n in range(1, max_length + 1):
        for syms in itertools.product(alphabet, repeat=n):
            yield FiniteWord(syms)
