"""Hilbert series of monomial algebras and rational series expansion.

Normal words are the words avoiding every forbidden factor.  They are the
accepted paths of an Aho-Corasick style automaton, so their number in each
weighted degree follows from a dynamic programme over the states.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import Word


class EmptyForbiddenWord(ValueError):
    pass


class BadDenominator(ValueError):
    pass


@dataclass
class SeriesVector:
    coeffs: List[int]
    weights: Tuple[int, ...] = ()

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SeriesVector):
            return self.coeffs == other.coeffs
        return list(self.coeffs) == list(other)

    def truncate(self, n):
        return SeriesVector(self.coeffs[: n + 1], self.weights)


@dataclass(frozen=True)
class FirstDifference:
    index: int
    sign: int


EQUAL = "Equal"


class AvoidanceAutomaton:
    """Deterministic automaton over prefixes of the forbidden words.

    State 0 is the root (empty prefix).  ``delta[s][a]`` is the next state
    or ``None`` (the dead state) when reading ``a`` completes a forbidden
    factor.  ``prefixes[s]`` is the word a state stands for.
    """

    def __init__(self, forbidden: Sequence[Word], ngens: int):
        forb = [tuple(w) for w in forbidden]
        if any(len(w) == 0 for w in forb):
            raise EmptyForbiddenWord("the empty word is forbidden: the quotient is zero")
        self.ngens = ngens
        self.forbidden = forb
        # trie
        children: List[Dict[int, int]] = [{}]
        prefixes: List[Word] = [()]
        terminal = [False]
        for w in forb:
            s = 0
            for a in w:
                nxt = children[s].get(a)
                if nxt is None:
                    nxt = len(children)
                    children[s][a] = nxt
                    children.append({})
                    prefixes.append(prefixes[s] + (a,))
                    terminal.append(False)
                s = nxt
            terminal[s] = True
        # failure links, breadth first
        fail = [0] * len(children)
        order = []
        queue = deque()
        for a, s in children[0].items():
            queue.append(s)
        while queue:
            s = queue.popleft()
            order.append(s)
            for a, t in children[s].items():
                f = fail[s]
                while f and a not in children[f]:
                    f = fail[f]
                fail[t] = children[f].get(a, 0) if children[f].get(a, 0) != t else 0
                terminal[t] = terminal[t] or terminal[fail[t]]
                queue.append(t)
        # full transition table
        delta_full = [[0] * ngens for _ in children]
        for s in [0] + order:
            for a in range(ngens):
                if a in children[s]:
                    delta_full[s][a] = children[s][a]
                elif s == 0:
                    delta_full[s][a] = 0
                else:
                    delta_full[s][a] = delta_full[fail[s]][a]
        live = [s for s in range(len(children)) if not terminal[s]]
        renum = {s: k for k, s in enumerate(live)}
        self.prefixes = [prefixes[s] for s in live]
        self.delta: List[List[Optional[int]]] = [
            [renum.get(delta_full[s][a]) for a in range(ngens)] for s in live
        ]

    @property
    def nstates(self):
        return len(self.delta)

    def accepts(self, w: Word) -> bool:
        s = 0
        for a in w:
            s = self.delta[s][a]
            if s is None:
                return False
        return True


def build_automaton(forbidden: Sequence[Word], ngens: int = 2) -> AvoidanceAutomaton:
    return AvoidanceAutomaton(forbidden, ngens)


def count_normal_words(aut: AvoidanceAutomaton, weights: Sequence[int], N: int) -> SeriesVector:
    """Number of factor-avoiding words in each weighted degree 0..N."""
    weights = tuple(weights)
    if len(weights) != aut.ngens:
        raise ValueError("one weight per generator is required")
    # table[d][s] = number of words of weight d ending in state s
    table = [[0] * aut.nstates for _ in range(N + 1)]
    table[0][0] = 1
    for d in range(N + 1):
        row = table[d]
        for s, n in enumerate(row):
            if not n:
                continue
            for a, t in enumerate(aut.delta[s]):
                if t is None:
                    continue
                e = d + weights[a]
                if e <= N:
                    table[e][t] += n
    return SeriesVector([sum(r) for r in table], weights)


def brute_force_counts(forbidden: Sequence[Word], weights: Sequence[int], N: int) -> SeriesVector:
    """Independent count by enumerating every word of weight at most N."""
    forb = [tuple(w) for w in forbidden]
    ngens = len(weights)
    counts = [0] * (N + 1)

    def contains(w):
        for f in forb:
            m = len(f)
            for i in range(len(w) - m + 1):
                if w[i : i + m] == f:
                    return True
        return False

    stack = [((), 0)]
    while stack:
        w, d = stack.pop()
        if contains(w):
            continue
        counts[d] += 1
        for a in range(ngens):
            e = d + weights[a]
            if e <= N:
                stack.append((w + (a,), e))
    return SeriesVector(counts, tuple(weights))


def hilbert_from_lms(lms: Sequence[Word], weights: Sequence[int], N: int) -> SeriesVector:
    aut = build_automaton(lms, len(weights))
    return count_normal_words(aut, weights, N)


def expand_rational(numerator: Sequence[int], denominator: Sequence[int], N: int) -> SeriesVector:
    """Power series of numerator / prod(1 - t^d) up to t^N.

    ``numerator`` is a coefficient list; ``denominator`` lists the exponents
    d of the factors (1 - t^d).
    """
    for d in denominator:
        if d <= 0:
            raise BadDenominator(f"factor (1 - t^{d}) has no invertible constant term")
    coeffs = [0] * (N + 1)
    for i, c in enumerate(numerator[: N + 1]):
        coeffs[i] = c
    for d in denominator:
        for i in range(d, N + 1):
            coeffs[i] += coeffs[i - d]
    return SeriesVector(coeffs)


_FACTOR = re.compile(r"\(\s*1\s*-\s*t(?:\s*\^\s*(\d+))?\s*\)(?:\s*\^\s*(\d+))?")


def parse_rational(text: str) -> Tuple[List[int], List[int]]:
    """Parse ``"1/((1-t)^2*(1-t^2)*(1-t^3))"`` into (numerator, exponents)."""
    s = text.replace(" ", "")
    num_s, sep, den_s = s.partition("/")
    if num_s != "1":
        raise ValueError(f"only numerator 1 is supported, got {num_s!r}")
    if not sep:
        return [1], []
    single = _FACTOR.fullmatch(den_s)
    if not single and den_s.startswith("(") and den_s.endswith(")") and _balanced_outer(den_s):
        den_s = den_s[1:-1]
    exps: List[int] = []
    pos = 0
    while pos < len(den_s):
        if den_s[pos] == "*":
            pos += 1
            continue
        m = _FACTOR.match(den_s, pos)
        if not m:
            raise ValueError(f"cannot parse denominator factor at {den_s[pos:]!r}")
        d = int(m.group(1) or 1)
        k = int(m.group(2) or 1)
        exps.extend([d] * k)
        pos = m.end()
    return [1], exps


def _balanced_outer(s):
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(s) - 1:
            return False
    return True


def compare_series(s1: Sequence[int], s2: Sequence[int]):
    """``EQUAL`` or the first index where they differ with the sign of s1 - s2."""
    a, b = list(s1), list(s2)
    if len(a) != len(b):
        raise ValueError("series must have the same truncation")
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return FirstDifference(i, 1 if x > y else -1)
    return EQUAL


def words_of_degree(ngens: int, weights: Sequence[int], d: int):
    """All words of weighted degree d."""
    if d == 0:
        yield ()
        return
    for a in range(ngens):
        if weights[a] <= d:
            for rest in words_of_degree(ngens, weights, d - weights[a]):
                yield (a,) + rest
