"""Monomial orders on words and the norm-then-lex order on multidegrees.

Every order object exposes ``key(word)``; comparing keys with the usual
tuple comparison realises the order, so ``max(words, key=order.key)`` picks
the leading monomial.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Sequence, Tuple


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sign(a, b):
    return Ordering((a > b) - (a < b))


def norm(alpha: Sequence[int]) -> int:
    return sum(alpha)


def cmp_zr(alpha: Sequence[int], beta: Sequence[int]) -> Ordering:
    """Compare by norm, then by the first differing coordinate."""
    if len(alpha) != len(beta):
        raise ValueError(f"dimension mismatch: {len(alpha)} vs {len(beta)}")
    return _sign((norm(alpha), tuple(alpha)), (norm(beta), tuple(beta)))


def zr_key(alpha):
    return (norm(alpha), tuple(alpha))


class GrLex:
    """Weighted degree first; then the smaller generator index wins."""

    name = "grlex"

    def __init__(self, alphabet=None):
        self.alphabet = alphabet
        self._deg = alphabet.degrees if alphabet is not None else None

    def degree(self, w):
        if self._deg is None:
            return len(w)
        d = self._deg
        return sum(d[i] for i in w)

    def key(self, w):
        return (self.degree(w), tuple(-i for i in w))

    def cmp(self, u, v) -> Ordering:
        return _sign(self.key(u), self.key(v))

    def heapkey(self, w):
        """Flat key whose ascending order is the descending word order."""
        return (-self.degree(w),) + tuple(w)

    def __repr__(self):
        return "GrLex()"


class ZrGraded:
    """Multidegree under norm-then-lex; ties broken by a base order."""

    name = "zr"

    def __init__(self, alphabet, zrdeg=None, base=None):
        self.alphabet = alphabet
        zrdeg = zrdeg if zrdeg is not None else alphabet.zrdeg
        if zrdeg is None:
            raise ValueError("a multigrading is required for the Zr-graded order")
        self.zrdeg = tuple(tuple(v) for v in zrdeg)
        if len(self.zrdeg) != len(alphabet):
            raise ValueError("one multidegree per generator is required")
        self.r = len(self.zrdeg[0])
        self.base = base if base is not None else GrLex(alphabet)

    def multidegree(self, w) -> Tuple[int, ...]:
        acc = [0] * self.r
        for i in w:
            for k, x in enumerate(self.zrdeg[i]):
                acc[k] += x
        return tuple(acc)

    def key(self, w):
        md = self.multidegree(w)
        return (sum(md), md, self.base.key(w))

    def cmp(self, u, v) -> Ordering:
        return _sign(self.key(u), self.key(v))

    def heapkey(self, w):
        md = self.multidegree(w)
        return (-sum(md),) + tuple(-x for x in md) + self.base.heapkey(w)

    def __repr__(self):
        return f"ZrGraded({self.zrdeg})"


def cmp_grlex(u, v, alphabet=None) -> Ordering:
    return GrLex(alphabet).cmp(u, v)


def cmp_zr_graded(u, v, grading, base=None) -> Ordering:
    """``grading`` is an alphabet carrying ``zrdeg`` or a ZrGraded order."""
    order = grading if isinstance(grading, ZrGraded) else ZrGraded(grading, base=base)
    return order.cmp(u, v)


def make_order(kind, alphabet):
    if kind == "grlex":
        return GrLex(alphabet)
    if kind == "zr":
        return ZrGraded(alphabet)
    raise ValueError(f"unknown order {kind!r}")
