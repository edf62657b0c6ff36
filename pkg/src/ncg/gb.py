"""Noncommutative Buchberger completion for homogeneous ideals.

The completion proceeds degree by degree.  In degree ``d`` the candidates
are the input relations of that degree together with the S-polynomials of
all overlap ambiguities whose superposition has degree ``d``; they are
reduced against the current basis and row-reduced among themselves, which
keeps the basis reduced and monic at every stage.  After the bound, the
remaining (higher degree) overlaps are tested: when all of them reduce to
zero the basis is a finite Groebner basis and ``complete`` is set.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import NcPoly, Word
from .scalars import RationalFunction


class ZeroRelation(ValueError):
    pass


class InhomogeneousInput(ValueError):
    pass


class Membership(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN_BEYOND_BOUND = "UnknownBeyondBound"


@dataclass(frozen=True)
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    i: int
    j: int
    degree: int
    word: Word
    shared: Word = ()
    left: Word = ()
    right: Word = ()


@dataclass
class GroebnerBasis:
    elements: List[NcPoly]
    order: object
    bound: int
    complete: bool
    assumed_nonzero: List[object] = field(default_factory=list)
    stats: Dict[str, int] = field(default_factory=dict)

    def leading_monomials(self):
        return [g.lm(self.order) for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normal_form(self, f, strategy="index"):
        return normal_form(f, self.elements, self.order, strategy)

    def truncated(self, m):
        """Elements of degree at most ``m``."""
        return [g for g in self.elements if g.degree() <= m]


def _inverse(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / c
    return c.inverse()


def _is_nonconstant_scalar(c):
    return isinstance(c, RationalFunction) and not c.is_constant()


class _Reducer:
    """Rewriting system built from monic polynomials, with a factor index."""

    def __init__(self, elements, order, strategy="index"):
        if strategy not in ("index", "leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.order = order
        self.strategy = strategy
        self.rules = []  # (lm, tail terms as list of (word, coeff))
        self.by_lm: Dict[Word, int] = {}
        self.lengths: List[int] = []
        for g in elements:
            self.add(g)
        self._hk_cache: Dict[Word, tuple] = {}

    def add(self, g):
        lm, lc = g.leading(self.order)
        if lc != 1:
            g = g.scale(_inverse(lc))
        tail = [(w, c) for w, c in g.terms.items() if w != lm]
        idx = len(self.rules)
        self.rules.append((lm, tail))
        if lm not in self.by_lm:
            self.by_lm[lm] = idx
        if len(lm) not in self.lengths:
            self.lengths.append(len(lm))
            self.lengths.sort()
        return idx

    def find(self, w):
        """(rule index, position) of a rewrite site in w, or None."""
        best = None
        by_lm = self.by_lm
        n = len(w)
        strategy = self.strategy
        for pos in range(n):
            for L in self.lengths:
                if pos + L > n:
                    break
                idx = by_lm.get(w[pos : pos + L])
                if idx is None:
                    continue
                if strategy == "leftmost":
                    if best is None or idx < best[0]:
                        best = (idx, pos)
                elif strategy == "rightmost":
                    if best is None or pos > best[1] or (pos == best[1] and idx < best[0]):
                        best = (idx, pos)
                else:
                    if best is None or idx < best[0]:
                        best = (idx, pos)
            if strategy == "leftmost" and best is not None:
                return best
        return best

    def heapkey(self, w):
        k = self._hk_cache.get(w)
        if k is None:
            k = self.order.heapkey(w)
            self._hk_cache[w] = k
        return k

    def reduce(self, terms):
        """Full normal form of a term dictionary; returns a new dictionary."""
        work = dict(terms)
        hk = self.heapkey
        heap = [(hk(w), w) for w in work]
        heapq.heapify(heap)
        result = {}
        find = self.find
        rules = self.rules
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None:
                continue
            site = find(w)
            if site is None:
                result[w] = c
                continue
            idx, pos = site
            lm, tail = rules[idx]
            left = w[:pos]
            right = w[pos + len(lm) :]
            for v, a in tail:
                ww = left + v + right
                old = work.get(ww)
                if old is None:
                    work[ww] = -(c * a)
                    heapq.heappush(heap, (hk(ww), ww))
                else:
                    new = old - c * a
                    if new:
                        work[ww] = new
                    else:
                        del work[ww]
        return result


def normal_form(f: NcPoly, G: Sequence[NcPoly], order, strategy="index") -> NcPoly:
    """Normal form of ``f`` modulo the rewriting system given by ``G``."""
    if not G:
        return f
    red = _Reducer(G, order, strategy)
    return NcPoly._raw(f.alphabet, red.reduce(f.terms))


def ambiguities(G: Sequence, order=None, alphabet=None) -> List[Ambiguity]:
    """All overlap and inclusion ambiguities among leading monomials.

    ``G`` may hold polynomials (an order is then required) or words.
    """
    lms = []
    for g in G:
        if isinstance(g, NcPoly):
            lms.append(g.lm(order))
            alphabet = alphabet or g.alphabet
        else:
            lms.append(tuple(g))
    deg = alphabet.degree if alphabet is not None else len
    out = []
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k :] == b[:k]:
                    word = a + b[k:]
                    out.append(Ambiguity("overlap", i, j, deg(word), word, shared=b[:k]))
            if i != j and len(a) < len(b):
                for pos in range(len(b) - len(a) + 1):
                    if b[pos : pos + len(a)] == a:
                        out.append(
                            Ambiguity(
                                "inclusion", i, j, deg(b), b, left=b[:pos], right=b[pos + len(a) :]
                            )
                        )
    return out


def _overlaps_between(a: Word, b: Word):
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k :] == b[:k]:
            yield k


def _spoly(gi: NcPoly, gj: NcPoly, a: Word, b: Word, k: int) -> Dict[Word, object]:
    """gi * b[k:] - a[:-k] * gj for monic gi, gj."""
    right = b[k:]
    left = a[: len(a) - k]
    t = {w + right: c for w, c in gi.terms.items()}
    for w, c in gj.terms.items():
        ww = left + w
        old = t.get(ww)
        if old is None:
            t[ww] = -c
        else:
            s = old - c
            if s:
                t[ww] = s
            else:
                del t[ww]
    return t


def _record_inverse(lc, assumed, seen):
    if _is_nonconstant_scalar(lc):
        for poly in (lc.num, lc.den):
            if not poly.is_constant():
                key = str(poly)
                if key not in seen:
                    seen.add(key)
                    assumed.append(poly)


def complete(
    relations: Sequence[NcPoly],
    order,
    bound: int,
    strategy: str = "index",
    check_complete: bool = True,
    extra_check_degree: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced monic Groebner basis of the ideal, up to degree ``bound``.

    ``complete`` is True exactly when every overlap ambiguity, of any
    degree, resolves to zero.  Overlaps above the bound are examined only
    when ``check_complete`` is set; ``extra_check_degree`` limits that
    examination, in which case an unexamined overlap leaves the flag False.
    """
    rels = []
    for r in relations:
        if not r:
            raise ZeroRelation("zero polynomial given as a relation")
        if not r.is_homogeneous():
            raise InhomogeneousInput(f"relation {r} is not homogeneous")
        rels.append(r)
    if not rels:
        raise ValueError("no relations")
    alphabet = rels[0].alphabet
    deg = alphabet.degree
    maxdeg = max(r.degree() for r in rels)
    if bound < maxdeg:
        raise ValueError(f"bound {bound} is below the relation degree {maxdeg}")

    basis: List[NcPoly] = []
    lms: List[Word] = []
    reducer = _Reducer([], order, strategy)
    pending: Dict[int, List[Tuple[int, int, int]]] = {}
    assumed: List[object] = []
    seen = set()
    stats = {"spolys": 0, "zero_reductions": 0}

    def add_element(g):
        idx = len(basis)
        basis.append(g)
        a = g.lm(order)
        lms.append(a)
        reducer.add(g)
        for jdx, b in enumerate(lms):
            for k in _overlaps_between(a, b):
                pending.setdefault(deg(a) + deg(b[k:]), []).append((idx, jdx, k))
            if jdx != idx:
                for k in _overlaps_between(b, a):
                    pending.setdefault(deg(b) + deg(a[k:]), []).append((jdx, idx, k))

    by_degree: Dict[int, List[NcPoly]] = {}
    for r in rels:
        by_degree.setdefault(r.degree(), []).append(r)

    for d in range(0, bound + 1):
        cands = [r.terms for r in by_degree.get(d, [])]
        for i, j, k in pending.pop(d, []):
            stats["spolys"] += 1
            cands.append(_spoly(basis[i], basis[j], lms[i], lms[j], k))
        new: List[Dict[Word, object]] = []
        new_lm: List[Word] = []
        for t in cands:
            h = reducer.reduce(t)
            if h and new:
                h = _reduce_same_degree(h, new, new_lm)
            if not h:
                stats["zero_reductions"] += 1
                continue
            lm = max(h, key=order.key)
            lc = h[lm]
            if lc != 1:
                _record_inverse(lc, assumed, seen)
                inv = _inverse(lc)
                h = {w: c * inv for w, c in h.items()}
            for e in new:
                c = e.get(lm)
                if c:
                    for w, a in h.items():
                        s = e.get(w, 0) - c * a
                        if s:
                            e[w] = s
                        else:
                            e.pop(w, None)
            new.append(h)
            new_lm.append(lm)
        for h, lm in sorted(zip(new, new_lm), key=lambda p: order.key(p[1])):
            add_element(NcPoly._raw(alphabet, h))

    complete_flag = False
    if check_complete:
        complete_flag = True
        for d in sorted(pending):
            if extra_check_degree is not None and d > extra_check_degree:
                complete_flag = False
                break
            for i, j, k in pending[d]:
                t = _spoly(basis[i], basis[j], lms[i], lms[j], k)
                if reducer.reduce(t):
                    complete_flag = False
                    break
            if not complete_flag:
                break

    order_key = order.key
    elements = sorted(basis, key=lambda g: order_key(g.lm(order)))
    return GroebnerBasis(elements, order, bound, complete_flag, assumed, stats)


def _reduce_same_degree(h, new, new_lm):
    """Eliminate the pivots of already accepted same-degree elements."""
    for e, lm in zip(new, new_lm):
        c = h.get(lm)
        if c:
            for w, a in e.items():
                s = h.get(w, 0) - c * a
                if s:
                    h[w] = s
                else:
                    h.pop(w, None)
    return h


def member(f: NcPoly, gb: GroebnerBasis) -> Membership:
    if not f:
        return Membership.YES
    if f.degree() > gb.bound and not gb.complete:
        return Membership.UNKNOWN_BEYOND_BOUND
    return Membership.YES if not gb.normal_form(f) else Membership.NO


def reduce_basis(polys: Sequence[NcPoly], order) -> List[NcPoly]:
    """Interreduce a finite set of polynomials (no completion)."""
    items = [p.monic(order) for p in polys if p]
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(items):
            if g is None:
                continue
            others = [h for k, h in enumerate(items) if k != idx and h is not None]
            r = normal_form(g, others, order) if others else g
            if r != g:
                changed = True
                items[idx] = r.monic(order) if r else None
    return sorted((g for g in items if g is not None), key=lambda g: order.key(g.lm(order)))
