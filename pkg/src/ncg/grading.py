"""Multidegrees, leading homogeneous parts and associated graded algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .freealg import Alphabet, NcPoly, Presentation
from .gb import GroebnerBasis, complete, normal_form
from .order import ZrGraded, norm, zr_key


class GradingError(ValueError):
    pass


class IncompleteBasisWarning(UserWarning):
    pass


class MultiGrading:
    """Assignment of a vector in N^r to each generator."""

    def __init__(self, alphabet: Alphabet, degrees: Optional[Sequence[Sequence[int]]] = None):
        degrees = degrees if degrees is not None else alphabet.zrdeg
        if degrees is None:
            raise GradingError("no multidegrees given")
        degrees = [tuple(int(x) for x in d) for d in degrees]
        if len(degrees) != len(alphabet):
            raise GradingError("one multidegree per generator is required")
        if len({len(d) for d in degrees}) != 1:
            raise GradingError("multidegrees must have a common length")
        for name, d, zd in zip(alphabet.names, degrees, alphabet.degrees):
            if any(x < 0 for x in d):
                raise GradingError(f"negative entry in the multidegree of {name}")
            if norm(d) != zd:
                raise GradingError(f"norm of deg({name}) = {norm(d)} differs from its degree {zd}")
        self.alphabet = alphabet
        self.degrees = tuple(degrees)
        self.r = len(degrees[0])

    @classmethod
    def partition(cls, alphabet: Alphabet, blocks: Sequence[Sequence[str]]):
        """Unit-vector grading: generators in block i get e_i."""
        r = len(blocks)
        degs = [None] * len(alphabet)
        for i, block in enumerate(blocks):
            for name in block:
                v = [0] * r
                v[i] = 1
                degs[alphabet.index[name]] = tuple(v)
        if any(d is None for d in degs):
            raise GradingError("every generator must lie in one block")
        return cls(alphabet, degs)

    def order(self, base=None):
        return ZrGraded(self.alphabet, self.degrees, base)


def multidegree(w, g: MultiGrading) -> Tuple[int, ...]:
    acc = [0] * g.r
    for i in w:
        for k, x in enumerate(g.degrees[i]):
            acc[k] += x
    return tuple(acc)


def lh(f: NcPoly, g: MultiGrading) -> NcPoly:
    """Sum of the terms of f whose multidegree is maximal."""
    if not f:
        raise ValueError("the leading homogeneous part of 0 is undefined")
    degs = {w: multidegree(w, g) for w in f.terms}
    top = max(degs.values(), key=zr_key)
    return NcPoly._raw(f.alphabet, {w: c for w, c in f.terms.items() if degs[w] == top})


def is_zr_homogeneous(f: NcPoly, g: MultiGrading) -> bool:
    return len({multidegree(w, g) for w in f.terms}) <= 1


def _minimal_generators(polys: List[NcPoly], order, bound) -> List[NcPoly]:
    """Drop polynomials lying in the ideal of the previously kept ones."""
    kept: List[NcPoly] = []
    for f in sorted(polys, key=lambda p: (p.degree(), order.key(p.lm(order)))):
        if kept:
            gb = complete(kept, order, max(f.degree(), max(k.degree() for k in kept)), check_complete=False)
            if not normal_form(f, gb.elements, order):
                continue
        kept.append(f)
    return kept


def assoc_graded(p: Presentation, g: MultiGrading, order=None, bound: int = 8):
    """Presentation generated by the leading homogeneous parts of a GB.

    Returns ``(presentation, groebner_basis)``.
    """
    order = order or g.order()
    G = complete(p.relations, order, bound)
    lhs = [lh(f, g) for f in G.elements]
    rels = _minimal_generators(lhs, order, bound)
    out = Presentation(p.alphabet, rels, p.field, list(p.parameters), (p.name + "_gr") if p.name else "")
    return out, G


@dataclass
class CriterionReport:
    gb: GroebnerBasis
    lh_ideal: List[NcPoly]
    target: Presentation
    verdict: str
    witness: Optional[NcPoly] = None
    exact: bool = True
    warnings: List[str] = field(default_factory=list)
    assumed_nonzero: List[object] = field(default_factory=list)
    note: str = (
        "The associated graded algebra coincides with the target presentation; "
        "regularity of the input algebra follows from the trusted regularity of the target."
    )

    @property
    def matches(self):
        return self.verdict == "MatchesTarget"


def criterion_check(p: Presentation, g: MultiGrading, target: Presentation, order=None, bound: int = 8):
    """Compare the ideal (LH(G)) with the ideal of ``target``.

    Mutual membership is decided with normal forms modulo Groebner bases of
    both ideals at the given bound.
    """
    order = order or g.order()
    for r in target.relations:
        if not is_zr_homogeneous(r, g):
            raise GradingError(f"target relation {r} is not homogeneous for the multigrading")
    gr, G = assoc_graded(p, g, order, bound)
    lhs = [lh(f, g) for f in G.elements]
    warnings = []
    G_lh = complete(lhs, order, bound)
    G_t = complete(target.relations, order, bound)
    exact = G.complete and G_lh.complete and G_t.complete
    if not exact:
        warnings.append("IncompleteBasisWarning: verdict is limited to the bound")
    witness = None
    for f in lhs:
        r = normal_form(f, G_t.elements, order)
        if r:
            witness = f
            break
    if witness is None:
        for f in target.relations:
            r = normal_form(f, G_lh.elements, order)
            if r:
                witness = f
                break
    verdict = "MatchesTarget" if witness is None else "MismatchWitness"
    report = CriterionReport(
        gb=G,
        lh_ideal=gr.relations,
        target=target,
        verdict=verdict,
        witness=witness,
        exact=exact,
        warnings=warnings,
        assumed_nonzero=list(G.assumed_nonzero),
    )
    if witness is not None:
        report.note = "The associated graded ideal differs from the target ideal."
    return report
