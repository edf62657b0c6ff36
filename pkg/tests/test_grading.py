
import pytest

from ncg import casebook
from ncg.freealg import Alphabet, NcPoly, parse_expression
from ncg.grading import (
    GradingError,
    MultiGrading,
    assoc_graded,
    criterion_check,
    is_zr_homogeneous,
    lh,
    multidegree,
)

J = casebook.load("J")
G2 = MultiGrading(J.alphabet)
A = J.alphabet


def poly(text, p=J):
    return parse_expression(text, p.alphabet, p.field)


def test_multidegrees():
    assert multidegree(A.word("x1*x2*x1*x2"), G2) == (2, 2)
    assert multidegree((), G2) == (0, 0)
    assert multidegree(A.word("x2^4"), G2) == (0, 4)


def test_partition_grading_equals_declared():
    part = MultiGrading.partition(A, [["x1"], ["x2"]])
    assert part.degrees == G2.degrees


def test_grading_validation():
    with pytest.raises(GradingError):
        MultiGrading(Alphabet(["x", "y"]))
    with pytest.raises(GradingError):
        MultiGrading(A, [(1, 0)])
    with pytest.raises(GradingError):
        MultiGrading(A, [(1, 1), (0, 1)])  # norm 2 for a degree-1 generator
    with pytest.raises(GradingError):
        MultiGrading.partition(A, [["x1"]])


def test_lh_of_quartic():
    assert lh(J.relations[1], G2) == poly("x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3")


def test_lh_of_homogeneous_cubic():
    f1 = J.relations[0]
    assert lh(f1, G2) == f1
    assert is_zr_homogeneous(f1, G2)
    assert not is_zr_homogeneous(J.relations[1], G2)


def test_lh_of_skew_relation():
    p = casebook.load("Aprime")
    g = MultiGrading(p.alphabet)
    assert lh(p.relations[0], g) == poly("y*x - x*y", p)


def test_lh_of_zero():
    with pytest.raises(ValueError):
        lh(NcPoly.zero(A), G2)


def test_assoc_graded_of_j():
    gr, G = assoc_graded(J, G2)
    assert G.complete
    assert gr.relations == [lh(J.relations[0], G2), lh(J.relations[1], G2)]


def test_assoc_graded_of_skew_plane():
    p = casebook.load("Aprime")
    gr, _ = assoc_graded(p, MultiGrading(p.alphabet))
    assert [str(r) for r in gr.relations] == ["x*y - y*x"]


def test_assoc_graded_of_homogeneous_presentation():
    p = casebook.load("D21")
    gr, _ = assoc_graded(p, MultiGrading(p.alphabet))
    assert gr.relations == p.relations


def test_criterion_matches_target():
    target = casebook._lift_target(casebook.load("D21"), J)
    rep = criterion_check(J, G2, target)
    assert rep.matches and rep.exact and rep.witness is None


def test_criterion_skew_plane():
    p = casebook.load("Aprime")
    rep = criterion_check(p, MultiGrading(p.alphabet), casebook.load("A1"))
    assert rep.verdict == "MatchesTarget"


def test_criterion_mismatch_with_wrong_target():
    p = casebook.load("J", {"u": 0, "v": 0, "w": 0})
    target = casebook.load("D21")
    wrong = type(target)(target.alphabet, [poly("x1*x2 - x2*x1", target)], target.field)
    rep = criterion_check(p, MultiGrading(p.alphabet), wrong)
    assert rep.verdict == "MismatchWitness" and rep.witness is not None


def test_criterion_rejects_inhomogeneous_target():
    with pytest.raises(GradingError):
        criterion_check(J, G2, J)


def test_criterion_flags_truncation():
    p = casebook.load("O", {"w": 1})
    g = MultiGrading.partition(p.alphabet, [["x1"], ["x2"]])
    target = casebook.load("D21")
    rep = criterion_check(p, g, target, bound=6)
    assert not rep.exact
    assert rep.warnings
