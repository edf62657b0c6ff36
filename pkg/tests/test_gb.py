import random
from fractions import Fraction

import pytest

from ncg import casebook
from ncg.freealg import NcPoly, parse_presentation
from ncg.gb import (
    InhomogeneousInput,
    Membership,
    ZeroRelation,
    ambiguities,
    complete,
    member,
    normal_form,
    reduce_basis,
)
from ncg.hilbert import hilbert_from_lms, words_of_degree
from ncg.linalg import rank
from ncg.order import GrLex

J = casebook.load("J")
A = J.alphabet
GRLEX = GrLex(A)
f1, f2 = J.relations
x1, x2 = NcPoly.gen(A, "x1"), NcPoly.gen(A, "x2")


def w(text):
    return A.word(text)


def ideal_dims(relations, alphabet, top):
    """dim of k<X>/I in degrees 0..top by plain linear algebra (no rewriting)."""
    dims = []
    for d in range(top + 1):
        basis = list(words_of_degree(len(alphabet), alphabet.degrees, d))
        index = {u: k for k, u in enumerate(basis)}
        rows = []
        for f in relations:
            e = f.degree()
            for a in range(d - e + 1):
                for left in words_of_degree(len(alphabet), alphabet.degrees, a):
                    for right in words_of_degree(len(alphabet), alphabet.degrees, d - e - a):
                        g = f.lmul(left).rmul(right)
                        row = [0] * len(basis)
                        for u, c in g.terms.items():
                            row[index[u]] = c
                        rows.append(row)
        dims.append(len(basis) - (rank(rows) if rows else 0))
    return dims


# -- normal forms and ambiguities -------------------------------------------


def test_normal_form_one_rewrite():
    assert normal_form(x1 * x2 * x2, [f1], GRLEX) == 2 * x2 * x1 * x2 - x2 * x2 * x1


def test_normal_form_of_relation():
    assert not normal_form(f1, [f1], GRLEX)


def test_normal_word_is_fixed():
    assert normal_form(x2 * x1, [f1, f2], GRLEX) == x2 * x1


@pytest.mark.parametrize("strategy", ["index", "leftmost", "rightmost"])
def test_reduction_strategies_agree(strategy):
    G = complete(J.relations, GRLEX, 8)
    f = (x1 * x1 * x2 * x2 * x1) + f2 * x2 * x1 - x1 * f1 * x1
    assert G.normal_form(f, strategy) == G.normal_form(f, "index")


def test_no_self_overlap():
    assert ambiguities([w("x1*x2^2")]) == []


def test_overlap_between_lms():
    amb = ambiguities([w("x1*x2^2"), w("x1*x2*x1*x2")])
    cross = [a for a in amb if a.kind == "overlap" and a.i != a.j]
    assert [(a.word, a.degree) for a in cross] == [(w("x1*x2*x1*x2^2"), 5)]
    # the second monomial also overlaps itself along x1*x2
    selfs = [a.word for a in amb if a.kind == "overlap" and a.i == a.j]
    assert selfs == [w("x1*x2*x1*x2*x1*x2")]


def test_overlaps_of_commutator_lms():
    amb = ambiguities([w("x1*x2"), w("x2*x1")])
    assert sorted(a.word for a in amb if a.kind == "overlap") == sorted([w("x1*x2*x1"), w("x2*x1*x2")])


def test_inclusion_ambiguity_detected():
    amb = ambiguities([w("x1*x2"), w("x2*x1*x2")])
    assert any(a.kind == "inclusion" for a in amb)


# -- completion ---------------------------------------------------------------


def test_commutative_plane_is_complete():
    G = complete([x1 * x2 - x2 * x1], GRLEX, 6)
    assert G.complete and G.elements == [x1 * x2 - x2 * x1]


def test_jordan_basis():
    G = complete(J.relations, GRLEX, 8)
    assert G.complete and len(G) == 3
    assert G.elements[:2] == [f1, f2]
    f3 = casebook.expected_f3(J)
    assert G.elements[2] == f3
    assert f3.coeff(w("x2*x1*x2*x1*x2")) == 2 * J.field.gen("u") - 2
    assert f3.coeff(w("x2^5")) == -2 * J.field.gen("w")


def test_u_relations_are_already_a_basis():
    U = casebook.load("U")
    G = complete(U.relations, GrLex(U.alphabet), 8)
    assert G.complete
    assert set(G.elements) == {r.monic(GrLex(U.alphabet)) for r in U.relations}


def test_truncation_flag():
    O = casebook.load("O", {"w": 1})
    G = complete(O.relations, GrLex(O.alphabet), 7, check_complete=False)
    assert not G.complete
    assert G.truncated(4) == [g for g in G.elements if g.degree() <= 4]


def test_membership():
    G = complete(J.relations, GRLEX, 8)
    assert member(f1 * x1 - x1 * f1 + f2, G) == Membership.YES
    assert member(x2 * x1, G) == Membership.NO


def test_membership_beyond_bound():
    O = casebook.load("O", {"w": 1})
    G = complete(O.relations, GrLex(O.alphabet), 5, check_complete=False)
    assert member(x2 ** 9, G) == Membership.UNKNOWN_BEYOND_BOUND


def test_rejects_inhomogeneous_and_zero():
    with pytest.raises(InhomogeneousInput):
        complete([x1 * x2 + x1], GRLEX, 4)
    with pytest.raises(ZeroRelation):
        complete([x1 - x1], GRLEX, 4)
    with pytest.raises(ValueError):
        complete([f2], GRLEX, 3)


def test_reduce_basis_interreduces():
    out = reduce_basis([f1, f1 * x1 + f1.scale(Fraction(3)) * x2, f1.scale(Fraction(2))], GRLEX)
    assert out == [f1]


# -- oracle: dimensions by linear algebra ----------------------------------------


@pytest.mark.parametrize(
    "name,params",
    [("J", {"u": 2, "v": -1, "w": 3}), ("U", {"g": 1, "h": 2}), ("O", {"w": 1}), ("Aprime", None)],
)
def test_counts_match_linear_algebra(name, params):
    p = casebook.load(name, params)
    G = complete(p.relations, GrLex(p.alphabet), 6, check_complete=False)
    counts = list(hilbert_from_lms(G.leading_monomials(), p.alphabet.degrees, 6))
    assert counts == ideal_dims(p.relations, p.alphabet, 6)


def test_basis_elements_lie_in_ideal_span():
    p = casebook.load("J", {"u": 1, "v": 2, "w": -1})
    G = complete(p.relations, GrLex(p.alphabet), 8)
    f3 = G.elements[2]
    before = ideal_dims(p.relations, p.alphabet, 5)[5]
    after = ideal_dims(list(p.relations) + [f3], p.alphabet, 5)[5]
    assert before == after


# -- uniqueness of the reduced basis under input perturbations --------------------


def _shuffled_inputs(rels, rng):
    rels = list(rels)
    rng.shuffle(rels)
    out = []
    for r in rels:
        c = Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.choice([1, 2, 3]))
        out.append(r.scale(c))
    # add a redundant consequence in the ideal
    extra = rels[0] * NcPoly.gen(rels[0].alphabet, rels[0].alphabet.names[-1])
    out.insert(rng.randrange(len(out) + 1), extra)
    return out


@pytest.mark.parametrize(
    "name,params,bound",
    [("J", None, 7), ("U", {"g": 1, "h": 2}, 7), ("V", {"w": 1, "l": 1}, 7)],
    ids=["J", "U", "V"],
)
def test_reduced_basis_unique_under_shuffles(name, params, bound):
    p = casebook.load(name, params)
    order = GrLex(p.alphabet)
    ref = complete(p.relations, order, bound)
    rng = random.Random(7)
    for _ in range(20):
        G = complete(_shuffled_inputs(p.relations, rng), order, bound)
        assert G.elements == ref.elements
        assert G.complete == ref.complete


def test_cyclotomic_coefficients_in_basis():
    p = parse_presentation("field: Qzeta7\ngens: x1:1 x2:1\nrel: x1*x2 - j*x2*x1\n")
    G = complete(p.relations, GrLex(p.alphabet), 6)
    assert G.complete and len(G) == 1
