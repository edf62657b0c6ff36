import itertools
from fractions import Fraction

import pytest

from ncg import ainfinity as A
from ncg.freealg import Alphabet, parse_expression
from ncg.scalars import ParamField

from quartic_equations import RESIDUALS

NORMALIZATION = {"v1122": 0, "v2122": 0, "v1221": 0, "v1222": 0}


@pytest.fixture(scope="module")
def si5():
    return A.gen_si5()


# -- arity four -----------------------------------------------------------------


def test_closed_system_first_equation():
    F = ParamField(["g", "t"])
    g, t = F.gens()
    K, linear, closed = A.gen_si4(A.FrobeniusData.jordan(g, t))
    assert len(linear) == 32 and len(closed) == 8
    gg, tt, a111 = K.gen("g"), K.gen("t"), K.gen("a111")
    assert closed[0][1] == -(tt - gg**3) * a111


def test_closed_system_trivial_for_minus_identity():
    K, linear, closed = A.gen_si4(A.FrobeniusData.from_matrix([[-1, 0], [0, -1]], 1))
    assert all(not e for _, e in closed)


def test_zero_a_satisfies_closed_system():
    sc = A.StructureConstants(A.FrobeniusData.jordan(Fraction(2), Fraction(3)))
    assert all(not e for _, e in A.si4_closed(sc))


def test_linear_system_is_linear():
    F = ParamField(["g", "t"])
    K, linear, _ = A.gen_si4(A.FrobeniusData.jordan(*F.gens()))
    unknowns = [n for n in K.names if n[0] in "ab"]
    for _, e in linear:
        assert e.is_polynomial()
        for mono in e.num.terms:
            assert sum(k for v, k in mono if K.names[v] in unknowns) == 1


@pytest.fixture(scope="module")
def si4():
    return A.jordan_reduce_si4()


def test_determinant_forces_t_equals_g_cubed(si4):
    F = si4["determinant"].field
    g, t = F.gen("g"), F.gen("t")
    assert si4["determinant"] == (t - g**3) ** 8


def test_kernel_at_branch(si4):
    # a111 = a112 = a121 = a211 = 0 and a122 + a212 + a221 = 0
    assert si4["kernel_rank"] == 3
    names = si4["names"]
    for vec in si4["kernel"]:
        val = dict(zip(names, vec))
        assert all(not val[n] for n in ("a111", "a112", "a121", "a211"))
        assert not (val["a122"] + val["a212"] + val["a221"])


def test_cubic_relation(si4):
    r3 = si4["r3"]
    K = ParamField(["g", "p", "w"])
    expected = parse_expression("x1*x2^2 - (1+p)*x2*x1*x2 + p*x2^2*x1 + w*x2^3", r3.alphabet, K)
    assert r3 == expected


def test_b_table(si4):
    K = ParamField(["g", "p", "w"])
    g, p, w = K.gens()
    b = si4["b"]
    assert b[(1, 3, 2, 2)] == 1
    assert b[(2, 3, 1, 2)] == -(1 + p)
    assert b[(2, 3, 2, 1)] == p
    assert b[(2, 3, 2, 2)] == w
    assert b[(1, 2, 2, 2)] == g * (1 + p)
    assert b[(2, 1, 2, 2)] == g * p + g**2 * w
    assert not any(si4["closed_residuals"]) and not any(si4["linear_residuals"])


def test_cubic_at_jordan_values():
    sc = A.StructureConstants(
        A.FrobeniusData.jordan(Fraction(1), Fraction(1)),
        a={(1, 2, 2): Fraction(1), (2, 1, 2): Fraction(-2), (2, 2, 1): Fraction(1), (2, 2, 2): Fraction(0)},
    )
    A.b_from_a(sc)
    f1 = parse_expression("x1*x2^2 - 2*x2*x1*x2 + x2^2*x1", Alphabet(["x1", "x2"]))
    assert A.cubic_relation(sc) == f1


# -- arity five -----------------------------------------------------------------


def test_residual_counts(si5):
    F, sc, res = si5
    assert len(res) == 16
    assert len(A.si5_lines(sc)) == 80
    # the elimination leaves every non-residual line at zero
    assert all(not e for label, e in A.si5_lines(sc) if not label.startswith("m4v"))


def _reference(F, tag):
    lhs, rhs = RESIDUALS[tag]
    return A.parse_scalar(lhs, F) - A.parse_scalar(rhs, F)


def test_residuals_match_reference_after_normalization(si5):
    F, _, res = si5
    norm = {k: F(v) for k, v in NORMALIZATION.items()}
    for label, val in res:
        tag = label[4:8]
        assert val.subs(norm, F) == _reference(F, tag).subs(norm, F), tag


def test_residuals_independent_of_normalization(si5):
    F, _, res = si5
    same = [label[4:8] for label, val in res if val == _reference(F, label[4:8])]
    assert len(same) == 12
    assert set(RESIDUALS) - set(same) == {"1222", "2122", "2221", "2222"}


def test_first_residual(si5):
    F, _, res = si5
    g, t, v = F.gen("g"), F.gen("t"), F.gen("v1111")
    assert res[0][1] == (1 - g**4 * t) * v


def test_reductions_on_the_branch():
    s = A.case_split()
    FM = s["field"]
    g, p, M = FM.gen("g"), FM.gen("p"), FM.gen("M")
    rows = [[int(x.num.constant_value()) if x else 0 for x in r] for r in s["rows"][:3]]
    # v1112 + v1121, v1112 + v1211, v1121 + v1211
    assert rows == [[1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 1, 0]]
    rhs = s["rhs"][:3]
    assert rhs[0] == -g * M
    assert rhs[1] == (1 + p) * g * M
    assert A._reduce_mod_g7(rhs[2] - (g**4 - p) * g * M) == 0


def test_m_at_g_equal_one(si5):
    F, _, _ = si5
    FM, c21 = A._with_M(F)
    one = {"g": FM(1)}
    M = FM.gen("M")
    # c21 = M - c11 - c31 at g = 1, i.e. M = c11 + c21 + c31
    assert c21.subs(one, FM) == M - FM.gen("c11") - FM.gen("c31")


def test_branch_certificate():
    br = A.branch_certificate()
    assert br["determinant"] in (br["expected"], -br["expected"])
    F = br["determinant"].field
    g, t = F.gen("g"), F.gen("t")
    assert br["expected"] == (1 - g**4 * t) ** 5


def test_case_split():
    s = A.case_split()
    assert s["constant_matrix"] and s["rank"] == 4
    assert len(s["conditions"]) == 2
    FM = s["field"]
    for c in s["conditions"]:
        assert c.subs({"M": FM(0)}, FM) == 0


def test_first_case_forces_zero():
    from ncg.linalg import solve_affine

    s = A.case_split()
    FM = s["field"]
    rhs = [A._reduce_mod_g7(r.subs({"M": FM(0)}, FM)) for r in s["rhs"]]
    sol, pivots = solve_affine(s["rows"], rhs)
    assert len(pivots) == 4 and all(not x for x in sol)


def test_second_case_forces_g_and_p():
    survivors, _, _ = A.case2_roots()
    assert survivors == [(0, 1)]


def test_second_case_v_values():
    vals, FM = A.case2_v1112()
    M = FM.gen("M")
    assert vals["v1112"] == M / 2
    assert vals["v1121"] == -3 * M / 2
    assert vals["v1211"] == 3 * M / 2
    assert vals["v2111"] == -M / 2


# -- arity six -------------------------------------------------------------------


def test_arity_six_count_and_zero_tables():
    sc = A.StructureConstants(A.FrobeniusData.jordan(Fraction(1), Fraction(1)))
    eqs = A.gen_si6(sc)
    assert len(eqs) == 128
    assert all(not e for _, e in eqs)


def test_arity_six_is_bilinear():
    F, sc = A.symbolic_jordan_constants(substitute_t=True)
    G = ParamField(list(F.names) + ["a%d" % k for k in range(8)] + ["b%d" % k for k in range(24)])
    lift = lambda x: x.subs({}, G) if hasattr(x, "subs") else G(x)
    sc2 = A.StructureConstants(sc.fd)
    sc2.fd = A.FrobeniusData({k: lift(v) for k, v in sc.fd.R.items()}, lift(sc.fd.t))
    for k, key in enumerate(itertools.product((1, 2), repeat=3)):
        sc2.a[key] = G.gen("a%d" % k)
    for k, key in enumerate(itertools.product((1, 2), (1, 2, 3), (1, 2), (1, 2))):
        sc2.b[key] = G.gen("b%d" % k)
    for key in itertools.product((1, 2), repeat=4):
        sc2.v[key] = G.gen("v" + "".join(map(str, key)))
    table = {n for n in G.names if n[0] in "abv"}
    for _, e in A.gen_si6(sc2):
        for mono in e.num.terms:
            assert sum(k for v, k in mono if G.names[v] in table) == 2


# -- catalogued solutions --------------------------------------------------------------


@pytest.mark.parametrize("name", ["U", "O", "P", "Q", "V", "J"])
def test_solutions_verify(name):
    rep = A.verify_solution(name, samples=3, seed=1)
    assert rep.ok
    assert rep.counts["arity6"] == 128 and rep.counts["residual5"] == 16
    assert len(rep.specializations) == 3


@pytest.mark.parametrize(
    "name,key,delta", [("J", "v1121", "1"), ("U", "v2211", "1/3"), ("Q", "v2112", "j^2"), ("V", "v1212", "-1")]
)
def test_perturbed_solutions_fail(name, key, delta):
    sol = A.load_solutions()[name]
    bad = dict(sol, values=dict(sol["values"]))
    bad["values"][key] = f"({sol['values'][key]}) + {delta}"
    with pytest.raises((A.VerificationFailed, A.SystemInconsistent)):
        A.verify_solution(name, samples=1, sol=bad)


def test_cyclotomic_sign_of_cubic_is_forced():
    sol = A.load_solutions()["Q"]
    bad = dict(sol, values=dict(sol["values"], p="j^3"))
    with pytest.raises((A.VerificationFailed, A.SystemInconsistent)):
        A.verify_solution("Q", samples=1, sol=bad)


def test_solution_relations_jordan():
    p = A.relations_from_solution("J")
    f1, f2 = p.relations
    K = p.field
    expected_f2 = parse_expression(
        "x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3 + (1-c21)*x1*x2*x1*x2 + c21*x2*x1^2*x2"
        " + (c21-3)*x2*x1*x2*x1 + (2-c21)*x2^2*x1^2 - v2221*x2^2*x1*x2 + v2221*x2^3*x1 + v2222*x2^4",
        p.alphabet,
        K,
    )
    assert f2 == expected_f2


def test_solution_relations_cubics():
    o = A.relations_from_solution("O")
    assert o.relations[0] == parse_expression("x1*x2^2 - x2^2*x1 + w*x2^3", o.alphabet, o.field)
    u = A.relations_from_solution("U")
    assert u.relations[0] == parse_expression("x1*x2^2 - 2*x2*x1*x2 + x2^2*x1", u.alphabet, u.field)


def test_affine_forms():
    x = A.Affine.var("x")
    e = 3 * x + 2 - x
    assert e.lin == {"x": 2} and e.const == 2
    assert e.subs({"x": Fraction(1, 2)}) == 3
    with pytest.raises(ValueError):
        x * x
