"""Structure-constant systems of A-infinity Ext-algebras of type (12221).

The Ext-algebra has basis beta_1, beta_2 in degree one, gamma_1, gamma_2 in
degree two, xi_1, xi_2 in degree three and eta in degree four.  Its higher
multiplications are encoded by the tables

* ``a[i,j,k]``     m3(beta_i, beta_j, beta_k) = a_ijk gamma_1
* ``b[s,l,i,j]``   mixed m3 values landing in xi_s (l = 1, 2, 3 marks the
  slot of gamma_2)
* ``c[s,i]``       m3 values involving gamma_1 twice, landing in eta
* ``u[s,l,i,j,k]`` mixed m4 values involving gamma_1 (l = 1..4 its slot)
* ``v[i,j,k,h]``   m4(beta_i, beta_j, beta_k, beta_h) = v_ijkh gamma_2

together with the Frobenius data (R, t).  The Stasheff identities of arity
4, 5 and 6 become explicit polynomial equations in these constants; this
module generates them, eliminates the ``u`` table, certifies the necessary
conditions in the Jordan case and verifies the catalogued solutions.

Every table entry may be a field scalar, a rational function, or an
:class:`Affine` form when some constants are left as linear unknowns.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .freealg import Alphabet, NcPoly, Presentation, parse_expression
from .linalg import determinant, left_nullspace, nullspace, rank, rref, solve_affine
from .scalars import (
    QQ,
    QQ7,
    Cyclo7,
    MPoly,
    ParamField,
    RationalFunction,
    SpecializationSingular,
    base_field,
    specialize,
)

IDX = (1, 2)
ZERO = Fraction(0)
ONE = Fraction(1)


class SystemInconsistent(ArithmeticError):
    pass


class VerificationFailed(AssertionError):
    def __init__(self, message, equation=None):
        super().__init__(message)
        self.equation = equation


# ---------------------------------------------------------------------------
# affine forms in linear unknowns
# ---------------------------------------------------------------------------


class Affine:
    """const + sum coeff[x] * x for named unknowns x."""

    __slots__ = ("const", "lin")

    def __init__(self, const=ZERO, lin=None):
        self.const = const
        self.lin = {k: v for k, v in (lin or {}).items() if v}

    @classmethod
    def var(cls, name):
        return cls(ZERO, {name: ONE})

    def _lift(self, other):
        if isinstance(other, Affine):
            return other
        return Affine(other)

    def is_constant(self):
        return not self.lin

    def __bool__(self):
        return bool(self.const) or bool(self.lin)

    def __add__(self, other):
        o = self._lift(other)
        lin = dict(self.lin)
        for k, v in o.lin.items():
            lin[k] = lin.get(k, ZERO) + v
        return Affine(self.const + o.const, lin)

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, {k: -v for k, v in self.lin.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Affine):
            if other.is_constant():
                other = other.const
            elif self.is_constant():
                return other * self.const
            else:
                raise ValueError("product of two non-constant affine forms")
        if not other:
            return Affine()
        return Affine(self.const * other, {k: v * other for k, v in self.lin.items()})

    __rmul__ = __mul__

    def subs(self, values):
        total = self.const
        for k, v in self.lin.items():
            total = total + v * values[k]
        return total

    def __repr__(self):
        parts = [str(self.const)] + [f"({v})*{k}" for k, v in sorted(self.lin.items())]
        return "Affine(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# Frobenius data and tables
# ---------------------------------------------------------------------------


@dataclass
class FrobeniusData:
    R: Dict[Tuple[int, int], object]
    t: object

    @classmethod
    def jordan(cls, g, t):
        """R = [[-g, 1], [0, -g]]."""
        return cls({(1, 1): -g, (1, 2): ONE, (2, 1): ZERO, (2, 2): -g}, t)

    @classmethod
    def from_matrix(cls, rows, t):
        return cls({(i + 1, k + 1): rows[i][k] for i in range(2) for k in range(2)}, t)

    def r(self, i, k):
        return self.R[(i, k)]


@dataclass
class StructureConstants:
    fd: FrobeniusData
    a: Dict[tuple, object] = field(default_factory=dict)
    b: Dict[tuple, object] = field(default_factory=dict)
    c: Dict[tuple, object] = field(default_factory=dict)
    u: Dict[tuple, object] = field(default_factory=dict)
    v: Dict[tuple, object] = field(default_factory=dict)

    def A(self, i, j, k):
        return self.a.get((i, j, k), ZERO)

    def B(self, s, l, i, j):
        return self.b.get((s, l, i, j), ZERO)

    def C(self, s, i):
        return self.c.get((s, i), ZERO)

    def U(self, s, l, i, j, k):
        return self.u.get((s, l, i, j, k), ZERO)

    def V(self, i, j, k, h):
        return self.v.get((i, j, k, h), ZERO)


def _key(*idx):
    return "".join(str(i) for i in idx)


def a_names():
    return ["a" + _key(*k) for k in itertools.product(IDX, repeat=3)]


def v_names():
    return ["v" + _key(*k) for k in itertools.product(IDX, repeat=4)]


def c_names():
    return [f"c{s}{i}" for i in IDX for s in (1, 2, 3)]


# ---------------------------------------------------------------------------
# equation generators
# ---------------------------------------------------------------------------


def si4_linear(sc: StructureConstants):
    """Arity-4 identities linking a with the three b layers (32 equations)."""
    r, t = sc.fd.r, sc.fd.t
    out = []
    for i, j, k in itertools.product(IDX, repeat=3):
        tag = _key(i, j, k)
        out.append((f"m3b-gamma3[{tag}]", sc.A(i, j, k) - sc.B(i, 3, j, k)))
        out.append((f"m3b-gamma2[{tag}]", sc.B(i, 2, j, k) - sum((r(s, k) * sc.B(s, 3, i, j) for s in IDX), ZERO)))
        out.append((f"m3b-gamma1[{tag}]", sc.B(i, 1, j, k) - sum((r(s, k) * sc.B(s, 2, i, j) for s in IDX), ZERO)))
        out.append((f"m3b-close[{tag}]", -t * sc.A(i, j, k) - sum((r(s, k) * sc.B(s, 1, i, j) for s in IDX), ZERO)))
    return out


def si4_closed(sc: StructureConstants):
    """The eight equations on a alone: -t a_ijk = sum r_sk r_tj r_ui a_uts."""
    r, t = sc.fd.r, sc.fd.t
    out = []
    for i, j, k in itertools.product(IDX, repeat=3):
        total = ZERO
        for s, tt, uu in itertools.product(IDX, repeat=3):
            coef = r(s, k) * r(tt, j) * r(uu, i)
            if coef:
                total = total + coef * sc.A(uu, tt, s)
        out.append((f"m3-closed[{_key(i, j, k)}]", -t * sc.A(i, j, k) - total))
    return out


def gen_si4(fd: FrobeniusData, base=QQ):
    """Both arity-4 systems with symbolic a and b tables.

    Returns ``(field, linear_equations, closed_equations)``; ``fd`` may
    contain elements of a parameter field, whose parameters are kept.
    """
    names = list(a_names())
    bnames = ["b" + _key(s, l, i, j) for s in IDX for l in (1, 2, 3) for i in IDX for j in IDX]
    extra = []
    for val in list(fd.R.values()) + [fd.t]:
        if isinstance(val, RationalFunction):
            extra = [n for n in val.field.names if n not in extra]
            base = val.field.base
    F = ParamField(extra + names + bnames, base)
    lift = lambda x: x.subs({}, F) if isinstance(x, RationalFunction) else F(x)
    fdF = FrobeniusData({k: lift(v) for k, v in fd.R.items()}, lift(fd.t))
    sc = StructureConstants(fdF)
    for n in names:
        sc.a[tuple(int(ch) for ch in n[1:])] = F.gen(n)
    for n in bnames:
        sc.b[tuple(int(ch) for ch in n[1:])] = F.gen(n)
    return F, si4_linear(sc), si4_closed(sc)


def si5_lines(sc: StructureConstants):
    """The five families of arity-5 identities (80 equations)."""
    r, t = sc.fd.r, sc.fd.t
    A, C, U, V = sc.A, sc.C, sc.U, sc.V
    out = []
    for i, j, k, h in itertools.product(IDX, repeat=4):
        tag = _key(i, j, k, h)
        out.append((f"m4u4[{tag}]", A(i, j, k) * C(2, h) - A(j, k, h) * C(1, i) + t * V(i, j, k, h) - U(i, 4, j, k, h)))
        out.append(
            (
                f"m4u3[{tag}]",
                A(i, j, k) * C(3, h) + r(1, h) * U(1, 4, i, j, k) + r(2, h) * U(2, 4, i, j, k) - U(i, 3, j, k, h),
            )
        )
        out.append((f"m4u2[{tag}]", r(1, h) * U(1, 3, i, j, k) + r(2, h) * U(2, 3, i, j, k) - U(i, 2, j, k, h)))
        out.append(
            (
                f"m4u1[{tag}]",
                C(1, i) * A(j, k, h) - r(1, h) * U(1, 2, i, j, k) - r(2, h) * U(2, 2, i, j, k) + U(i, 1, j, k, h),
            )
        )
        out.append((f"m4v[{tag}]", _residual5(sc, i, j, k, h)))
    return out


def _residual5(sc, i, j, k, h):
    r = sc.fd.r
    A, C, U, V = sc.A, sc.C, sc.U, sc.V
    return (
        A(j, k, h) * C(2, i)
        - A(i, j, k) * C(3, h)
        - r(1, h) * U(1, 1, i, j, k)
        - r(2, h) * U(2, 1, i, j, k)
        + V(i, j, k, h)
    )


def eliminate_u(sc: StructureConstants):
    """Solve the first four arity-5 families for the u table, in place.

    Each family determines one layer u[., l, ., ., .] from the previous one
    (l = 4, 3, 2, 1 in turn), so every entry is defined exactly once.
    """
    r, t = sc.fd.r, sc.fd.t
    A, C, V = sc.A, sc.C, sc.V
    u = {}
    for i, j, k, h in itertools.product(IDX, repeat=4):
        u[(i, 4, j, k, h)] = A(i, j, k) * C(2, h) - A(j, k, h) * C(1, i) + t * V(i, j, k, h)
    for layer, prev in ((3, 4), (2, 3), (1, 2)):
        for i, j, k, h in itertools.product(IDX, repeat=4):
            val = r(1, h) * u[(1, prev, i, j, k)] + r(2, h) * u[(2, prev, i, j, k)]
            if layer == 3:
                val = A(i, j, k) * C(3, h) + val
            elif layer == 1:
                val = val - C(1, i) * A(j, k, h)
            key = (i, layer, j, k, h)
            if key in u:
                raise SystemInconsistent(f"u{_key(*key)} determined twice")
            u[key] = val
    sc.u = u
    return u


def si5_residuals(sc: StructureConstants):
    """The sixteen residual equations left after eliminating u."""
    return [(f"m4v[{_key(*idx)}]", _residual5(sc, *idx)) for idx in itertools.product(IDX, repeat=4)]


def si6(sc: StructureConstants):
    """The 128 arity-6 identities indexed by (i, j, k, h, m, n, s)."""
    A, B, U, V = sc.A, sc.B, sc.U, sc.V
    out = []
    for i, j, k, h, m, n, s in itertools.product(IDX, repeat=7):
        val = (
            -A(i, j, k) * U(s, 1, h, m, n)
            + A(j, k, h) * U(s, 2, i, m, n)
            - A(k, h, m) * U(s, 3, i, j, n)
            + A(h, m, n) * U(s, 4, i, j, k)
            + B(s, 1, m, n) * V(i, j, k, h)
            - B(s, 2, i, n) * V(j, k, h, m)
            + B(s, 3, i, j) * V(k, h, m, n)
        )
        out.append((f"m6[{_key(i, j, k, h, m, n, s)}]", val))
    return out


def gen_si6(sc: StructureConstants):
    return si6(sc)


# ---------------------------------------------------------------------------
# Jordan case: the cubic relation
# ---------------------------------------------------------------------------


def b_from_a(sc: StructureConstants):
    """Fill the b table from a using the first three linear families."""
    r = sc.fd.r
    b = {}
    for i, j, k in itertools.product(IDX, repeat=3):
        b[(i, 3, j, k)] = sc.A(i, j, k)
    for l, prev in ((2, 3), (1, 2)):
        for i, j, k in itertools.product(IDX, repeat=3):
            b[(i, l, j, k)] = sum((r(s, k) * b[(s, prev, i, j)] for s in IDX), ZERO)
    sc.b = b
    return b


def _linear_matrix(exprs, unknowns):
    """Coefficient matrix and constant column of expressions linear in unknowns."""
    rows, consts = [], []
    for e in exprs:
        coeffs, const = linear_coefficients(e, unknowns)
        rows.append([coeffs[x] for x in unknowns])
        consts.append(const)
    return rows, consts


def linear_coefficients(e, unknowns):
    """Split a polynomial rational function into linear parts in ``unknowns``.

    Raises ValueError when e is not affine in the unknowns or when a
    denominator involves them.
    """
    F = e.field
    idx = {F.ring.index[x]: x for x in unknowns}
    if any(v in idx for v in e.den.variables()):
        raise ValueError("an unknown occurs in a denominator")
    parts = {x: {} for x in unknowns}
    const = {}
    for mono, c in e.num.terms.items():
        hits = [(v, k) for v, k in mono if v in idx]
        if not hits:
            const[mono] = c
        elif len(hits) == 1 and hits[0][1] == 1:
            rest = tuple((v, k) for v, k in mono if v not in idx)
            parts[idx[hits[0][0]]][rest] = c
        else:
            raise ValueError("expression is not linear in the unknowns")
    den = RationalFunction._raw(F, e.den, _one(F))
    out = {x: RationalFunction(F, MPoly(F.ring, t)) / den for x, t in parts.items()}
    return out, RationalFunction(F, MPoly(F.ring, const)) / den


def _one(F):
    return MPoly.constant(F.ring, 1)


def jordan_reduce_si4():
    """Certificate that t = g^3 and the resulting shape of a, b and r3.

    Returns a dictionary with the closed system as a matrix over Q(g, t),
    its determinant, the kernel at t = g^3, the normalised cubic relation
    and the b table in terms of (g, p, w).
    """
    F = ParamField(["g", "t"])
    g, t = F.gen("g"), F.gen("t")
    fd = FrobeniusData.jordan(g, t)
    names = a_names()
    keys = [tuple(int(ch) for ch in n[1:]) for n in names]
    rows = [[None] * 8 for _ in range(8)]
    for col, key in enumerate(keys):
        sc = StructureConstants(fd, a={key: F(1)})
        for row, (_, val) in enumerate(si4_closed(sc)):
            rows[row][col] = F(val)
    det = determinant(rows)
    # at t = g^3
    G = ParamField(["g"])
    gg = G.gen("g")
    sub = [[x.subs({"t": gg**3}, G) for x in row] for row in rows]
    kernel = nullspace(sub)
    # normalised relation
    P = ParamField(["g", "p", "w"])
    g3, p, w = P.gens()
    a = {(1, 2, 2): P(1), (2, 1, 2): -(1 + p), (2, 2, 1): p, (2, 2, 2): w}
    sc = StructureConstants(FrobeniusData.jordan(g3, g3**3), a=a)
    b_from_a(sc)
    alphabet = Alphabet(["x1", "x2"])
    r3 = cubic_relation(sc, alphabet)
    return {
        "matrix": rows,
        "determinant": det,
        "kernel": kernel,
        "kernel_rank": len(kernel),
        "names": names,
        "r3": r3,
        "b": {k: v for k, v in sc.b.items() if v},
        "closed_residuals": [val for _, val in si4_closed(sc)],
        "linear_residuals": [val for _, val in si4_linear(sc)],
    }


def cubic_relation(sc: StructureConstants, alphabet=None):
    alphabet = alphabet or Alphabet(["x1", "x2"])
    terms = {}
    for key in itertools.product(IDX, repeat=3):
        c = sc.A(*key)
        if c:
            terms[tuple(i - 1 for i in key)] = c
    return NcPoly(alphabet, terms)


def quartic_relation(sc: StructureConstants, alphabet=None):
    alphabet = alphabet or Alphabet(["x1", "x2"])
    terms = {}
    for key in itertools.product(IDX, repeat=4):
        c = sc.V(*key)
        if c:
            terms[tuple(i - 1 for i in key)] = c
    return NcPoly(alphabet, terms)


# ---------------------------------------------------------------------------
# Jordan case: the quartic relation
# ---------------------------------------------------------------------------

SI5_PARAMS = ["g", "t", "p", "w"] + ["c11", "c21", "c31", "c12", "c22", "c32"] + v_names()


def symbolic_jordan_constants(substitute_t=False):
    """Tables over Q(g, t, p, w, c, v) with a normalised and b solved."""
    F = ParamField(SI5_PARAMS)
    g, t, p, w = (F.gen(n) for n in ("g", "t", "p", "w"))
    if substitute_t:
        t = g**3
    a = {(1, 2, 2): F(1), (2, 1, 2): -(1 + p), (2, 2, 1): p, (2, 2, 2): w}
    sc = StructureConstants(FrobeniusData.jordan(g, t), a=a)
    b_from_a(sc)
    for n in c_names():
        sc.c[(int(n[1]), int(n[2]))] = F.gen(n)
    for n in v_names():
        sc.v[tuple(int(ch) for ch in n[1:])] = F.gen(n)
    return F, sc


def gen_si5(substitute_t=False):
    """Eliminate u symbolically; return (field, tables, residuals).

    The residuals are listed in lexicographic order of (i, j, k, h) and
    contain M = g^4 c11 + c21 + g^3 c31 implicitly.
    """
    F, sc = symbolic_jordan_constants(substitute_t)
    eliminate_u(sc)
    for label, val in si5_lines(sc):
        if not label.startswith("m4v") and val:
            raise SystemInconsistent(f"{label} does not vanish after elimination")
    return F, sc, si5_residuals(sc)


def _with_M(F):
    """Field where c21 is replaced by M = g^4 c11 + c21 + g^3 c31."""
    names = [("M" if n == "c21" else n) for n in F.names]
    FM = ParamField(names, F.base)
    g = FM.gen("g")
    c21 = FM.gen("M") - g**4 * FM.gen("c11") - g**3 * FM.gen("c31")
    return FM, c21


def to_M(e, F):
    FM, c21 = _with_M(F)
    mapping = {n: (c21 if n == "c21" else FM.gen(n)) for n in F.names}
    return e.subs(mapping, FM), FM


def branch_certificate():
    """Certificate that 1 - g^4 t must vanish.

    With the normalisation v1122 = 0, the residual equations with indices
    1111, 1112, 1121, 1122, 1211 and 1212 are homogeneous linear in
    (v1111, v1112, v1121, v1211, v1212, M).  Their determinant is returned
    together with its factorisation check: when it is nonzero every
    v_1jkh vanishes.
    """
    F, sc, res = gen_si5()
    wanted = ["1111", "1112", "1121", "1122", "1211", "1212"]
    by_tag = {label[4:8]: val for label, val in res}
    unknowns = ["v1111", "v1112", "v1121", "v1211", "v1212", "M"]
    exprs = []
    for tag in wanted:
        e, FM = to_M(by_tag[tag], F)
        e = e.subs({"v1122": 0}, FM)
        exprs.append(e)
    rows, consts = _linear_matrix(exprs, unknowns)
    det = determinant(rows)
    g, t = FM.gen("g"), FM.gen("t")
    return {
        "unknowns": unknowns,
        "equations": wanted,
        "matrix": rows,
        "constants": consts,
        "determinant": det,
        "expected": (1 - g**4 * t) ** 5,
        "field": FM,
    }


def _reduce_mod_g7(e, var="g"):
    """Reduce exponents of ``var`` modulo 7 in a polynomial rational function."""
    F = e.field
    if not e.den.is_constant():
        raise ValueError("reduction mod g^7 - 1 needs a polynomial")
    gi = F.ring.index[var]
    terms = {}
    for mono, c in e.num.terms.items():
        new = []
        for v, k in mono:
            if v == gi:
                k %= 7
            if k:
                new.append((v, k))
        new = tuple(new)
        s = terms.get(new, 0) + c
        if s:
            terms[new] = s
        else:
            terms.pop(new, None)
    return RationalFunction(F, MPoly(F.ring, terms)) / RationalFunction(F, e.den)


def case_split():
    """The two consistency branches under g^4 t = 1 and g^7 = 1.

    Six residual equations are linear in (v1112, v1121, v1211, v2111) with
    a constant coefficient matrix once each is divided by its unit leading
    power of g.  The two left-kernel combinations give the consistency
    conditions, which factor through M.
    """
    F, sc, res = gen_si5()
    by_tag = {label[4:8]: val for label, val in res}
    FM, _ = _with_M(F)
    g = FM.gen("g")
    tags = ["1122", "1212", "1221", "2112", "2121", "2211"]
    unknowns = ["v1112", "v1121", "v1211", "v2111"]
    normalization = {"v1111": 0, "v1122": 0, "v1221": 0, "v1222": 0, "v2122": 0}
    exprs = []
    for tag in tags:
        e, _ = to_M(by_tag[tag], F)
        e = e.subs(dict(normalization, t=g**3), FM)
        e = _reduce_mod_g7(e)
        exprs.append(e)
    rows, consts = _linear_matrix(exprs, unknowns)
    # divide by a unit power of g so that the rows become constant
    normed_rows, normed_consts = [], []
    for row, const in zip(rows, consts):
        lead = next(x for x in row if x)
        if not (lead.is_polynomial() and len(lead.num.terms) == 1):
            raise ValueError("leading coefficient is not a monomial")
        (mono, coef), = lead.num.terms.items()
        k = dict(mono).get(FM.ring.index["g"], 0)
        unit = g ** ((7 - k) % 7) * (1 / coef)
        normed_rows.append([_reduce_mod_g7(x * unit) for x in row])
        normed_consts.append(_reduce_mod_g7(const * unit))
    const_matrix = all(x.is_constant() for row in normed_rows for x in row)
    lk = left_nullspace(normed_rows)
    conditions = []
    for vec in lk:
        comb = sum((c * k for c, k in zip(vec, normed_consts)), FM(0))
        conditions.append(_reduce_mod_g7(comb))
    return {
        "equations": tags,
        "unknowns": unknowns,
        "rows": normed_rows,
        "rhs": [-c for c in normed_consts],
        "constant_matrix": const_matrix,
        "rank": rank(normed_rows),
        "conditions": conditions,
        "field": FM,
    }


def case2_roots():
    """Evaluate the consistency conditions at every 7th root of unity.

    For M != 0 each condition divided by g M is linear in p; the first
    forces p = 1 unless 1 + g^4 = 0, and the second then forces g^4 = 1.
    Returns the surviving (k, p) with g = j^k.
    """
    info = case_split()
    FM = info["field"]
    conds = []
    for c in info["conditions"]:
        q = c / (FM.gen("g") * FM.gen("M"))
        conds.append(q)
    survivors = []
    details = []
    for k in range(7):
        gval = Cyclo7.gen() ** k
        P = ParamField(["p"], QQ7)
        vals = []
        for q in conds:
            rest = {n: 0 for n in FM.names if n not in ("g", "p")}
            vals.append(q.subs(dict(rest, g=gval), P))
        # solve the linear conditions in p
        rows = []
        rhs = []
        for val in vals:
            coeffs, const = linear_coefficients(val, ["p"])
            rows.append([coeffs["p"]])
            rhs.append(-const)
        sol, _ = solve_affine(rows, rhs)
        details.append({"k": k, "solution": sol})
        if sol is not None:
            survivors.append((k, sol[0]))
    return survivors, details, conds


def case2_v1112():
    """Solve the case-2 system at g = p = 1; v1112 as a multiple of M."""
    info = case_split()
    FM = info["field"]
    rows = [[x.subs({"g": 1, "p": 1}, FM) for x in row] for row in info["rows"]]
    rhs = [x.subs({"g": 1, "p": 1}, FM) for x in info["rhs"]]
    sol, _ = solve_affine(rows, rhs)
    return dict(zip(info["unknowns"], sol)), FM


# ---------------------------------------------------------------------------
# the solution catalogue
# ---------------------------------------------------------------------------


def load_solutions():
    text = resources.files("ncg").joinpath("data/solutions.json").read_text(encoding="utf-8")
    return json.loads(text)


def parse_scalar(text, field):
    alphabet = Alphabet(["_"])
    f = parse_expression(str(text), alphabet, field)
    if not f.is_homogeneous() or (f and f.degree() != 0):
        raise ValueError(f"{text!r} is not a scalar")
    return f.coeff(())


@dataclass
class SolutionReport:
    name: str
    field: object
    counts: Dict[str, int]
    c_solution: Dict[str, object]
    undetermined: List[str]
    max_residual: object
    specializations: List[Dict[str, str]]
    ok: bool
    r3: Optional[NcPoly] = None
    r4: Optional[NcPoly] = None


def solution_constants(name, sol=None, unknown_c=True):
    """Tables for a catalogued solution.

    Returns ``(F, sc, unknowns)`` where F is the parameter field of the free
    parameters and the c entries not fixed by the solution are
    :class:`Affine` unknowns (when ``unknown_c``).
    """
    sol = sol or load_solutions()[name]
    base = base_field(sol["field"])
    free = list(sol["free"])
    F = ParamField(free, base) if free else ParamField(["_unused"], base)
    vals = {k: F(parse_scalar(v, F)) for k, v in sol["values"].items()}
    g, p, w = vals["g"], vals["p"], vals["w"]
    t = g**3
    if g**4 * t != 1:
        raise VerificationFailed("solution violates g^4 t = 1")
    a = {(1, 2, 2): F(1), (2, 1, 2): -(1 + p), (2, 2, 1): p, (2, 2, 2): w}
    sc = StructureConstants(FrobeniusData.jordan(g, t), a=a)
    b_from_a(sc)
    for n in v_names():
        key = tuple(int(ch) for ch in n[1:])
        sc.v[key] = vals.get(n, F(0))
    unknowns = []
    for n in c_names():
        key = (int(n[1]), int(n[2]))
        if n in free:
            sc.c[key] = F.gen(n)
        elif unknown_c:
            sc.c[key] = Affine.var(n)
            unknowns.append(n)
    return F, sc, unknowns


def _affine_system(eqs, unknowns):
    rows, rhs = [], []
    for _, e in eqs:
        if isinstance(e, Affine):
            rows.append([e.lin.get(x, ZERO) for x in unknowns])
            rhs.append(-e.const)
        else:
            rows.append([ZERO] * len(unknowns))
            rhs.append(-e)
    return rows, rhs


def verify_solution(name, samples=3, seed=0, sol=None) -> SolutionReport:
    """Check a catalogued solution against every structure equation.

    The c constants not fixed by the solution enter linearly; they are
    solved for, substituted back, and all residuals must vanish
    identically.  The check is repeated at ``samples`` random rational
    values of the free parameters by recomputing every table numerically.
    """
    sol = sol or load_solutions()[name]
    F, sc, unknowns = solution_constants(name, sol)
    eliminate_u(sc)
    eq4 = si4_linear(sc) + si4_closed(sc)
    eq5 = si5_residuals(sc)
    eq6 = si6(sc)
    all_eqs = eq4 + eq5 + eq6
    rows, rhs = _affine_system(all_eqs, unknowns)
    if unknowns:
        csol, pivots = solve_affine(rows, rhs)
    else:
        csol, pivots = ([] if not any(rhs) else None), []
    if csol is None:
        raise VerificationFailed(f"{name}: the structure equations are inconsistent")
    undetermined = [unknowns[c] for c in range(len(unknowns)) if c not in pivots]
    G = ParamField(list(F.names) + undetermined, F.base) if undetermined else F
    values = _general_solution(rows, rhs, unknowns, F, G) if unknowns else {}
    F2, sc2, _ = solution_constants(name, sol, unknown_c=False)
    sc2 = _rebase(sc2, F2, G)
    for n in unknowns:
        sc2.c[(int(n[1]), int(n[2]))] = values[n]
    eliminate_u(sc2)
    lines5 = si5_lines(sc2)
    counts = {"linear4": 0, "closed4": 0, "residual5": 0, "lines5": 0, "arity6": 0}
    worst = ZERO
    groups = [
        ("linear4", si4_linear(sc2)),
        ("closed4", si4_closed(sc2)),
        ("residual5", si5_residuals(sc2)),
        ("lines5", lines5),
        ("arity6", si6(sc2)),
    ]
    for key, eqs in groups:
        for label, e in eqs:
            counts[key] += 1
            if e:
                raise VerificationFailed(f"{name}: nonzero residual {e} in {label}", label)
    spec_reports = []
    rng = random.Random(seed)
    free_names = [n for n in G.names if n != "_unused"]
    for _ in range(samples):
        for _attempt in range(20):
            point = {n: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for n in free_names}
            try:
                _numeric_check(name, sol, values, point)
                break
            except SpecializationSingular:
                continue
        else:
            raise VerificationFailed(f"{name}: no regular specialization found")
        spec_reports.append({k: str(v) for k, v in point.items()})
    r3 = cubic_relation(sc2)
    r4 = quartic_relation(sc2)
    return SolutionReport(
        name=name,
        field=G,
        counts=counts,
        c_solution={n: values[n] for n in unknowns},
        undetermined=undetermined,
        max_residual=worst,
        specializations=spec_reports,
        ok=True,
        r3=r3,
        r4=r4,
    )


def _lift(x, F, G):
    if isinstance(x, RationalFunction):
        return x.subs({}, G) if G is not F else x
    return G(x)


def _rebase(sc, F, G):
    if F is G or F == G:
        return sc
    conv = lambda x: _lift(x, F, G) if isinstance(x, RationalFunction) else x
    out = StructureConstants(
        FrobeniusData({k: conv(v) for k, v in sc.fd.R.items()}, conv(sc.fd.t)),
        a={k: conv(v) for k, v in sc.a.items()},
        b={k: conv(v) for k, v in sc.b.items()},
        c={k: conv(v) for k, v in sc.c.items() if not isinstance(v, Affine)},
        v={k: conv(v) for k, v in sc.v.items()},
    )
    return out


def _general_solution(rows, rhs, unknowns, F, G):
    """Pivot unknowns as affine functions of the free ones, over G."""
    ncols = len(unknowns)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    free = [c for c in range(ncols) if c not in pivots]
    values = {unknowns[c]: G.gen(unknowns[c]) for c in free}
    for r, pc in enumerate(pivots):
        val = _lift(m[r][ncols], F, G)
        for c in free:
            if m[r][c]:
                val = val - _lift(m[r][c], F, G) * G.gen(unknowns[c])
        values[unknowns[pc]] = val
    return values


def _numeric_check(name, sol, values, point):
    """Recompute every table at a rational point and test all equations."""
    base = base_field(sol["field"])
    vals = {}
    for k, v in sol["values"].items():
        F = ParamField(list(sol["free"]) or ["_unused"], base)
        vals[k] = specialize(F(parse_scalar(v, F)), {n: point[n] for n in sol["free"]})
    g, p, w = vals["g"], vals["p"], vals["w"]
    t = g**3
    one = Fraction(1)
    a = {(1, 2, 2): one, (2, 1, 2): -(1 + p), (2, 2, 1): p, (2, 2, 2): w}
    sc = StructureConstants(FrobeniusData.jordan(g, t), a=a)
    b_from_a(sc)
    for n in v_names():
        sc.v[tuple(int(ch) for ch in n[1:])] = vals.get(n, Fraction(0))
    for n in c_names():
        key = (int(n[1]), int(n[2]))
        if n in sol["free"]:
            sc.c[key] = point[n]
        else:
            sc.c[key] = specialize(values[n], point) if isinstance(values[n], RationalFunction) else values[n]
    eliminate_u(sc)
    for label, e in si4_linear(sc) + si4_closed(sc) + si5_lines(sc) + si6(sc):
        if e:
            raise VerificationFailed(f"{name}: residual {e} in {label} at {point}", label)
    return True


def relations_from_solution(name, sol=None) -> Presentation:
    """The cubic and quartic relations of a catalogued solution."""
    sol = sol or load_solutions()[name]
    F, sc, _ = solution_constants(name, sol, unknown_c=False)
    alphabet = Alphabet(["x1", "x2"])
    r3 = cubic_relation(sc, alphabet)
    r4 = quartic_relation(sc, alphabet)
    free = list(sol["free"])
    fld = F if free else F.base
    if not free:
        r3 = r3.map_coeffs(lambda c: c.constant_value() if isinstance(c, RationalFunction) else c)
        r4 = r4.map_coeffs(lambda c: c.constant_value() if isinstance(c, RationalFunction) else c)
    return Presentation(alphabet, [r3, r4], fld, free, name)
