"""Exact coefficient fields.

Three towers are supported:

* ``QQ`` -- rationals, realised by :class:`fractions.Fraction`;
* ``QQ7`` -- the cyclotomic field Q(j) with j a primitive 7th root of unity,
  elements stored as reduced polynomials of degree <= 5 in ``j``;
* :class:`ParamField` -- fractions of sparse multivariate polynomials
  in named parameters over either of the above.

Values are immutable.  Python's numeric protocol is used throughout, so
``Fraction``, :class:`Cyclo7` and :class:`RationalFunction` values mix
freely whenever one embeds in the other.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class DivisionByZero(ZeroDivisionError):
    pass


class FieldMismatch(TypeError):
    pass


class SpecializationSingular(ZeroDivisionError):
    pass


def _q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# Q(zeta_7)
# ---------------------------------------------------------------------------

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _cyclo_reduce(coeffs):
    """Reduce an arbitrary coefficient list modulo j^7 = 1 and Phi_7(j) = 0."""
    folded = [_ZERO] * 7
    for k, c in enumerate(coeffs):
        if c:
            folded[k % 7] += c
    top = folded[6]
    if top:
        return tuple(folded[i] - top for i in range(6))
    return tuple(folded[:6])


class Cyclo7:
    """Element c0 + c1*j + ... + c5*j^5 of Q(j), j^6 + ... + j + 1 = 0."""

    __slots__ = ("c",)

    def __init__(self, coeffs=(0,)):
        if isinstance(coeffs, Cyclo7):
            self.c = coeffs.c
            return
        if _is_rational(coeffs):
            coeffs = (coeffs,)
        self.c = _cyclo_reduce([_q(x) for x in coeffs])

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def gen(cls):
        return cls((0, 1))

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, Cyclo7):
            return self.c == other.c
        if _is_rational(other):
            return self.is_rational() and self.c[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(("Cyclo7", self.c))

    def _coerce(self, other):
        if isinstance(other, Cyclo7):
            return other
        if _is_rational(other):
            return Cyclo7._raw((_q(other),) + (_ZERO,) * 5)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo7._raw(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo7._raw(tuple(-a for a in self.c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo7._raw(tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_rational(other):
            q = _q(other)
            return Cyclo7._raw(tuple(a * q for a in self.c))
        if not isinstance(other, Cyclo7):
            return NotImplemented
        prod = [_ZERO] * 11
        for i, a in enumerate(self.c):
            if a:
                for k, b in enumerate(other.c):
                    if b:
                        prod[i + k] += a * b
        return Cyclo7._raw(_cyclo_reduce(prod))

    __rmul__ = __mul__

    def conjugate(self, k):
        """Image under the automorphism j -> j^k (k coprime to 7)."""
        arr = [_ZERO] * 7
        for i, a in enumerate(self.c):
            arr[(i * k) % 7] += a
        return Cyclo7._raw(_cyclo_reduce(arr))

    def norm(self):
        prod = self
        for k in range(2, 7):
            prod = prod * self.conjugate(k)
        return prod.rational()

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta7)")
        if self.is_rational():
            return Cyclo7(1 / self.c[0])
        others = self.conjugate(2)
        for k in range(3, 7):
            others = others * self.conjugate(k)
        n = (self * others).rational()
        return others * (1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo7(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / 7)
        return sum(complex(float(a)) * z**i for i, a in enumerate(self.c))

    def __repr__(self):
        return f"Cyclo7({str(self)!r})"

    def __str__(self):
        return _format_univariate(self.c, "j")


def _format_coeff_mono(c, mono):
    """Render c*mono with mono a string ('' for the constant)."""
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join_terms(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def _format_univariate(coeffs, var):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        parts.append(_format_coeff_mono(c, mono))
    return _join_terms(parts)


class RationalField:
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Cyclo7):
            return x.rational()
        return _q(x)

    def contains(self, x):
        return _is_rational(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class CyclotomicField7:
    name = "Qzeta7"
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def gen(self):
        return Cyclo7.gen()

    def __call__(self, x):
        if isinstance(x, Cyclo7):
            return x
        return Cyclo7(_q(x))

    def contains(self, x):
        return _is_rational(x) or isinstance(x, Cyclo7)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField7)

    def __hash__(self):
        return hash("Qzeta7")

    def __repr__(self):
        return "QQ7"


QQ = RationalField()
QQ7 = CyclotomicField7()


def base_field(name):
    if name in ("Q", "QQ"):
        return QQ
    if name in ("Qzeta7", "QQ7"):
        return QQ7
    raise ValueError(f"unknown field {name!r}")


def _scalar_simplify(x):
    """Demote a base-field scalar to Fraction when it is rational."""
    if isinstance(x, Cyclo7) and x.is_rational():
        return Fraction(x.c[0])
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------
#
# A monomial is a tuple of (variable index, exponent) pairs sorted by index;
# the empty tuple is 1.  Ordering is graded-lex with lower indices larger.


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_div(a, b):
    """a / b as a monomial, or None when b does not divide a."""
    d = dict(a)
    for v, e in b:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r:
            d[v] = r
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_deg(m):
    return sum(e for _, e in m)


def mono_key(m):
    return (mono_deg(m), tuple((-v, e) for v, e in m))


class PolyRing:
    """Polynomial ring over ``base`` in the given ordered variable names."""

    def __init__(self, names, base=QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.base = base
        self.index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.names, self.base))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.base!r})"

    def gen(self, name):
        return MPoly(self, {((self.index[name], 1),): Fraction(1)})

    def gens(self):
        return [self.gen(n) for n in self.names]

    def __call__(self, x):
        if isinstance(x, MPoly):
            if x.ring != self:
                raise FieldMismatch(f"{x.ring!r} vs {self!r}")
            return x
        if not self.base.contains(x):
            raise FieldMismatch(f"{x!r} not in {self.base!r}")
        return MPoly.constant(self, x)


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, ring, c):
        c = _scalar_simplify(c)
        return cls._raw(ring, {(): c} if c else {})

    # -- predicates ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(()) == 1

    def variables(self):
        vs = set()
        for m in self.terms:
            vs.update(v for v, _ in m)
        return vs

    def degree_in(self, var):
        return max((dict(m).get(var, 0) for m in self.terms), default=0)

    def total_degree(self):
        return max((mono_deg(m) for m in self.terms), default=-1)

    def leading(self):
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def lc(self):
        return self.leading()[1]

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise FieldMismatch(f"{other.ring!r} vs {self.ring!r}")
            return other
        if _is_rational(other) or isinstance(other, Cyclo7):
            if isinstance(other, Cyclo7) and self.ring.base != QQ7:
                if not other.is_rational():
                    raise FieldMismatch("Q(zeta7) scalar in a Q-polynomial ring")
            return MPoly.constant(self.ring, other)
        return None

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RationalFunction) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        t = dict(self.terms)
        for m, c in o.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = _scalar_simplify(s + c)
                if s:
                    t[m] = s
                else:
                    del t[m]
        return MPoly._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = _scalar_simplify(c)
        if not c:
            return MPoly._raw(self.ring, {})
        if c == 1:
            return self
        t = {}
        for m, a in self.terms.items():
            p = _scalar_simplify(a * c)
            if p:
                t[m] = p
        return MPoly._raw(self.ring, t)

    def __mul__(self, other):
        if _is_rational(other) or isinstance(other, Cyclo7):
            self._coerce(other)
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and () in o.terms:
            return self.scale(o.terms[()])
        if len(self.terms) == 1 and () in self.terms:
            return o.scale(self.terms[()])
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = t.get(m)
                p = c1 * c2
                t[m] = p if s is None else s + p
        return MPoly._raw(
            self.ring,
            {m: _scalar_simplify(c) for m, c in t.items() if c},
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if _is_rational(other) or isinstance(other, Cyclo7):
            if not other:
                raise DivisionByZero("polynomial division by zero")
            return self.scale(1 / other if _is_rational(other) else other.inverse())
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_constant():
            return self / o.constant_value()
        return self.exact_div(o)

    def monic(self):
        if not self.terms:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return self.scale(1 / lc if _is_rational(lc) else lc.inverse())

    def exact_div(self, other):
        """Quotient of an exact division; raises ValueError otherwise."""
        if not other.terms:
            raise DivisionByZero("polynomial division by zero")
        lm_b, lc_b = other.leading()
        inv = 1 / lc_b if _is_rational(lc_b) else lc_b.inverse()
        q = {}
        r = self
        while r.terms:
            lm_r, lc_r = r.leading()
            m = mono_div(lm_r, lm_b)
            if m is None:
                raise ValueError("inexact polynomial division")
            c = _scalar_simplify(lc_r * inv)
            q[m] = c
            r = r - other * MPoly._raw(self.ring, {m: c})
        return MPoly._raw(self.ring, q)

    def divides(self, other):
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    # -- substitution ------------------------------------------------------
    def evaluate(self, values, one=None):
        """Substitute ``values`` (variable index -> value) for variables.

        Variables without a value are kept as generators of this ring.  The
        arithmetic is that of the supplied values, so polynomials, rational
        functions or plain scalars may be substituted.
        """
        total = None
        cache = {}
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                if v in values:
                    key = (v, e)
                    val = cache.get(key)
                    if val is None:
                        val = values[v] ** e
                        cache[key] = val
                else:
                    val = MPoly._raw(self.ring, {((v, e),): Fraction(1)})
                term = term * val
            total = term if total is None else total + term
        if total is None:
            return one if one is not None else Fraction(0)
        return total

    def subs(self, mapping):
        """Substitute by variable name; unmapped variables stay symbolic."""
        values = {self.ring.index[n]: v for n, v in mapping.items() if n in self.ring.index}
        result = self.evaluate(values, one=MPoly._raw(self.ring, {}))
        if not isinstance(result, (MPoly, RationalFunction)):
            result = MPoly.constant(self.ring, result)
        return result

    # -- univariate view ---------------------------------------------------
    def as_univariate(self, var):
        """Return {exponent: coefficient MPoly free of ``var``}."""
        out = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, k in m:
                if v == var:
                    e = k
                else:
                    rest.append((v, k))
            out.setdefault(e, {})[tuple(rest)] = c
        return {e: MPoly._raw(self.ring, t) for e, t in out.items()}

    @classmethod
    def from_univariate(cls, ring, var, coeffs):
        total = MPoly._raw(ring, {})
        for e, c in coeffs.items():
            if e:
                total = total + c * MPoly._raw(ring, {((var, e),): Fraction(1)})
            else:
                total = total + c
        return total

    # -- printing ------------------------------------------------------------
    def __str__(self):
        return self.format()

    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=mono_key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                self.ring.names[v] if e == 1 else f"{self.ring.names[v]}^{e}"
                for v, e in m
            )
            if isinstance(c, Cyclo7):
                cs = str(c)
                if mono:
                    if c == 1:
                        parts.append(mono)
                        continue
                    if c == -1:
                        parts.append("-" + mono)
                        continue
                    parts.append(f"({cs})*{mono}")
                else:
                    parts.append(cs if " " not in cs else f"({cs})")
            else:
                parts.append(_format_coeff_mono(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"MPoly({self.format()!r})"


# ---------------------------------------------------------------------------
# gcd over K[x1..xn] (recursive primitive PRS)
# ---------------------------------------------------------------------------


def _uni_deg(A):
    return max(A) if A else -1


def _prem(A, B):
    db = _uni_deg(B)
    lb = B[db]
    R = dict(A)
    while R and _uni_deg(R) >= db:
        dr = _uni_deg(R)
        lr = R[dr]
        shift = dr - db
        R = {e: lb * c for e, c in R.items()}
        for e, c in B.items():
            k = e + shift
            R[k] = R[k] - lr * c if k in R else -(lr * c)
        R = {e: c for e, c in R.items() if c}
    return R


def _content(A):
    g = None
    for c in A.values():
        g = c if g is None else poly_gcd(g, c)
        if g.is_constant():
            return MPoly.constant(g.ring, 1)
    return g


def _primitive(A):
    c = _content(A)
    if c.is_one():
        return A
    return {e: v.exact_div(c) for e, v in A.items()}


def poly_gcd(f, g):
    """Monic greatest common divisor of two polynomials of one ring."""
    ring = f.ring
    if not f.terms:
        return g.monic()
    if not g.terms:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MPoly.constant(ring, 1)
    if len(f.terms) == 1 and len(g.terms) == 1:
        (mf,), (mg,) = f.terms, g.terms
        df, dg = dict(mf), dict(mg)
        m = tuple(sorted((v, min(e, dg[v])) for v, e in df.items() if v in dg))
        return MPoly._raw(ring, {m: Fraction(1)})
    vf, vg = f.variables(), g.variables()
    for v in sorted(vf | vg):
        if v not in vg:
            return poly_gcd(_content(f.as_univariate(v)), g)
        if v not in vf:
            return poly_gcd(f, _content(g.as_univariate(v)))
    x = min(vf)
    F, G = f.as_univariate(x), g.as_univariate(x)
    c = poly_gcd(_content(F), _content(G))
    A, B = _primitive(F), _primitive(G)
    if _uni_deg(A) < _uni_deg(B):
        A, B = B, A
    while B and _uni_deg(B) > 0:
        R = _prem(A, B)
        A, B = B, (_primitive(R) if R else R)
    if B:
        h = MPoly.constant(ring, 1)
    else:
        h = MPoly.from_univariate(ring, x, _primitive(A))
    return (c * h).monic()


# ---------------------------------------------------------------------------
# parameter fields
# ---------------------------------------------------------------------------


class ParamField:
    """Field of rational functions in named parameters over QQ or QQ7."""

    def __init__(self, names, base=QQ):
        self.ring = PolyRing(names, base)

    @property
    def names(self):
        return self.ring.names

    @property
    def base(self):
        return self.ring.base

    @property
    def name(self):
        return f"{self.base.name}({','.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, ParamField) and self.ring == other.ring

    def __hash__(self):
        return hash(("ParamField", self.ring))

    def __repr__(self):
        return f"ParamField({list(self.names)}, {self.base!r})"

    @property
    def zero(self):
        return RationalFunction._raw(self, MPoly._raw(self.ring, {}), _one_poly(self.ring))

    @property
    def one(self):
        return self(1)

    def gen(self, name):
        return RationalFunction._raw(self, self.ring.gen(name), _one_poly(self.ring))

    def gens(self):
        return [self.gen(n) for n in self.names]

    def contains(self, x):
        if isinstance(x, RationalFunction):
            return x.field == self
        return self.base.contains(x)

    def __call__(self, x, den=None):
        if isinstance(x, RationalFunction):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} vs {self!r}")
            out = x
        elif isinstance(x, MPoly):
            out = RationalFunction._raw(self, self.ring(x), _one_poly(self.ring))
        elif isinstance(x, str):
            out = self.gen(x)
        else:
            if not self.base.contains(x):
                raise FieldMismatch(f"{x!r} not in {self!r}")
            out = RationalFunction._raw(self, MPoly.constant(self.ring, x), _one_poly(self.ring))
        if den is not None:
            out = out / self(den)
        return out


def _one_poly(ring):
    return MPoly._raw(ring, {(): Fraction(1)})


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic under graded-lex."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None):
        ring = field.ring
        num = ring(num) if not isinstance(num, MPoly) else num
        den = _one_poly(ring) if den is None else (ring(den) if not isinstance(den, MPoly) else den)
        n, d = _normalize(num, den)
        self.field, self.num, self.den = field, n, d

    @classmethod
    def _raw(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        return obj

    def __bool__(self):
        return bool(self.num.terms)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def is_polynomial(self):
        return self.den.is_one()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other
        if _is_rational(other):
            return RationalFunction._raw(self.field, MPoly.constant(self.field.ring, other), _one_poly(self.field.ring))
        if isinstance(other, Cyclo7):
            if self.field.base != QQ7 and not other.is_rational():
                raise FieldMismatch("Q(zeta7) scalar in a parameter field over Q")
            return RationalFunction._raw(self.field, MPoly.constant(self.field.ring, other), _one_poly(self.field.ring))
        return None

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.num.terms == o.num.terms and self.den.terms == o.den.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.constant_value())
        return hash((hash(self.num), hash(self.den)))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction._raw(self.field, self.num + o.num, self.den)
        if self.den.terms == o.den.terms:
            n, d = _normalize(self.num + o.num, self.den)
        else:
            n, d = _normalize(self.num * o.den + o.num * self.den, self.den * o.den)
        return RationalFunction._raw(self.field, n, d)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(self.field, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction._raw(self.field, self.num * o.num, self.den)
        if o.is_constant():
            return RationalFunction._raw(self.field, self.num.scale(o.num.constant_value()), self.den)
        if self.is_constant():
            return RationalFunction._raw(self.field, o.num.scale(self.num.constant_value()), o.den)
        n, d = _normalize(self.num * o.num, self.den * o.den)
        return RationalFunction._raw(self.field, n, d)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise DivisionByZero("inverse of zero rational function")
        n, d = _normalize(self.den, self.num)
        return RationalFunction._raw(self.field, n, d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.field, self.num**n, self.den**n)

    def parameters(self):
        names = self.field.names
        return {names[v] for v in self.num.variables() | self.den.variables()}

    def subs(self, mapping, field=None):
        """Substitute parameters by values of the target ``field``.

        ``mapping`` sends parameter names to values (scalars or elements of
        the target field).  Unmapped parameters are carried over by name.
        """
        field = field or self.field
        values = {}
        for i, n in enumerate(self.field.names):
            if n in mapping:
                values[i] = field(mapping[n]) if isinstance(field, ParamField) else mapping[n]
            elif isinstance(field, ParamField):
                values[i] = field.gen(n)
            else:
                raise ValueError(f"parameter {n} not assigned")
        zero = field(0) if isinstance(field, ParamField) else Fraction(0)
        num = self.num.evaluate(values, one=zero)
        den = self.den.evaluate(values, one=zero)
        if not den:
            raise SpecializationSingular(f"denominator {self.den} vanishes")
        return num / den

    def __str__(self):
        if self.den.is_one():
            return self.num.format()
        n = self.num.format()
        d = self.den.format()
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _normalize(num, den):
    if not den.terms:
        raise DivisionByZero("zero denominator")
    ring = num.ring
    if not num.terms:
        return num, _one_poly(ring)
    if den.is_constant():
        c = den.constant_value()
        if c == 1:
            return num, den
        inv = 1 / c if _is_rational(c) else c.inverse()
        return num.scale(inv), _one_poly(ring)
    g = poly_gcd(num, den)
    if not g.is_one():
        num = num.exact_div(g)
        den = den.exact_div(g)
    lc = den.lc()
    if lc != 1:
        inv = 1 / lc if _is_rational(lc) else lc.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


# ---------------------------------------------------------------------------
# named operations
# ---------------------------------------------------------------------------


def field_add(a, b):
    return a + b


def field_mul(a, b):
    return a * b


def field_neg(a):
    return -a


def field_inv(a):
    if isinstance(a, (Cyclo7, RationalFunction)):
        return a.inverse()
    if not a:
        raise DivisionByZero("inverse of zero")
    return 1 / _q(a)


def specialize(e, assignment):
    """Evaluate a parameter-field element at a point.

    Every parameter occurring in ``e`` must be assigned.  Raises
    SpecializationSingular when the denominator vanishes there.
    """
    if not isinstance(e, RationalFunction):
        return e
    missing = e.parameters() - set(assignment)
    if missing:
        raise ValueError(f"unassigned parameters: {sorted(missing)}")
    values = {}
    for i, n in enumerate(e.field.names):
        if n in assignment:
            values[i] = assignment[n]
    num = e.num.evaluate(values)
    den = e.den.evaluate(values)
    num = _scalar_simplify(num if not isinstance(num, MPoly) else num.constant_value())
    den = _scalar_simplify(den if not isinstance(den, MPoly) else den.constant_value())
    if not den:
        raise SpecializationSingular(f"denominator {e.den} vanishes at {assignment}")
    return _scalar_simplify(num / den if not _is_rational(den) or not _is_rational(num) else Fraction(num) / den)


def is_zero(x):
    return not x


def coerce_into(field, x):
    """Embed a scalar into ``field`` (QQ, QQ7 or a ParamField)."""
    return field(x)


def field_of(values, default=QQ):
    """Smallest known field containing every value in ``values``."""
    result = default
    for x in values:
        if isinstance(x, RationalFunction):
            if isinstance(result, ParamField) and result != x.field:
                raise FieldMismatch(f"{result!r} vs {x.field!r}")
            result = x.field
        elif isinstance(x, Cyclo7) and not x.is_rational():
            if isinstance(result, ParamField):
                if result.base != QQ7:
                    raise FieldMismatch("Q(zeta7) value with a parameter field over Q")
            else:
                result = QQ7
    return result
