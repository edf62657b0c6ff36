"""Words, noncommutative polynomials and the presentation file format.

A word is a tuple of generator indices into an :class:`Alphabet`; the empty
tuple is the unit.  An :class:`NcPoly` is a finite map from words to nonzero
scalars drawn from one of the fields in :mod:`ncg.scalars`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .scalars import (
    QQ,
    QQ7,
    Cyclo7,
    FieldMismatch,
    ParamField,
    RationalFunction,
    base_field,
)

Word = Tuple[int, ...]


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class HomogeneityError(ValueError):
    pass


class EmptyRelation(ValueError):
    pass


# ---------------------------------------------------------------------------
# alphabets and words
# ---------------------------------------------------------------------------


class Alphabet:
    """Ordered generators; earlier generators rank larger in lex tie-breaks."""

    def __init__(self, names, degrees=None, zrdeg=None):
        names = list(names)
        if not names:
            raise ValueError("an alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        degrees = list(degrees) if degrees is not None else [1] * len(names)
        if len(degrees) != len(names) or any(d < 1 for d in degrees):
            raise ValueError("generator degrees must be positive integers")
        self.names = tuple(names)
        self.degrees = tuple(int(d) for d in degrees)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.zrdeg = tuple(tuple(v) for v in zrdeg) if zrdeg is not None else None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, Alphabet)
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        gens = " ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"Alphabet({gens})"

    def word(self, text):
        """Parse a word such as ``'x1*x2^2'`` (or ``'1'`` for the unit)."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        out = []
        for factor in text.split("*"):
            name, _, exp = factor.strip().partition("^")
            k = self.index[name.strip()]
            out.extend([k] * (int(exp) if exp else 1))
        return tuple(out)

    def degree(self, w):
        return sum(self.degrees[i] for i in w)

    def format_word(self, w, tex=False):
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            k = i
            while k < len(w) and w[k] == w[i]:
                k += 1
            name = self.names[w[i]]
            if tex:
                name = _tex_name(name)
            e = k - i
            parts.append(name if e == 1 else f"{name}^{e}")
            i = k
        return ("" if tex else "*").join(parts)


def _tex_name(name):
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    return f"{m.group(1)}_{m.group(2)}" if m else name


def concat(u: Word, v: Word) -> Word:
    return tuple(u) + tuple(v)


def is_factor(v: Word, u: Word) -> Optional[Tuple[Word, Word]]:
    """Leftmost split ``u = left + v + right`` or None if v is not a factor."""
    n, m = len(u), len(v)
    for i in range(n - m + 1):
        if u[i : i + m] == v:
            return u[:i], u[i + m :]
    return None


def factor_positions(v: Word, u: Word):
    n, m = len(u), len(v)
    return [i for i in range(n - m + 1) if u[i : i + m] == v]


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _clean(terms):
    return {w: c for w, c in terms.items() if c}


class NcPoly:
    """Element of the free algebra over ``alphabet``."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def _raw(cls, alphabet, terms):
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj.terms = terms
        return obj

    @classmethod
    def word(cls, alphabet, w, coeff=1):
        w = alphabet.word(w) if isinstance(w, str) else tuple(w)
        return cls(alphabet, {w: coeff})

    @classmethod
    def zero(cls, alphabet):
        return cls._raw(alphabet, {})

    @classmethod
    def one(cls, alphabet):
        return cls._raw(alphabet, {(): Fraction(1)})

    @classmethod
    def gen(cls, alphabet, name):
        return cls._raw(alphabet, {(alphabet.index[name],): Fraction(1)})

    # -- basic queries ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, w):
        if isinstance(w, str):
            w = self.alphabet.word(w)
        return self.terms.get(tuple(w), Fraction(0))

    def words(self):
        return list(self.terms)

    def degrees(self):
        return {self.alphabet.degree(w) for w in self.terms}

    def degree(self):
        return max(self.degrees(), default=-1)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d):
        deg = self.alphabet.degree
        return NcPoly._raw(self.alphabet, {w: c for w, c in self.terms.items() if deg(w) == d})

    def leading(self, order):
        w = max(self.terms, key=order.key)
        return w, self.terms[w]

    def lm(self, order):
        return self.leading(order)[0]

    def lc(self, order):
        return self.leading(order)[1]

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other):
        if other.alphabet != self.alphabet:
            raise FieldMismatch(f"{other.alphabet!r} vs {self.alphabet!r}")

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Cyclo7, RationalFunction)) and not isinstance(other, bool):
            return NcPoly._raw(self.alphabet, {(): other} if other else {})
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.terms[w] == o.terms[w] for w in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for w, c in o.terms.items():
            s = t.get(w)
            if s is None:
                t[w] = c
            else:
                s = s + c
                if s:
                    t[w] = s
                else:
                    del t[w]
        return NcPoly._raw(self.alphabet, t)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.alphabet, {w: -c for w, c in self.terms.items()})

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
        if not c:
            return NcPoly._raw(self.alphabet, {})
        t = {}
        for w, a in self.terms.items():
            p = a * c
            if p:
                t[w] = p
        return NcPoly._raw(self.alphabet, t)

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            return self.scale(other)
        self._check(other)
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                p = c1 * c2
                s = t.get(w)
                t[w] = p if s is None else s + p
        return NcPoly._raw(self.alphabet, _clean(t))

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.scale(other)

    def __truediv__(self, c):
        if isinstance(c, NcPoly):
            return NotImplemented
        return self.scale(1 / c if isinstance(c, (int, Fraction)) else c.inverse())

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = NcPoly.one(self.alphabet)
        for _ in range(n):
            out = out * self
        return out

    def lmul(self, w: Word, c=1):
        """Return c * w * self for a word w."""
        w = tuple(w)
        return NcPoly._raw(self.alphabet, {w + v: a * c for v, a in self.terms.items()})

    def rmul(self, w: Word, c=1):
        w = tuple(w)
        return NcPoly._raw(self.alphabet, {v + w: a * c for v, a in self.terms.items()})

    def map_coeffs(self, fn):
        return NcPoly(self.alphabet, {w: fn(c) for w, c in self.terms.items()})

    def monic(self, order):
        lc = self.lc(order)
        if lc == 1:
            return self
        inv = 1 / lc if isinstance(lc, (int, Fraction)) else lc.inverse()
        return self.scale(inv)

    # -- printing ---------------------------------------------------------------
    def format(self, order=None, tex=False):
        return print_poly(self, order, tex=tex)

    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return f"NcPoly({print_poly(self)!r})"


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def scalar_mul(c, f):
    return f.scale(c)


def substitute(f: NcPoly, images: Dict, target=None) -> NcPoly:
    """Algebra map determined by generator images (index or name -> NcPoly)."""
    alphabet = f.alphabet
    imgs = {}
    for k, v in images.items():
        idx = alphabet.index[k] if isinstance(k, str) else k
        imgs[idx] = v
    if target is None:
        target = next(iter(imgs.values())).alphabet if imgs else alphabet
    for i in range(len(alphabet)):
        if i not in imgs:
            if alphabet.names[i] not in target.index:
                raise ValueError(f"no image for generator {alphabet.names[i]}")
            imgs[i] = NcPoly.gen(target, alphabet.names[i])
    cache = {}

    def image_of(w):
        if w in cache:
            return cache[w]
        if len(w) == 1:
            r = imgs[w[0]]
        else:
            h = len(w) // 2
            r = image_of(w[:h]) * image_of(w[h:])
        cache[w] = r
        return r

    total = NcPoly.zero(target)
    for w, c in f.terms.items():
        total = total + (image_of(w).scale(c) if w else NcPoly._raw(target, {(): c}))
    return total


def substitute_linear(f: NcPoly, images: Dict) -> NcPoly:
    """Endomorphism of the free algebra given by degree-1 generator images."""
    for k, img in images.items():
        if img and (not img.is_homogeneous() or img.degree() != 1):
            raise ValueError(f"image of {k} is not homogeneous of degree 1")
    return substitute(f, images, f.alphabet)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _coeff_str(c):
    """(text, negative, atomic) for a nonzero scalar."""
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        return str(abs(c)), c < 0, c.denominator == 1
    s = str(c)
    if isinstance(c, RationalFunction) and c.is_constant():
        v = c.constant_value()
        if isinstance(v, Fraction):
            return _coeff_str(v)
        s = str(v)
    if isinstance(c, Cyclo7) and c.is_rational():
        return _coeff_str(c.rational())
    atomic = re.fullmatch(r"-?[A-Za-z0-9_^*]+", s) is not None
    if atomic and s.startswith("-"):
        return s[1:], True, True
    return s, False, atomic


def print_poly(f: NcPoly, order=None, tex=False) -> str:
    """Canonical text of ``f`` with terms in decreasing order."""
    if order is None:
        from .order import GrLex

        order = GrLex(f.alphabet)
    if not f.terms:
        return "0"
    out = []
    for w, c in f.sorted_terms(order):
        text, neg, atomic = _coeff_str(c)
        word = f.alphabet.format_word(w, tex=tex) if w else ""
        if tex:
            if not atomic:
                text = f"({text})"
            mono = word if text == "1" and word else text + word
        else:
            if not atomic and word:
                text = f"({text})"
            if not word:
                mono = text
            elif text == "1":
                mono = word
            else:
                mono = f"{text}*{word}"
        if not out:
            out.append(("-" if tex else "- ") + mono if neg else mono)
        else:
            sep = "-" if neg else "+"
            out.append(f"{sep}{mono}" if tex else f" {sep} {mono}")
    return "".join(out)


# ---------------------------------------------------------------------------
# presentations and the file grammar
# ---------------------------------------------------------------------------


@dataclass
class Presentation:
    alphabet: Alphabet
    relations: List[NcPoly]
    field: object = QQ
    parameters: List[str] = dc_field(default_factory=list)
    name: str = ""

    @property
    def zrdeg(self):
        return self.alphabet.zrdeg

    def scalar_field(self):
        return self.field

    def relation_degrees(self):
        return [r.degree() for r in self.relations]

    def specialize(self, assignment, field=None):
        """Substitute values for some or all parameters."""
        from .scalars import specialize as spec

        if not self.parameters:
            return self
        rest = [p for p in self.parameters if p not in assignment]
        base = self.field.base if isinstance(self.field, ParamField) else self.field
        target = ParamField(rest, base) if rest else base

        def conv(c):
            if isinstance(c, RationalFunction):
                if rest:
                    return c.subs(assignment, target)
                return spec(c, assignment)
            return c

        rels = [r.map_coeffs(conv) for r in self.relations]
        return Presentation(self.alphabet, rels, target, rest, self.name)

    def to_text(self, order=None):
        lines = [f"field: {_field_label(self.field)}"]
        if self.parameters:
            lines.append("params: " + " ".join(self.parameters))
        lines.append(
            "gens: " + " ".join(f"{n}:{d}" for n, d in zip(self.alphabet.names, self.alphabet.degrees))
        )
        if self.alphabet.zrdeg:
            lines.append(
                "zrdeg: "
                + " ".join(
                    f"{n}=({','.join(str(x) for x in v)})"
                    for n, v in zip(self.alphabet.names, self.alphabet.zrdeg)
                )
            )
        for r in self.relations:
            lines.append("rel: " + print_poly(r, order))
        return "\n".join(lines) + "\n"


def _field_label(fld):
    if isinstance(fld, ParamField):
        fld = fld.base
    return "Qzeta7" if fld == QQ7 else "Q"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class _ExprParser:
    """Recursive-descent parser for relation expressions."""

    def __init__(self, text, line, col0, alphabet, scalars):
        self.text = text
        self.line = line
        self.col0 = col0
        self.alphabet = alphabet
        self.scalars = scalars
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.end() == pos or (not m.group(0).strip()):
                break
            start = m.start(m.lastindex)
            kind = ("num", "name", "op")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        self.i = 0

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text.rstrip())
        raise ParseError(msg, self.line, self.col0 + pos + 1)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            self.error("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        kind, val, _ = self.peek()
        sign = 1
        if val in ("+", "-"):
            self.take()
            sign = -1 if val == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if val == "+":
                self.take()
                value = value + self.term()
            elif val == "-":
                self.take()
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if val == "*":
                self.take()
                value = value * self.unary()
            elif val == "/":
                self.take()
                rhs = self.unary()
                if not (rhs.is_homogeneous() and rhs.degree() == 0 and rhs):
                    self.error("division by a non-scalar or zero", pos)
                value = value / rhs.coeff(())
            else:
                return value

    def unary(self):
        kind, val, _ = self.peek()
        if val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if val == "^":
            self.take()
            kind, num, npos = self.take()
            if kind != "num":
                self.error("exponent must be a nonnegative integer", npos)
            return base ** int(num)
        return base

    def atom(self):
        kind, val, pos = self.take()
        A = self.alphabet
        if kind is None:
            self.error("unexpected end of expression")
        if kind == "num":
            return NcPoly._raw(A, {(): Fraction(int(val))} if int(val) else {})
        if kind == "name":
            if val in A.index:
                return NcPoly.gen(A, val)
            if val in self.scalars:
                c = self.scalars[val]
                return NcPoly._raw(A, {(): c})
            self.error(f"unknown symbol {val!r}", pos)
        if val == "(":
            inner = self.expr()
            kind, close, cpos = self.take()
            if close != ")":
                self.error("expected ')'", cpos)
            return inner
        self.error(f"unexpected {val!r}", pos)


def parse_expression(text, alphabet, field=QQ, parameters=(), line=None, col0=0):
    scalars = {}
    if isinstance(field, ParamField):
        for n in field.names:
            scalars[n] = field.gen(n)
        base = field.base
    else:
        base = field
    if base == QQ7:
        scalars["j"] = Cyclo7.gen()
    return _ExprParser(text, line, col0, alphabet, scalars).parse()


_ZR = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)\s*=\s*\(([^)]*)\)")


def parse_presentation(text, name="") -> Presentation:
    """Parse the line-oriented presentation format; see the README."""
    field_name = None
    params: List[str] = []
    gens = None
    zr = None
    rel_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", lineno, 1)
        key = key.strip()
        vcol = line.index(":") + 1
        if key == "field":
            field_name = value.strip()
            if field_name not in ("Q", "Qzeta7"):
                raise ParseError(f"unknown field {field_name!r}", lineno, vcol + 2)
        elif key == "params":
            params = value.split()
        elif key == "gens":
            gens = []
            for item in value.split():
                n, _, d = item.partition(":")
                if not d.isdigit() or int(d) < 1:
                    raise ParseError(f"bad generator spec {item!r}", lineno, line.find(item) + 1)
                gens.append((n, int(d)))
        elif key == "zrdeg":
            zr = {}
            for m in _ZR.finditer(value):
                try:
                    zr[m.group(1)] = tuple(int(x) for x in m.group(2).split(","))
                except ValueError:
                    raise ParseError("bad multidegree", lineno, line.find(m.group(0)) + 1)
        elif key == "rel":
            rel_lines.append((lineno, vcol, value))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if field_name is None:
        field_name = "Q"
    if not gens:
        raise ParseError("missing 'gens:' line")
    names = [n for n, _ in gens]
    clash = (set(params) | {"j"}) & set(names)
    if clash:
        raise ParseError(f"generator names clash with scalars: {sorted(clash)}")
    zrdeg = None
    if zr is not None:
        missing = [n for n in names if n not in zr]
        if missing:
            raise ParseError(f"zrdeg missing for {missing}")
        zrdeg = [zr[n] for n in names]
        if len({len(v) for v in zrdeg}) != 1:
            raise ParseError("zrdeg vectors have different lengths")
    alphabet = Alphabet(names, [d for _, d in gens], zrdeg)
    base = base_field(field_name)
    fld = ParamField(params, base) if params else base
    rels = []
    for k, (lineno, vcol, value) in enumerate(rel_lines, start=1):
        f = parse_expression(value, alphabet, fld, line=lineno, col0=vcol)
        if not f:
            raise EmptyRelation(f"relation {k} (line {lineno}) is zero")
        if not f.is_homogeneous():
            raise HomogeneityError(
                f"relation {k} (line {lineno}) mixes degrees {sorted(f.degrees())}: {value.strip()}"
            )
        rels.append(f)
    return Presentation(alphabet, rels, fld, params, name)


def load_presentation(path) -> Presentation:
    import os

    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_presentation(text, name=os.path.splitext(os.path.basename(str(path)))[0])
