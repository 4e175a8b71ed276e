"""Sparse exact polynomials in x, y, z with coefficients in Q[t].

A :class:`Poly` stores ``{(i, j, k, l): Fraction}`` for the monomial
``x^i y^j z^k t^l``.  Homogeneity (in x, y, z only) is a property checked by
callers such as :class:`cremona.maps.MapTriple`, not an invariant of the class.

The gcd is a recursive primitive pseudo-remainder sequence in the variable
order x > y > z > t.  Divisibility over Q(t) is decided through Gauss's
lemma: strip the t-content of the divisor, then divide in Q[x, y, z, t].
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

from .errors import ParseError

VARS = ("x", "y", "z", "t")
Exp = tuple[int, int, int, int]
Scalar = Union[int, Fraction]


def _unit(i: int) -> Exp:
    e = [0, 0, 0, 0]
    e[i] = 1
    return tuple(e)


def _add_exp(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


class Poly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms: dict[Exp, Fraction] = clean
        self._hash = None

    # construction --------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({_unit(VARS.index(name)): 1})

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _Parser(text).parse_expr_only()

    # basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree in x, y, z (-1 for the zero polynomial)."""
        return max((e[0] + e[1] + e[2] for e in self.terms), default=-1)

    def t_degree(self) -> int:
        return max((e[3] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({e[0] + e[1] + e[2] for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0, 0) for e in self.terms)

    def is_t_only(self) -> bool:
        return all(e[0] == e[1] == e[2] == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0, 0, 0, 0), Fraction(0))

    def uses_var(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    # arithmetic -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = Poly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly({e: c * other for e, c in self.terms.items()})
        other = Poly.coerce(other)
        out: dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_exp(self, shift: Exp) -> "Poly":
        return Poly({_add_exp(e, shift): c for e, c in self.terms.items()})

    # evaluation and substitution -----------------------------------------
    def subs_xyz(self, x: "Poly", y: "Poly", z: "Poly") -> "Poly":
        """Substitute polynomials for x, y, z (t is kept)."""
        subs = (Poly.coerce(x), Poly.coerce(y), Poly.coerce(z))
        powers: list[dict[int, Poly]] = [{0: Poly.const(1)} for _ in range(3)]

        def pw(i: int, n: int) -> Poly:
            cache = powers[i]
            if n not in cache:
                cache[n] = pw(i, n - 1) * subs[i]
            return cache[n]

        out: dict[Exp, Fraction] = {}
        for e, c in self.terms.items():
            term = pw(0, e[0]) * pw(1, e[1]) * pw(2, e[2])
            shift = (0, 0, 0, e[3])
            for e2, c2 in term.terms.items():
                k = _add_exp(e2, shift)
                out[k] = out.get(k, 0) + c * c2
        return Poly(out)

    def at_t(self, t0: Scalar) -> "Poly":
        t0 = Fraction(t0)
        out: dict[Exp, Fraction] = {}
        for e, c in self.terms.items():
            k = (e[0], e[1], e[2], 0)
            out[k] = out.get(k, 0) + c * t0 ** e[3]
        return Poly(out)

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(out)

    def coefficients_in_t(self) -> dict[tuple[int, int, int], "Poly"]:
        """Group terms by x, y, z monomial; values are polynomials in t."""
        groups: dict[tuple[int, int, int], dict[Exp, Fraction]] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[:3], {})[(0, 0, 0, e[3])] = c
        return {m: Poly(d) for m, d in groups.items()}

    # division -------------------------------------------------------------
    def leading_exp(self) -> Exp:
        return max(self.terms)

    def divmod(self, b: "Poly") -> tuple["Poly", "Poly"]:
        """Division by a single polynomial in lex order x > y > z > t.

        The remainder is zero exactly when ``b`` divides ``self`` in Q[x,y,z,t].
        """
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lb = b.leading_exp()
        cb = b.terms[lb]
        r = dict(self.terms)
        q: dict[Exp, Fraction] = {}
        rem: dict[Exp, Fraction] = {}
        while r:
            m = max(r)
            c = r[m]
            shift = tuple(mi - bi for mi, bi in zip(m, lb))
            if min(shift) < 0:
                rem[m] = c
                del r[m]
                continue
            f = c / cb
            q[shift] = q.get(shift, 0) + f
            for e, cc in b.terms.items():
                k = _add_exp(e, shift)
                v = r.get(k, 0) - f * cc
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return Poly(q), Poly(rem)

    def exquo(self, b: "Poly") -> "Poly":
        q, r = self.divmod(b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # normalization ----------------------------------------------------------
    def rational_primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive lex-leading coefficient."""
        if self.is_zero():
            return self
        den = reduce(math.lcm, (c.denominator for c in self.terms.values()), 1)
        num = reduce(math.gcd, (abs(c.numerator) * (den // c.denominator)
                                for c in self.terms.values()), 0)
        s = Fraction(den, num)
        if self.terms[self.leading_exp()] < 0:
            s = -s
        return self * s

    def t_content(self) -> "Poly":
        """gcd of the Q[t] coefficients, as a normalized polynomial in t."""
        if self.is_zero():
            return Poly.const(0)
        return reduce(lambda a, b: gcd(a, b), self.coefficients_in_t().values())

    def strip_t_content(self) -> "Poly":
        return self.exquo(self.t_content())

    def canonical(self) -> "Poly":
        """Representative up to a nonzero factor in Q(t)."""
        if self.is_zero():
            return self
        p = self.strip_t_content().rational_primitive()
        return p * canonical_sign(p)

    # formatting -----------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


X, Y, Z, T = (Poly.var(v) for v in VARS)
ONE = Poly.const(1)


def grlex_key(m: tuple[int, int, int]) -> tuple[int, int, int, int]:
    return (m[0] + m[1] + m[2], m[0], m[1], m[2])


def canonical_sign(p: Poly) -> int:
    """+1 or -1 making the graded-lex leading coefficient positive.

    The leading coefficient is a polynomial in t; its value at t = 0 decides,
    or its top coefficient when it vanishes at 0.
    """
    groups = p.coefficients_in_t()
    lead = groups[max(groups, key=grlex_key)]
    c0 = lead.terms.get((0, 0, 0, 0))
    if c0 is None:
        c0 = lead.terms[lead.leading_exp()]
    return 1 if c0 > 0 else -1


# --------------------------------------------------------------------------
# gcd
# --------------------------------------------------------------------------

def _coeffs_in(p: Poly, v: int) -> dict[int, Poly]:
    out: dict[int, dict[Exp, Fraction]] = {}
    for e, c in p.terms.items():
        e2 = list(e)
        n = e2[v]
        e2[v] = 0
        out.setdefault(n, {})[tuple(e2)] = c
    return {n: Poly(d) for n, d in out.items()}


def _deg_in(p: Poly, v: int) -> int:
    return max((e[v] for e in p.terms), default=-1)


def _content_in(p: Poly, v: int) -> Poly:
    return reduce(lambda a, b: _gcd(a, b, v + 1), _coeffs_in(p, v).values())


def _lead_in(p: Poly, v: int) -> tuple[int, Poly]:
    cs = _coeffs_in(p, v)
    n = max(cs)
    return n, cs[n]


def _prem(a: Poly, b: Poly, v: int) -> Poly:
    n, lb = _lead_in(b, v)
    r = a
    while r and _deg_in(r, v) >= n:
        m, lr = _lead_in(r, v)
        shift = [0, 0, 0, 0]
        shift[v] = m - n
        r = r * lb - (b * lr).scale_exp(tuple(shift))
    return r


def _gcd(a: Poly, b: Poly, v: int) -> Poly:
    if a.is_zero():
        return b.rational_primitive()
    if b.is_zero():
        return a.rational_primitive()
    if v >= 4:
        return ONE
    if not a.uses_var(v) and not b.uses_var(v):
        return _gcd(a, b, v + 1)
    ca, cb = _content_in(a, v), _content_in(b, v)
    g_content = _gcd(ca, cb, v + 1)
    pa, pb = a.exquo(ca), b.exquo(cb)
    if _deg_in(pa, v) < _deg_in(pb, v):
        pa, pb = pb, pa
    while pb and _deg_in(pb, v) > 0:
        r = _prem(pa, pb, v)
        pa, pb = pb, (r.exquo(_content_in(r, v)) if r else r)
    g = pa if pb.is_zero() else ONE
    return (g * g_content).rational_primitive()


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor in Q[x, y, z, t], integer-primitive, positive lead."""
    return _gcd(a, b, 0)


def gcd_many(polys: Iterable[Poly]) -> Poly:
    return reduce(gcd, polys, Poly())


def divides(h: Poly, p: Poly) -> bool:
    """Whether ``h`` divides ``p`` over Q(t)[x, y, z]."""
    if h.is_zero():
        return p.is_zero()
    if p.is_zero():
        return True
    h0 = h.strip_t_content()
    if h0.is_t_only():
        return True
    return p.divmod(h0)[1].is_zero()


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------

def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_mono(m: tuple[int, ...], names=VARS) -> list[str]:
    out = []
    for n, e in zip(names, m):
        if e == 1:
            out.append(n)
        elif e > 1:
            out.append(f"{n}^{e}")
    return out


def _fmt_tpoly(p: Poly) -> str:
    parts = []
    for e in sorted(p.terms, key=lambda e: -e[3]):
        c = p.terms[e]
        mono = _fmt_mono((e[3],), ("t",))
        mag = abs(c)
        body = "*".join(([_fmt_frac(mag)] if mag != 1 or not mono else []) + mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex order in x > y > z, t-coefficients grouped."""
    if p.is_zero():
        return "0"
    groups = p.coefficients_in_t()
    parts = []
    for m in sorted(groups, key=grlex_key, reverse=True):
        cp = groups[m]
        mono = _fmt_mono(m, ("x", "y", "z"))
        if len(cp.terms) == 1:
            (e, c), = cp.terms.items()
            tm = _fmt_mono((e[3],), ("t",))
            mag = abs(c)
            factors = ([_fmt_frac(mag)] if mag != 1 or not (tm or mono) else []) + tm + mono
            neg = c < 0
            body = "*".join(factors)
        else:
            body = "*".join([f"({_fmt_tpoly(cp)})"] + mono)
            neg = False
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKENS = re.compile(r"\s*(?:(\d+)|([xyzt])|(\*\*|[-+*/^():\[\],]))")


class _Parser:
    """Recursive-descent parser; ``*`` may be omitted between factors."""

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKENS.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character at {pos} in {self.text!r}")
            if m.group(1):
                self.toks.append(("num", m.group(1)))
            elif m.group(2):
                self.toks.append(("var", m.group(2)))
            else:
                op = m.group(3)
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "")

    def take(self, val: str | None = None):
        tok = self.peek()
        if val is not None and tok[1] != val:
            raise ParseError(f"expected {val!r} in {self.text!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def done(self):
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")

    def parse_expr_only(self) -> Poly:
        p = self.expr()
        self.done()
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_factor(self) -> bool:
        k, v = self.peek()
        return k in ("num", "var") or (k, v) == ("op", "(")

    def term(self) -> Poly:
        p = self.unary()
        while True:
            k, v = self.peek()
            if (k, v) == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif (k, v) == ("op", "/"):
                self.take()
                q = self.unary()
                if not q.is_constant() or q.is_zero():
                    raise ParseError(f"division by a non-constant in {self.text!r}")
                p = p * (1 / q.constant_value())
            elif self._starts_factor():
                p = p * self.power()
            else:
                return p

    def unary(self) -> Poly:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            k, v = self.take()
            if k != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            base = base ** int(v)
        return base

    def atom(self) -> Poly:
        k, v = self.take()
        if k == "num":
            return Poly.const(int(v))
        if k == "var":
            return Poly.var(v)
        if v == "(":
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"unexpected {v!r} in {self.text!r}")

    def bracket_list(self) -> list[Poly]:
        """Parse ``[e0 : e1 : ...]``."""
        self.take("[")
        items = [self.expr()]
        while self.peek() == ("op", ":"):
            self.take()
            items.append(self.expr())
        self.take("]")
        self.done()
        return items


def parse_bracket(text: str) -> list[Poly]:
    return _Parser(text).bracket_list()
