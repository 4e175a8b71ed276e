"""Rational maps of the plane as triples of homogeneous polynomials.

Maps compose as substitution: ``compose(f, g)`` is ``f o g``, i.e. ``g`` is
applied first.  Nothing is reduced implicitly; :func:`primitive_part` strips
a common factor when asked.  Only proper (non infinitely near) base-points
are handled.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError
from .polynomial import (ONE, Poly, X, Y, Z, canonical_sign, divides,
                         format_poly, gcd_many, parse_bracket)


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^2 whose coordinates are constants or polynomials in t."""

    coords: tuple[Poly, Poly, Poly]

    def __post_init__(self):
        c = tuple(Poly.coerce(a) for a in self.coords)
        if len(c) != 3 or all(a.is_zero() for a in c):
            raise PreconditionError("a point needs three coordinates, not all zero")
        if not all(a.is_t_only() for a in c):
            raise PreconditionError("point coordinates may only involve t")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *coords) -> "ProjPoint":
        return cls(tuple(Poly.coerce(Fraction(c) if isinstance(c, (int, Fraction)) else c)
                         for c in coords))

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        items = parse_bracket(text)
        if len(items) != 3:
            raise ParseError(f"a point needs three coordinates: {text!r}")
        return cls(tuple(items))

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.coords)

    def values(self) -> tuple[Fraction, Fraction, Fraction]:
        if not self.is_constant():
            raise PreconditionError("point depends on t")
        return tuple(c.constant_value() for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.coords, other.coords
        return all((a[i] * b[j] - a[j] * b[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))

    def __hash__(self) -> int:
        return 0  # equality is up to scaling

    def __str__(self) -> str:
        return "[" + ":".join(format_poly(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class MapTriple:
    components: tuple[Poly, Poly, Poly]
    reduced: bool = False

    def __post_init__(self):
        c = tuple(Poly.coerce(a) for a in self.components)
        if len(c) != 3:
            raise PreconditionError("a map needs three components")
        nonzero = [a for a in c if a]
        if not nonzero:
            raise PreconditionError("all three components vanish")
        if not all(a.is_homogeneous() for a in nonzero):
            raise PreconditionError("components must be homogeneous in x, y, z")
        if len({a.degree() for a in nonzero}) != 1:
            raise PreconditionError("components must have equal degree")
        object.__setattr__(self, "components", c)

    @classmethod
    def of(cls, *components, reduced: bool = False) -> "MapTriple":
        return cls(tuple(Poly.parse(c) if isinstance(c, str) else Poly.coerce(c)
                         for c in components), reduced)

    @classmethod
    def parse(cls, text: str) -> "MapTriple":
        items = parse_bracket(text)
        if len(items) != 3:
            raise ParseError(f"a map needs three components: {text!r}")
        return cls(tuple(items))

    @property
    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    def __getitem__(self, i: int) -> Poly:
        return self.components[i]

    def __str__(self) -> str:
        return "[" + " : ".join(format_poly(c) for c in self.components) + "]"

    def canonical(self) -> "MapTriple":
        """Representative up to a scalar in Q(t)*: no t-content, integer primitive, signed."""
        content = gcd_many(c.t_content() for c in self.components if c)
        comps = [c.exquo(content) for c in self.components]
        scale = _joint_rational_scale(comps)
        comps = [c * scale for c in comps]
        lead = next(c for c in comps if c)
        s = canonical_sign(lead)
        return MapTriple(tuple(c * s for c in comps), self.reduced)

    def canonical_str(self) -> str:
        return str(self.canonical())

    def projectively_equal(self, other: "MapTriple") -> bool:
        a, b = self.components, other.components
        return all((a[i] * b[j] - a[j] * b[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))


def _joint_rational_scale(comps: Sequence[Poly]) -> Fraction:
    import math
    from functools import reduce
    coeffs = [c for p in comps for c in p.terms.values()]
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    num = reduce(math.gcd, (abs(c.numerator) * (den // c.denominator) for c in coeffs), 0)
    return Fraction(den, num)


# --------------------------------------------------------------------------
# core operations
# --------------------------------------------------------------------------

def compose(f: MapTriple, g: MapTriple) -> MapTriple:
    """Unreduced ``f o g``: substitute the components of g into f."""
    return MapTriple(tuple(c.subs_xyz(*g.components) for c in f.components))


def common_factor(f: MapTriple) -> Poly:
    """gcd of the components over Q(t): positive degree part only, t-content removed."""
    g = gcd_many(c for c in f.components if c)
    return g.strip_t_content().rational_primitive()


def primitive_part(f: MapTriple) -> tuple[MapTriple, Poly]:
    """``(reduced, h)`` with ``f == h * reduced`` componentwise."""
    h = common_factor(f)
    if h.degree() == 0:
        h = ONE
    red = MapTriple(tuple(c.exquo(h) for c in f.components), reduced=True)
    return red, h


def reduce_map(f: MapTriple) -> MapTriple:
    return primitive_part(f)[0]


def compose_reduced(*maps: MapTriple) -> MapTriple:
    """``maps[0] o maps[1] o ...`` with a reduction after every step."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = reduce_map(compose(m, out))
    return out


def jacobian_raw(f: MapTriple) -> Poly:
    rows = [[c.diff(i) for i in range(3)] for c in f.components]
    (a, b, c), (d, e, g), (h, i, j) = rows
    return a * (e * j - g * i) - b * (d * j - g * h) + c * (d * i - e * h)


def jacobian(f: MapTriple) -> Poly:
    """Jacobian determinant, normalized: content removed, leading coefficient positive."""
    return jacobian_raw(f).canonical()


def same_up_to_scalar(p: Poly, q: Poly) -> bool:
    return p.canonical() == q.canonical()


def is_contracted(f: MapTriple, h: Poly, q: ProjPoint) -> bool:
    """Whether every ``q_i f_j - q_j f_i`` is a multiple of ``h``."""
    if h.is_zero() or not h.is_homogeneous():
        raise PreconditionError("h must be a nonzero homogeneous polynomial")
    if h.degree() < 1:
        return False
    fc, qc = f.components, q.coords
    return all(divides(h, qc[i] * fc[j] - qc[j] * fc[i]) for i, j in ((0, 1), (0, 2), (1, 2)))


def _local_order(p: Poly, pt: ProjPoint) -> int:
    """Vanishing order of a homogeneous ``p`` at a constant point (generic in t)."""
    if p.is_zero():
        return 10 ** 9
    v = pt.values()
    c = next(i for i in range(3) if v[i] != 0)
    gens = (X, Y, Z)
    subs = [gens[i] + v[i] if i != c else Poly.const(v[i]) for i in range(3)]
    local = p.subs_xyz(*subs)
    return min(e[0] + e[1] + e[2] for e in local.terms)


def multiplicity_at(f: MapTriple, pt: ProjPoint) -> int:
    """Multiplicity of a general member of the linear system at ``pt``.

    The lowest-order part of ``sum(l_i f_i)`` is the same combination of the
    lowest-order parts, so for general ``l_i`` the order is the minimum of the
    componentwise orders.
    """
    if not pt.is_constant():
        raise PreconditionError("multiplicity_at needs a point with constant coordinates")
    return min(_local_order(c, pt) for c in f.components)


def multiplicity_oracle(f: MapTriple, pt: ProjPoint, trials: int = 4,
                        rng: random.Random | None = None) -> int:
    """Order of random rational combinations of the components; minimum over trials."""
    rng = rng or random.Random(0)
    best = None
    for _ in range(trials):
        lam = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(3)]
        combo = sum((c * l for c, l in zip(f.components, lam)), Poly())
        o = _local_order(combo, pt)
        best = o if best is None else min(best, o)
    return best


def verify_jacobian_factorization(f: MapTriple,
                                  factors: Sequence[tuple[Poly, ProjPoint]]) -> bool:
    """Product of the factors equals J(f) up to scalar, each contracted onto its point."""
    prod = ONE
    for h, _ in factors:
        prod = prod * h
    if jacobian(f) != prod.canonical():
        return False
    return all(is_contracted(f, h, q) for h, q in factors)


def is_inverse_pair(f: MapTriple, g: MapTriple) -> bool:
    """Whether ``g o f`` is ``[x h : y h : z h]`` for one polynomial h."""
    comp = compose(g, f).components
    xs = (X, Y, Z)
    return all((comp[i] * xs[j] - comp[j] * xs[i]).is_zero()
               for i, j in ((0, 1), (0, 2), (1, 2)))


def substitute_t(f: MapTriple, t0) -> MapTriple:
    """Specialize the parameter; the result is not reduced."""
    return MapTriple(tuple(c.at_t(t0) for c in f.components))


def linear_map(matrix: Sequence[Sequence]) -> MapTriple:
    """``[x:y:z] -> M (x, y, z)^T``; entries may be rationals or polynomials in t."""
    xs = (X, Y, Z)
    return MapTriple(tuple(sum((Poly.coerce(Fraction(a) if isinstance(a, (int, Fraction)) else a) * v
                                for a, v in zip(row, xs)), Poly())
                           for row in matrix))


def _inverse_3x3(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    (a, b, c), (d, e, f), (g, h, i) = [[Fraction(v) for v in row] for row in m]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise PreconditionError("singular linear map")
    adj = [[e * i - f * h, c * h - b * i, b * f - c * e],
           [f * g - d * i, a * i - c * g, c * d - a * f],
           [d * h - e * g, b * g - a * h, a * e - b * d]]
    return [[v / det for v in row] for row in adj]


def linear_matrix(f: MapTriple) -> list[list[Fraction]]:
    """Coefficient matrix of a constant linear map."""
    if f.degree != 1 or not all(c.is_t_only() or c.t_degree() <= 0 for c in f.components):
        raise PreconditionError("not a constant linear map")
    out = []
    for c in f.components:
        if c.t_degree() > 0:
            raise PreconditionError("linear map depends on t")
        row = [c.terms.get(e, Fraction(0)) for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))]
        out.append(row)
    return out


def inverse_linear(f: MapTriple) -> MapTriple:
    return linear_map(_inverse_3x3(linear_matrix(f)))


# --------------------------------------------------------------------------
# base-point helpers
# --------------------------------------------------------------------------

def is_base_point(f: MapTriple, pt: ProjPoint) -> bool:
    return multiplicity_at(f, pt) > 0


def linear_factors(p: Poly, bound: int = 20) -> list[Poly]:
    """Linear forms ``a x + b y + c z`` with integer coefficients in a box dividing ``p``.

    Each form is listed once (normalized); multiplicity is not reported.
    """
    found: list[Poly] = []
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if (a, b, c) == (0, 0, 0):
                    continue
                # first nonzero coefficient positive, coefficients coprime
                lead = next(v for v in (a, b, c) if v)
                if lead < 0:
                    continue
                from math import gcd as igcd
                if igcd(igcd(abs(a), abs(b)), abs(c)) != 1:
                    continue
                h = X * a + Y * b + Z * c
                if divides(h, p):
                    found.append(h)
    return found


# --------------------------------------------------------------------------
# degenerations from two base-points
# --------------------------------------------------------------------------

def _frame(p1: ProjPoint, p2: ProjPoint) -> list[list[Fraction]]:
    """Columns p1, p2 and a completing standard basis vector."""
    v1, v2 = p1.values(), p2.values()
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        m = [[v1[i], v2[i], Fraction(e[i])] for i in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det:
            return m
    raise PreconditionError("the two points coincide")


def pair_degeneration(gamma: MapTriple, p1: ProjPoint, p2: ProjPoint) -> MapTriple:
    """``rho(t) = gamma o nu(t)^-1`` with ``nu(t)`` quadratic through p1, p2.

    ``nu(t) = kappa(t) kappa(0)`` conjugated so that p1, p2 go to [1:0:0],
    [0:1:0]; its third base-point becomes collinear with them at t = 0.  The
    generic degree is ``2d - m1 - m2``; ``rho(0)`` reduces to ``gamma``.
    Points of multiplicity 0 are allowed.
    """
    from .families import kappa_family
    if p1 == p2:
        raise PreconditionError("the two points coincide")
    d = gamma.degree
    m1, m2 = multiplicity_at(gamma, p1), multiplicity_at(gamma, p2)
    if m1 + m2 >= d:
        raise PreconditionError(f"m1 + m2 = {m1 + m2} must be smaller than d = {d}")
    a_inv = linear_map(_frame(p1, p2))           # sends [1:0:0], [0:1:0] to p1, p2
    a = inverse_linear(a_inv)
    kappa = kappa_family()
    k0 = substitute_t(kappa, 0)
    nu_inv = compose(k0, kappa)                   # kappa(0) o kappa(t); kappa(t) is an involution
    rho = compose_reduced(gamma, a_inv, reduce_map(nu_inv), a)
    return rho.canonical()
