"""Explicit maps and one-parameter families used as worked examples.

Families are maps whose coefficients are polynomials in ``t``.  Values at
``t = 0`` are obtained with :func:`cremona.maps.substitute_t` and usually
need :func:`cremona.maps.reduce_map` afterwards.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .maps import (MapTriple, compose, compose_reduced, inverse_linear,
                   linear_map, reduce_map, substitute_t)


def identity() -> MapTriple:
    return MapTriple.of("x", "y", "z", reduced=True)


def sigma() -> MapTriple:
    """The standard quadratic involution [yz : xz : xy]."""
    return MapTriple.of("y*z", "x*z", "x*y", reduced=True)


def kappa_family() -> MapTriple:
    """Quadratic involutions with base-points [1:0:0], [0:1:0], [1:1:t]; collinear at t = 0."""
    return MapTriple.of("(t*y - z)*x", "(t*x - z)*y", "(t*x - z)*(t*y - z)")


def kappa_infnear_family() -> MapTriple:
    """A quadratic family whose t = 0 member has an infinitely near base-point."""
    return MapTriple.of("-x*z + t*y^2", "y*z", "z^2")


def kappa_tilde_family() -> MapTriple:
    return MapTriple.of("t*(x^2 - y^2) - x*z", "-y*z", "(t*(x + y) - z)*(t*(x - y) - z)")


def sigma1() -> MapTriple:
    return MapTriple.of("(x - y)*(x - z)", "y*(z - x)", "z*(y - x)")


def sigma2_family() -> MapTriple:
    return MapTriple.of("y*(t*x + z*(1 - t^2))", "z*(x - z*t)", "y*(x - z*t)")


def sigma2_sigma1_family() -> MapTriple:
    """``sigma2(t) o sigma1``, reduced over Q(t) and normalized."""
    return reduce_map(compose(sigma2_family(), sigma1())).canonical()


_CUBIC_F = ("(x + y - z)*y*(3*y - z)", "(2*y - z)*x*(3*y - z)", "(2*y - z)*x*y")


def cubic_example_pair() -> tuple[MapTriple, MapTriple]:
    """Two mutually inverse cubic maps, each with type (3; 2, 1^4).

    The third component of ``g`` carries a minus sign; without it ``g o f``
    is the involution [x : y : -z] (see :func:`cubic_example_pair_literal`).
    """
    f = MapTriple.of(*_CUBIC_F)
    g = MapTriple.of("(y - 2*z)*y*z", "(x*y - x*z - y*z)*z", "-(x*y - x*z - y*z)*(y - 3*z)")
    return f, g


def cubic_example_pair_literal() -> tuple[MapTriple, MapTriple]:
    """The pair as usually printed, inverse to each other only up to z -> -z."""
    f = MapTriple.of(*_CUBIC_F)
    g = MapTriple.of("(y - 2*z)*y*z", "(x*y - x*z - y*z)*z", "(x*y - x*z - y*z)*(y - 3*z)")
    return f, g


def _tau(a: Fraction) -> MapTriple:
    return MapTriple.of(f"({a} + t)*y + z", f"({a - 1})*y", f"{a}*x - ({a} + t)*y")


def _rho() -> MapTriple:
    return MapTriple.of("x*(y*t + z)", "y*z", "-z*(y*t + z)")


def quartic_collinear_family(a) -> MapTriple:
    """``rho(0) tau(0)^-1 kappa(0) kappa(t) tau(t) rho(t)``, reduced after each step.

    ``a`` must avoid 0 and 1, where ``tau(0)`` is singular.
    """
    a = Fraction(a)
    if a in (0, 1):
        raise PreconditionError("tau(0) is singular for a in {0, 1}")
    tau = _tau(a)
    tau0_inv = inverse_linear(substitute_t(tau, 0))
    rho = _rho()
    kappa = kappa_family()
    return compose_reduced(substitute_t(rho, 0), tau0_inv, substitute_t(kappa, 0),
                           kappa, tau, rho).canonical()


__all__ = [
    "identity", "sigma", "kappa_family", "kappa_infnear_family", "kappa_tilde_family",
    "sigma1", "sigma2_family", "sigma2_sigma1_family", "cubic_example_pair",
    "cubic_example_pair_literal",
    "quartic_collinear_family", "linear_map",
]
