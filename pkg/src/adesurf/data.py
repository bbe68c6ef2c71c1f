"""Embedded defining data for the verified surfaces.

The degree-8 invariant octic ``g`` (the surface family is Z(g[k]) with
g[k] = g(x1^k, ..., x4^k)), the four generating pseudo-reflections of the
order-155520 complex reflection group G32 acting on C^4, the seed singular
point on the degree-24 surface, and the degree-16 defining polynomial of
the splitting field carrying the coordinates of the degree-8 hyperplane
points of Z(g[2]).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import UPoly, cyclotomic_field
from .mpoly import PolyRing, parse_poly
from .exactnum import QQ

G_TEXT = (
    "x1^8 - 6*x1^6*x2^2 - 60*x1^6*x2*x3 - 60*x1^6*x2*x4 - 6*x1^6*x3^2"
    " + 60*x1^6*x3*x4 - 6*x1^6*x4^2 + 2240*x1^5*x2^2*x3 - 2240*x1^5*x2^2*x4"
    " + 2240*x1^5*x2*x3^2 - 2240*x1^5*x2*x4^2 + 2240*x1^5*x3^2*x4"
    " - 2240*x1^5*x3*x4^2 - 14*x1^4*x2^4 + 10180*x1^4*x2^3*x3"
    " + 10180*x1^4*x2^3*x4 + 40412*x1^4*x2^2*x3^2 - 23440*x1^4*x2^2*x3*x4"
    " + 40412*x1^4*x2^2*x4^2 + 10180*x1^4*x2*x3^3 + 23440*x1^4*x2*x3^2*x4"
    " + 23440*x1^4*x2*x3*x4^2 + 10180*x1^4*x2*x4^3 - 14*x1^4*x3^4"
    " - 10180*x1^4*x3^3*x4 + 40412*x1^4*x3^2*x4^2 - 10180*x1^4*x3*x4^3"
    " - 14*x1^4*x4^4 + 10180*x1^3*x2^4*x3 - 10180*x1^3*x2^4*x4"
    " + 111980*x1^3*x2^3*x3^2 - 111980*x1^3*x2^3*x4^2 + 111980*x1^3*x2^2*x3^3"
    " - 111980*x1^3*x2^2*x4^3 + 10180*x1^3*x2*x3^4 - 10180*x1^3*x2*x4^4"
    " + 10180*x1^3*x3^4*x4 - 111980*x1^3*x3^3*x4^2 + 111980*x1^3*x3^2*x4^3"
    " - 10180*x1^3*x3*x4^4 - 6*x1^2*x2^6 + 2240*x1^2*x2^5*x3"
    " + 2240*x1^2*x2^5*x4 + 40412*x1^2*x2^4*x3^2 + 23440*x1^2*x2^4*x3*x4"
    " + 40412*x1^2*x2^4*x4^2 + 111980*x1^2*x2^3*x3^3 + 111980*x1^2*x2^3*x4^3"
    " + 40412*x1^2*x2^2*x3^4 + 154704*x1^2*x2^2*x3^2*x4^2"
    " + 40412*x1^2*x2^2*x4^4 + 2240*x1^2*x2*x3^5 - 23440*x1^2*x2*x3^4*x4"
    " - 23440*x1^2*x2*x3*x4^4 + 2240*x1^2*x2*x4^5 - 6*x1^2*x3^6"
    " - 2240*x1^2*x3^5*x4 + 40412*x1^2*x3^4*x4^2 - 111980*x1^2*x3^3*x4^3"
    " + 40412*x1^2*x3^2*x4^4 - 2240*x1^2*x3*x4^5 - 6*x1^2*x4^6"
    " - 60*x1*x2^6*x3 + 60*x1*x2^6*x4 + 2240*x1*x2^5*x3^2 - 2240*x1*x2^5*x4^2"
    " + 10180*x1*x2^4*x3^3 - 23440*x1*x2^4*x3^2*x4 + 23440*x1*x2^4*x3*x4^2"
    " - 10180*x1*x2^4*x4^3 + 10180*x1*x2^3*x3^4 - 10180*x1*x2^3*x4^4"
    " + 2240*x1*x2^2*x3^5 + 23440*x1*x2^2*x3^4*x4 - 23440*x1*x2^2*x3*x4^4"
    " - 2240*x1*x2^2*x4^5 - 60*x1*x2*x3^6 + 23440*x1*x2*x3^4*x4^2"
    " - 23440*x1*x2*x3^2*x4^4 + 60*x1*x2*x4^6 - 60*x1*x3^6*x4"
    " - 2240*x1*x3^5*x4^2 + 10180*x1*x3^4*x4^3 - 10180*x1*x3^3*x4^4"
    " + 2240*x1*x3^2*x4^5 + 60*x1*x3*x4^6 + x2^8 - 6*x2^6*x3^2"
    " - 60*x2^6*x3*x4 - 6*x2^6*x4^2 - 2240*x2^5*x3^2*x4 - 2240*x2^5*x3*x4^2"
    " - 14*x2^4*x3^4 + 10180*x2^4*x3^3*x4 + 40412*x2^4*x3^2*x4^2"
    " + 10180*x2^4*x3*x4^3 - 14*x2^4*x4^4 - 10180*x2^3*x3^4*x4"
    " - 111980*x2^3*x3^3*x4^2 - 111980*x2^3*x3^2*x4^3 - 10180*x2^3*x3*x4^4"
    " - 6*x2^2*x3^6 + 2240*x2^2*x3^5*x4 + 40412*x2^2*x3^4*x4^2"
    " + 111980*x2^2*x3^3*x4^3 + 40412*x2^2*x3^2*x4^4 + 2240*x2^2*x3*x4^5"
    " - 6*x2^2*x4^6 + 60*x2*x3^6*x4 - 2240*x2*x3^5*x4^2 - 10180*x2*x3^4*x4^3"
    " - 10180*x2*x3^3*x4^4 - 2240*x2*x3^2*x4^5 + 60*x2*x3*x4^6 + x3^8"
    " - 6*x3^6*x4^2 - 14*x3^4*x4^4 - 6*x3^2*x4^6 + x4^8"
)

# defining polynomial of the degree-16 splitting field for the degree-8
# hyperplane points of Z(g[2])
K8_COEFFS = {16: 1, 12: 3248, 8: 23100000, 4: 20300000000, 0: 39062500000000}

VARS = ("x1", "x2", "x3", "x4")


@lru_cache(maxsize=None)
def ring_q() -> PolyRing:
    return PolyRing(QQ, VARS)


@lru_cache(maxsize=None)
def octic():
    """The degree-8 polynomial g over Q."""
    return parse_poly(G_TEXT, ring_q())


@lru_cache(maxsize=None)
def field_k12():
    """Q(zeta_12), the coordinate field of the singular points."""
    return cyclotomic_field(12, symbol="z")


@lru_cache(maxsize=None)
def ring_k12() -> PolyRing:
    return PolyRing(field_k12(), VARS)


@lru_cache(maxsize=None)
def octic_k12():
    K = field_k12()
    return octic().map_coefficients(K.from_rational, ring_k12())


@lru_cache(maxsize=None)
def k8_polynomial() -> UPoly:
    coeffs = [Fraction(K8_COEFFS.get(i, 0)) for i in range(17)]
    return UPoly(coeffs)


@lru_cache(maxsize=None)
def reflection_generators():
    """The four order-3 pseudo-reflections generating the group, as 4x4
    matrices over Q(zeta_12); their entries lie in Q(omega), omega = z^4."""
    K = field_k12()
    z = K.gen
    a = z ** 4  # primitive cube root of unity
    a2 = a * a
    one = K.one
    zero = K.zero
    al = a * Fraction(-1, 3) + a2 * Fraction(-2, 3)
    be = a * Fraction(2, 3) + a2 * Fraction(1, 3)
    s1 = ((one, zero, zero, zero),
          (zero, one, zero, zero),
          (zero, zero, a, zero),
          (zero, zero, zero, one))
    s2 = ((al, be, be, zero),
          (be, al, be, zero),
          (be, be, al, zero),
          (zero, zero, zero, one))
    s3 = ((one, zero, zero, zero),
          (zero, a, zero, zero),
          (zero, zero, one, zero),
          (zero, zero, zero, one))
    s4 = ((al, -be, zero, -be),
          (-be, al, zero, be),
          (zero, zero, one, zero),
          (-be, be, zero, al))
    return (s1, s2, s3, s4)


@lru_cache(maxsize=None)
def seed_point():
    """Distinguished singular point of the degree-24 surface, over Q(z)."""
    K = field_k12()
    z = K.gen
    return (K.zero,
            -(2 * z ** 3 - z ** 2 - z + 1),
            z ** 3 + z ** 2 + z,
            K.from_rational(2))
