"""Slopes on Heegaard tori and tight structures on the complementary solid torus.

Conventions: a curve ``x*mu + y*lambda`` on a torus has slope ``y/x``; the
intersection pairing is ``mu . lambda = 1``.  A lens space is the union of
solid tori V1, V2 glued along a :class:`GluingMap` expressing ``(mu2,
lambda2)`` in the basis ``(mu1, lambda1)``.  A Legendrian realisation of
the core of V1 with contact framing ``n*mu1 + lambda1`` leaves V2 with
boundary dividing slope ``s2``.  Giroux and Honda count the tight
structures on V2 from the negative continued fraction of ``s2`` after a
Dehn twist brings it to ``<= -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DegenerateSlopeError, DomainError, InvalidGluingError, InvalidParameterError


@dataclass(frozen=True)
class Slope:
    """Slope ``num/den`` of a primitive curve class, with ``den >= 0``.

    ``Slope(1, 0)`` is the infinite slope.
    """

    num: int
    den: int

    def __post_init__(self):
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: Fraction | int | str) -> Slope:
        if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "1/0"):
            return INFINITY
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def value(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.num}/{self.den}"


INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class NegCFE:
    """Negative continued fraction ``[r0, ..., rk]`` with every term ``<= -2``.

    The empty expansion stands for slope -1, which carries a unique tight
    structure.
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if any(t > -2 for t in self.terms):
            raise DomainError(f"negative continued fraction terms must be <= -2: {self.terms}")

    @property
    def value(self) -> Fraction:
        if not self.terms:
            return Fraction(-1)
        acc = Fraction(self.terms[-1])
        for t in reversed(self.terms[:-1]):
            acc = t - 1 / acc
        return acc

    def __str__(self) -> str:
        return "[" + ", ".join(str(t) for t in self.terms) + "]"


def neg_cfe(s: Fraction | int | Slope) -> NegCFE:
    """Expansion of a rational ``s <= -1`` with all terms ``<= -2``.

    Each term is the integer ``r`` with ``r <= s < r + 1`` (``s`` itself
    when integral); recurse on ``-1 / (s - r)``.
    """
    if isinstance(s, Slope):
        s = s.value
    s = Fraction(s)
    if s > -1:
        raise DomainError(f"slope {s} is not <= -1; apply a Dehn twist first")
    if s == -1:
        return NegCFE(())
    terms = []
    while True:
        r = math.floor(s)
        terms.append(r)
        if s == r:
            return NegCFE(tuple(terms))
        s = -1 / (s - r)


def tight_count(cfe: NegCFE) -> int:
    """Giroux-Honda count ``|(r0+1)...(r_{k-1}+1) r_k|``; 1 for slope -1."""
    t = cfe.terms
    if not t:
        return 1
    return abs(reduce(lambda acc, x: acc * (x + 1), t[:-1], 1) * t[-1])


def dehn_twist(s: Slope, k: int) -> Slope:
    """Slope after ``lambda' = lambda + k*mu``: ``a/b -> a/(b - k*a)``."""
    return Slope(s.num, s.den - k * s.num)


def normalize_slope(s: Slope) -> tuple[NegCFE, int]:
    """Dehn-twist ``s`` to a slope ``<= -1``; returns the expansion and the twist.

    Twisting maps ``1/s`` to ``1/s - k``, so the target ``-1 <= 1/s' < 0``
    pins down exactly one integer ``k = floor(1/s) + 1``.
    """
    if not isinstance(s, Slope):
        s = Slope.of(s)
    if s.num == 0:
        raise DegenerateSlopeError("slope 0 cannot be normalised")
    k = math.floor(Fraction(s.den, s.num)) + 1
    return neg_cfe(dehn_twist(s, k)), k


@dataclass(frozen=True)
class GluingMap:
    """``mu2 = a*mu1 + b*lambda1``, ``lambda2 = c*mu1 + d*lambda1``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def order(self) -> int:
        """|H_1| of the glued manifold: the lambda1-coefficient of mu2."""
        return abs(self.b)

    def check(self) -> None:
        if self.det not in (1, -1):
            raise InvalidGluingError(f"gluing matrix has determinant {self.det}")
        if self.b == 0:
            raise InvalidGluingError("mu2 parallel to mu1: glued manifold is not a rational homology sphere")


def lens_gluing(p: int, q: int) -> GluingMap:
    """Gluing for L(p, q) with ``mu2 = -q*mu1 + p*lambda1``.

    lambda2 is any dual class; a different choice is a Dehn twist of V2
    and does not change the counts.
    """
    if p < 2 or not 1 <= q <= p - 1 or math.gcd(p, q) != 1:
        raise InvalidParameterError(f"invalid lens space parameters L({p},{q})")
    # determinant -q*d - p*c = -1
    d = pow(q, -1, p)
    c = (1 - q * d) // p
    g = GluingMap(-q, p, c, d)
    g.check()
    return g


# named gluings of the worked examples
S3_GLUING = GluingMap(0, 1, 1, 0)
RP3_GLUING = GluingMap(-1, 2, 0, 1)
L52_K1_GLUING = GluingMap(-2, 5, 1, -2)
L52_K2_GLUING = GluingMap(-3, 5, 2, -3)


def lp1_gluing(p: int) -> GluingMap:
    if p < 1:
        raise InvalidParameterError(f"L({p},1) needs p >= 1")
    return GluingMap(-1, p, 0, 1)


def complement_slope(g: GluingMap, n: int) -> tuple[Fraction, Slope]:
    """tb_Q of the core of V1 with contact framing ``n*mu1 + lambda1`` and the slope on V2.

    ``tb_Q = (lambda_c . mu2) / p`` and ``s2`` is the slope of lambda_c in
    the basis ``(mu2, lambda2)``.
    """
    g.check()
    # lambda_c . mu2 with (x mu + y lam).(z mu + w lam) = x w - y z
    inter = n * g.b - g.a
    tb = Fraction(inter, g.b)
    # (n, 1) G^{-1}, G = [[a, b], [c, d]]
    x = (n * g.d - g.c) * g.det
    y = (-n * g.b + g.a) * g.det
    return tb, Slope(y, x)


def realization_count(g: GluingMap, n: int) -> int:
    """Number of tight structures on V2, i.e. Legendrian realisations with tight complement."""
    _, s2 = complement_slope(g, n)
    cfe, _ = normalize_slope(s2)
    return tight_count(cfe)


def coarse_class_count(p: int, q: int) -> int:
    """Oriented rational unknots in L(p, q) up to orientation-preserving diffeomorphism."""
    if p < 2 or not 1 <= q <= p - 1 or math.gcd(p, q) != 1:
        raise InvalidParameterError(f"invalid lens space parameters L({p},{q})")
    return 1 if (q * q) % p == 1 else 2
