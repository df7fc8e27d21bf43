"""Exponential and logarithm on the exact fragment.

exp is defined by  e^x = w^(x'/w) * e^(x'')  where x' is the purely infinite
part and x'' the infinitesimal part; a nonzero real part would need the
transcendental e^r and is rejected.  ln inverts this through
y = w^(z0) * r0 * (1 + d):  ln y = w*z0 + ln(1+d), restricted to r0 = 1 and
to leading exponents whose own exponents all exceed -1 (the domain in which
a logarithm exists at all).  Both series are truncated after max_terms
orders and flag exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (LeadingCoefficientNotOne, NonPositive, NotInDomain,
                     RealPartNotZero, ZeroInput)
from .surreal import (MINUS_ONE, ONE, OMEGA, ZERO, Number, TruncatedNumber,
                      add, exp_as_number, exp_cmp, from_rational, from_terms,
                      mul, negate, omega_pow, sign)


@dataclass(frozen=True)
class Decomposition:
    purely_infinite: Number
    real_part: Fraction
    infinitesimal: Number


def decompose(x: Number) -> Decomposition:
    """Split by exponent sign: positive / zero / negative."""
    inf, real, small = [], Fraction(0), []
    for e, c in x.terms:
        s = exp_cmp(e, ZERO)
        if s > 0:
            inf.append((e, c))
        elif s == 0:
            real = c
        else:
            small.append((e, c))
    return Decomposition(Number(tuple(inf)), real, Number(tuple(small)))


def _shift_exponents(x: Number, delta: Number) -> Number:
    return from_terms((add(exp_as_number(e), delta), c) for e, c in x.terms)


def exp(x: Number, max_terms: int = 8) -> TruncatedNumber:
    """e^x for x with zero real part; exact iff x has no infinitesimal part."""
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    d = decompose(x)
    if d.real_part:
        raise RealPartNotZero("exp needs a zero exponent-0 coefficient, got %s"
                              % (d.real_part,))
    factor = omega_pow(_shift_exponents(d.purely_infinite, MINUS_ONE))
    if not d.infinitesimal:
        return TruncatedNumber(factor, True)
    series = ZERO
    power = ONE
    for n in range(max_terms):
        series = add(series, mul(power, from_rational(Fraction(1, factorial(n)))))
        power = mul(power, d.infinitesimal)
    return TruncatedNumber(mul(factor, series), False, max_terms)


def in_ln_domain(y: Number) -> bool:
    """True iff y > 0 and every exponent in the normal form of y's leading
    exponent exceeds -1."""
    if sign(y) <= 0:
        return False
    z0 = exp_as_number(y.terms[0][0])
    return all(exp_cmp(t, MINUS_ONE) > 0 for t, _ in z0.terms)


def ln(y: Number, max_terms: int = 8) -> TruncatedNumber:
    """ln y = w*z0 + ln(1+d) for y = w^z0 * (1+d); exact iff d = 0."""
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    if sign(y) <= 0:
        raise NonPositive("ln of a non-positive number")
    if not in_ln_domain(y):
        raise NotInDomain("leading exponent has an exponent <= -1")
    e1, r1 = y.terms[0]
    if r1 != 1:
        raise LeadingCoefficientNotOne("leading coefficient %s != 1" % (r1,))
    z0 = exp_as_number(e1)
    main = mul(OMEGA, z0)
    rest = Number(y.terms[1:])
    if not rest:
        return TruncatedNumber(main, True)
    delta = _shift_exponents(rest, negate(z0))
    series = ZERO
    power = delta
    for n in range(1, max_terms + 1):
        series = add(series, mul(power, from_rational(Fraction((-1) ** (n - 1), n))))
        power = mul(power, delta)
    return TruncatedNumber(add(main, series), False, max_terms)


def leader(y: Number) -> Number:
    """w^z0, the simplest member of y's commensurability class."""
    if not y.terms:
        raise ZeroInput("leader(0)")
    return Number(((y.terms[0][0], Fraction(1)),))
