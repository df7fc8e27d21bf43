"""Symbols of infinity, the jump calculus and the left-right construction.

A GapLabel marks a Dedekind gap in the number line.  It is indexed by the
simplest number adjacent to the defining sequence and deliberately carries
no arithmetic: gaps are not numbers.

gap_of covers the catalogued monotone sequence families; jump_report
answers, for a limit ordinal L, whether the jump (+inf_L, L] swallows an
isometric copy of [0, +inf_L) (it does exactly for additively
indecomposable L) and counts the jumps of each size w^v below L.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotIndecomposable, NotLimit, UnsupportedDescriptor
from .ordinals import OMEGA, Ordinal, classify_ordinal, divmod_omega_pow
from .ordinals import ZERO as OZERO
from .surreal import (Dyadic, Number, add, exp_as_number, exp_cmp,
                      from_ordinal, from_rational, from_terms, negate,
                      nf_cmp, sign)
from .surreal import ZERO as NZERO


@dataclass(frozen=True)
class GapLabel:
    sign: int          # +1 or -1
    index: Number      # never arithmetic-bearing; +/-inf_0 is the degenerate
                       # sup/inf of the empty set

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __str__(self):
        from .exprs import render_number
        return "%sinf_{%s}" % ("+" if self.sign > 0 else "-",
                               render_number(self.index))


# -- sequence descriptors -------------------------------------------------

@dataclass(frozen=True)
class OrdinalRamp:
    """(alpha) for 0 < alpha < lam, lam a limit ordinal."""
    lam: Ordinal


@dataclass(frozen=True)
class AddRamp:
    """(b + alpha) or (b - alpha) over alpha < length."""
    base: Number
    direction: int
    length: Ordinal = OMEGA


@dataclass(frozen=True)
class DyadicRamp:
    """(b -+ 1/2^alpha): direction is the sign in front of 1/2^alpha."""
    base: Number
    direction: int


@dataclass(frozen=True)
class GeometricRamp:
    """(b +- 2^alpha/w)."""
    base: Number
    direction: int


@dataclass(frozen=True)
class HarmonicRamp:
    """(1/alpha) for 0 < alpha < lam."""
    lam: Ordinal


@dataclass(frozen=True)
class ScaledHarmonic:
    """(b -+ 1/(2^alpha * w))."""
    base: Number
    direction: int


def _label(index: Number) -> GapLabel:
    s = sign(index)
    return GapLabel(1 if s >= 0 else -1, index)


def _exponents_all_above(b: Number, bound: Fraction) -> bool:
    cut = from_rational(bound)
    return all(exp_cmp(e, cut) > 0 for e, _ in b.terms)


def _exponents_all_at_least(b: Number, bound: Fraction) -> bool:
    cut = from_rational(bound)
    return all(exp_cmp(e, cut) >= 0 for e, _ in b.terms)


def gap_of(s) -> GapLabel:
    """The symbol of infinity of a catalogued monotone sequence."""
    if isinstance(s, OrdinalRamp):
        if not s.lam.is_limit():
            raise UnsupportedDescriptor("ordinal ramp needs a limit ordinal")
        return GapLabel(1, from_ordinal(s.lam))
    if isinstance(s, AddRamp):
        if s.length != OMEGA:
            raise UnsupportedDescriptor("only w-length ramps are catalogued")
        if s.direction > 0:
            # (beta*w + alpha) -> +inf_{(beta+1)*w}
            beta = _as_finite_multiple_of_omega(s.base)
            if beta is None:
                raise UnsupportedDescriptor("increasing ramp base must be beta*w")
            return GapLabel(1, from_terms([(from_rational(1), Fraction(beta + 1))]))
        # (w/2^beta - alpha) -> +inf_{w/2^(beta+1)}
        frac = _as_dyadic_multiple_of_omega(s.base)
        if frac is None:
            raise UnsupportedDescriptor("decreasing ramp base must be w/2^beta")
        return GapLabel(1, from_terms([(from_rational(1), frac / 2)]))
    if isinstance(s, DyadicRamp):
        if s.base != NZERO and not _exponents_all_above(s.base, Fraction(-1)):
            raise UnsupportedDescriptor("base outside the 1/w-type family")
        step = from_terms([(from_rational(-1), Fraction(s.direction))])
        return _label(add(s.base, step))
    if isinstance(s, GeometricRamp):
        if s.base != NZERO and not _exponents_all_at_least(s.base, Fraction(-1, 2)):
            raise UnsupportedDescriptor("base outside the w^(-1/2)-type family")
        step = from_terms([(from_rational(Fraction(-1, 2)), Fraction(s.direction))])
        return _label(add(s.base, step))
    if isinstance(s, HarmonicRamp):
        if not s.lam.is_limit():
            raise UnsupportedDescriptor("harmonic ramp needs a limit ordinal")
        if len(s.lam.terms) != 1:
            raise UnsupportedDescriptor("harmonic ramp needs a monomial length")
        e, c = s.lam.terms[0]
        return GapLabel(1, from_terms([(negate(from_ordinal(e)), Fraction(1, c))]))
    if isinstance(s, ScaledHarmonic):
        if s.base != NZERO and not _exponents_all_above(s.base, Fraction(-2)):
            raise UnsupportedDescriptor("base outside the 1/w^2-type family")
        step = from_terms([(from_rational(-2), Fraction(s.direction))])
        return _label(add(s.base, step))
    raise UnsupportedDescriptor("unknown descriptor %r" % (s,))


def _as_finite_multiple_of_omega(b: Number):
    """beta if b = w*beta with integer beta >= 0, else None."""
    if b == NZERO:
        return 0
    if len(b.terms) != 1:
        return None
    e, c = b.terms[0]
    if exp_cmp(e, from_rational(1)) == 0 and c.denominator == 1 and c > 0:
        return int(c)
    return None


def _as_dyadic_multiple_of_omega(b: Number):
    """c if b = w*c with dyadic 0 < c <= 1, else None."""
    if len(b.terms) != 1:
        return None
    e, c = b.terms[0]
    if exp_cmp(e, from_rational(1)) != 0 or not 0 < c <= 1:
        return None
    try:
        return Fraction(Dyadic(c))
    except ValueError:
        return None


# -- jumps ---------------------------------------------------------------

@dataclass(frozen=True)
class JumpReport:
    lam: Ordinal
    embeddable: bool
    translation_invariant: bool
    tails_same_type: bool
    census: tuple = field(default_factory=tuple)   # ((w^v, count), ...)


def jump_report(lam: Ordinal) -> JumpReport:
    """Flags are all equivalent to additive indecomposability of lam; the
    census counts, per jump size w^v, the limit ordinals <= lam whose normal
    form ends in a w^v term.  Computed symbolically from the normal form."""
    if not lam.is_limit():
        raise NotLimit("%r is not a limit ordinal" % (lam,))
    lead = lam.leading_exp
    if not lead.is_finite():
        raise UnsupportedDescriptor(
            "census needs a leading exponent below w (finite jump-size list)")
    indec = classify_ordinal(lam).is_additively_indecomposable
    census = []
    for v in range(1, lead.as_int() + 1):
        size = Ordinal.omega_pow(Ordinal.from_int(v))
        q, r = divmod_omega_pow(lam, Ordinal.from_int(v + 1))
        a = 0
        if r.terms and r.terms[0][0] == Ordinal.from_int(v):
            a = r.terms[0][1]
        count = OMEGA * q + a
        if count != OZERO:
            census.append((size, count))
    return JumpReport(lam, indec, indec, indec, tuple(census))


def _exceeds_all_ordinals_below(y: Number, mu: Ordinal) -> bool:
    """True iff y > kappa for every ordinal kappa < mu (mu >= 1)."""
    if mu == Ordinal.from_int(1):
        return nf_cmp(y, NZERO) > 0
    if mu.is_successor():
        pred = Ordinal(mu.terms[:-1] + (((OZERO, mu.terms[-1][1] - 1),)
                                        if mu.terms[-1][1] > 1 else ()))
        return nf_cmp(y, from_ordinal(pred)) > 0
    # mu limit: peel one copy of its last term w^m and recurse on the rest
    last_e, last_c = mu.terms[-1]
    head = Ordinal(mu.terms[:-1] + (((last_e, last_c - 1),) if last_c > 1 else ()))
    d = add(y, negate(from_ordinal(head)))
    return _exceeds_all_below_monomial(d, last_e)


def _exceeds_all_below_monomial(d: Number, m: Ordinal) -> bool:
    """True iff d > theta for every ordinal theta < w^m (m >= 1)."""
    if sign(d) <= 0:
        return False
    e1 = exp_as_number(d.terms[0][0])
    if m.is_successor():
        pred = Ordinal(m.terms[:-1] + (((OZERO, m.terms[-1][1] - 1),)
                                       if m.terms[-1][1] > 1 else ()))
        return nf_cmp(e1, from_ordinal(pred)) > 0
    return _exceeds_all_ordinals_below(e1, m)


def in_jump_interior(b: Number, lam: Ordinal) -> bool:
    """True iff b lies in the translation-stable interval
    (+inf_lam, +inf_{lam/2}) for lam = w^mu: alpha < b < lam - alpha for
    every ordinal alpha < lam.  On one-term numbers this is the exponent
    band (mu-1, mu) for successor mu, resp. exceeding every ordinal below mu
    for limit mu; lower terms with small exponents cannot leave the band."""
    cls = classify_ordinal(lam)
    if not (cls.is_additively_indecomposable and lam.is_limit()):
        raise NotIndecomposable("%r is not w^mu with mu >= 1" % (lam,))
    if not b.terms:
        return False
    mu = lam.leading_exp
    from .surreal import add, negate
    upper = add(from_ordinal(lam), negate(b))
    return (_exceeds_all_below_monomial(b, mu)
            and _exceeds_all_below_monomial(upper, mu))


# -- left-right construction ----------------------------------------------

def left_right_construct(steps: int):
    """Alternating halving of [0, 1]: choose the right half, then the left,
    and so on; collect the left endpoints and the right endpoints.  steps=n
    performs n+1 halvings, matching the catalogued chain."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    left, right = [Dyadic(0)], [Dyadic(1)]
    lo, hi = Fraction(0), Fraction(1)
    for k in range(steps + 1):
        mid = (lo + hi) / 2
        if k % 2 == 0:      # keep the right half: new left endpoint
            lo = mid
            left.append(Dyadic(mid))
        else:               # keep the left half: new right endpoint
            hi = mid
            right.append(Dyadic(mid))
    return left, right


# -- magnitude classification ----------------------------------------------

def classify(x: Number) -> str:
    """'zero' or '<sign> <infinitesimal|finite|infinite>' by leading exponent."""
    if not x.terms:
        return "zero"
    word = "positive" if sign(x) > 0 else "negative"
    c = exp_cmp(x.terms[0][0], NZERO)
    if c > 0:
        return word + " infinite"
    if c == 0:
        return word + " finite"
    return word + " infinitesimal"
