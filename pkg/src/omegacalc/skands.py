"""Skands and coskands: finitely-described transfinite nested tuples.

A skand assigns to every ordinal position in a clutch region [start,
start+length) a component (a founded-set term), with decreasing nesting;
a coskand nests the other way.  Components are described by finitely many
segments, each a constant or a repeating cycle over an ordinal length.
Cycle values restart at limit positions: the value at offset limit+m is
values[m mod n].

Equality of two descriptions, the reflexivity / self-similarity /
periodicity predicates and a canonical founded-set encoding are all decided
symbolically on the finite description; nothing is ever enumerated
transfinitely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfiniteLength, InvalidPeriod, OutOfClutchRegion
from .ordinals import OMEGA, ONE as OONE, ZERO as OZERO, Ordinal, \
    classify_ordinal, divmod_omega_pow
from .surreal import Number, from_ordinal, from_rational, invert, negate

# -- founded-set terms ------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Fset:
    elements: frozenset = frozenset()

    @staticmethod
    def of(*elems) -> "Fset":
        return Fset(frozenset(elems))

    def __str__(self):
        return "{%s}" % ",".join(str(e) for e in sorted_elements(self))


EMPTY = Fset()


def _term_key(t):
    if isinstance(t, Atom):
        return (0, t.name)
    return (1, tuple(sorted(_term_key(e) for e in t.elements)))


def sorted_elements(s: Fset):
    return sorted(s.elements, key=_term_key)


def kpair(a, b) -> Fset:
    """Kuratowski ordered pair {{a},{a,b}}."""
    return Fset.of(Fset.of(a), Fset.of(a, b))


def nat_code(n: int) -> Fset:
    t = EMPTY
    codes = []
    for _ in range(n):
        codes.append(t)
        t = Fset(frozenset(codes))
    return t


def ordinal_code(o: Ordinal) -> Fset:
    return Fset(frozenset(kpair(ordinal_code(e), nat_code(c))
                          for e, c in o.terms))


# -- patterns and transfinite maps -----------------------------------------


@dataclass(frozen=True)
class Constant:
    value: object


@dataclass(frozen=True)
class Cycle:
    values: tuple


def _primitive(values: tuple) -> tuple:
    n = len(values)
    for p in range(1, n):
        if n % p == 0 and values == values[p:] + values[:p]:
            return values[:p]
    return values


def _norm_pattern(pat):
    if isinstance(pat, Cycle):
        vals = _primitive(tuple(pat.values))
        if len(vals) == 1:
            return Constant(vals[0])
        return Cycle(vals)
    return pat


@dataclass(frozen=True)
class TransfiniteMap:
    segments: tuple = ()

    @staticmethod
    def from_segments(segs) -> "TransfiniteMap":
        out = []
        for length, pat in segs:
            if not isinstance(length, Ordinal):
                length = Ordinal.from_int(length)
            if not length:
                continue
            pat = _norm_pattern(pat)
            if out and isinstance(pat, Constant) and out[-1][1] == pat:
                out[-1] = (out[-1][0] + length, pat)
            else:
                out.append((length, pat))
        return TransfiniteMap(tuple(out))

    @property
    def total(self) -> Ordinal:
        t = OZERO
        for length, _ in self.segments:
            t = t + length
        return t

    def value_at(self, offset: Ordinal):
        for length, pat in self.segments:
            if offset.cmp(length) < 0:
                return _pattern_value(pat, offset)
            offset = offset.sub_left(length)
        raise OutOfClutchRegion("offset beyond the described region")

    def slice_from(self, offset: Ordinal) -> "TransfiniteMap":
        segs = list(self.segments)
        out = []
        i = 0
        while i < len(segs):
            length, pat = segs[i]
            if not offset:
                out.extend(segs[i:])
                break
            if offset.cmp(length) >= 0:
                offset = offset.sub_left(length)
                i += 1
                continue
            remaining = length.sub_left(offset)
            out.extend(_cut_pattern_tail(pat, offset, remaining))
            out.extend(segs[i + 1:])
            break
        else:
            if offset:
                raise OutOfClutchRegion("offset beyond the described region")
        return TransfiniteMap.from_segments(out)

    def take(self, length: Ordinal) -> "TransfiniteMap":
        out = []
        left = length
        for seglen, pat in self.segments:
            if not left:
                break
            if seglen.cmp(left) <= 0:
                out.append((seglen, pat))
                left = left.sub_left(seglen)
            else:
                out.append((left, pat))
                left = OZERO
        if left:
            raise OutOfClutchRegion("length beyond the described region")
        return TransfiniteMap.from_segments(out)

    def sub(self, lo: Ordinal, hi: Ordinal) -> "TransfiniteMap":
        return self.slice_from(lo).take(hi.sub_left(lo))

    def boundaries(self) -> list:
        """Cumulative start offsets of each segment (first is 0)."""
        out, t = [], OZERO
        for length, _ in self.segments:
            out.append(t)
            t = t + length
        return out

    def word(self):
        """The first w positions as an ultimately periodic word:
        (prefix values, period values or None when the map is finite)."""
        prefix = []
        for length, pat in self.segments:
            if length.is_finite():
                n = length.as_int()
                if isinstance(pat, Constant):
                    prefix.extend([pat.value] * n)
                else:
                    prefix.extend(pat.values[i % len(pat.values)]
                                  for i in range(n))
                continue
            if isinstance(pat, Constant):
                return tuple(prefix), (pat.value,)
            return tuple(prefix), tuple(pat.values)
        return tuple(prefix), None


def _pattern_value(pat, offset: Ordinal):
    if isinstance(pat, Constant):
        return pat.value
    m = offset.finite_part()
    return pat.values[m % len(pat.values)]


def _cut_pattern_tail(pat, offset: Ordinal, remaining: Ordinal):
    """Segments describing a pattern's tail from `offset`, given that
    `remaining` positions are left.  Cycles restart at limit positions, so a
    mid-phase cut needs a rotated head block up to the next limit."""
    if isinstance(pat, Constant):
        return [(remaining, pat)]
    values = pat.values
    n = len(values)
    phase = offset.finite_part() % n
    if phase == 0:
        return [(remaining, pat)]
    rotated = Cycle(values[phase:] + values[:phase])
    if remaining.cmp(OMEGA) <= 0:
        return [(remaining, rotated)]
    return [(OMEGA, rotated), (remaining.sub_left(OMEGA), pat)]


# -- piecewise pointwise-equality decision ---------------------------------
#
# A piece is ('c', value) or ('y', values, phase); a cycle piece evaluates
# to values[(phase+m) % n] at finite offsets m and to values[m % n] at
# offsets limit+m (phase information dies at the first limit).


def _piece_of(pat):
    if isinstance(pat, Constant):
        return ('c', pat.value)
    return ('y', pat.values, 0)


def _piece_tail(piece, cut: Ordinal):
    if piece[0] == 'c':
        return piece
    _, values, phase = piece
    if cut.is_finite():
        return ('y', values, (phase + cut.as_int()) % len(values))
    return ('y', values, cut.finite_part() % len(values))


def _pieces_equal(pa, pb, length: Ordinal) -> bool:
    if pa[0] == 'c' and pb[0] == 'c':
        return pa[1] == pb[1]
    if pa[0] == 'c':
        pa, pb = pb, pa
    if pb[0] == 'c':
        _, values, phase = pa
        target = pb[1]
        if length.is_finite():
            n = len(values)
            return all(values[(phase + i) % n] == target
                       for i in range(length.as_int()))
        return all(v == target for v in values)
    _, va, fa = pa
    _, vb, fb = pb
    na, nb = len(va), len(vb)
    if length.is_finite():
        span = length.as_int()
        return all(va[(fa + i) % na] == vb[(fb + i) % nb] for i in range(span))
    span = math.lcm(na, nb)
    if not all(va[(fa + i) % na] == vb[(fb + i) % nb] for i in range(span)):
        return False
    if length.cmp(OMEGA) > 0:
        # offsets with a limit part reset both phases
        return all(va[i % na] == vb[i % nb] for i in range(span))
    return True


def map_equal(a: TransfiniteMap, b: TransfiniteMap) -> bool:
    """Pointwise equality of two maps over the same total length."""
    if a.total != b.total:
        return False
    qa = [(length, _piece_of(pat)) for length, pat in a.segments]
    qb = [(length, _piece_of(pat)) for length, pat in b.segments]
    ia = ib = 0
    while ia < len(qa) and ib < len(qb):
        la, pa = qa[ia]
        lb, pb = qb[ib]
        c = la.cmp(lb)
        common = la if c <= 0 else lb
        if not _pieces_equal(pa, pb, common):
            return False
        if c == 0:
            ia += 1
            ib += 1
        elif c < 0:
            ia += 1
            qb[ib] = (lb.sub_left(common), _piece_tail(pb, common))
        else:
            ib += 1
            qa[ia] = (la.sub_left(common), _piece_tail(pa, common))
    return ia == len(qa) and ib == len(qb)


# -- canonical form ---------------------------------------------------------


def normalize_map(m: TransfiniteMap) -> TransfiniteMap:
    """Rewrite to the canonical description: primitive cycles of limit
    length, expanded finite runs, merged constants, and cycle phase pushed
    out into explicit unit prefixes only where unavoidable."""
    segs = []
    for length, pat in m.segments:
        pat = _norm_pattern(pat)
        if isinstance(pat, Cycle):
            lim, fin = length.limit_part(), length.finite_part()
            if lim:
                segs.append((lim, pat))
            for i in range(fin):
                segs.append((OONE, Constant(pat.values[i % len(pat.values)])))
        else:
            segs.append((length, pat))
    changed = True
    guard = 0
    while changed:
        changed = False
        guard += 1
        if guard > 1000:
            raise RuntimeError("normalisation failed to stabilise")
        # merge adjacent equal constants / equal cycles
        merged = []
        for length, pat in segs:
            if merged:
                plen, ppat = merged[-1]
                if isinstance(pat, Constant) and ppat == pat:
                    merged[-1] = (plen + length, pat)
                    changed = True
                    continue
                if isinstance(pat, Cycle) and ppat == pat:
                    merged[-1] = (plen + length, pat)
                    changed = True
                    continue
            merged.append((length, pat))
        segs = merged
        # rotation shift: an exactly-w cycle followed by a rotation of the
        # same cycle re-expresses as a unit prefix plus the later cycle
        for i in range(len(segs) - 1):
            (l1, p1), (l2, p2) = segs[i], segs[i + 1]
            if (isinstance(p1, Cycle) and isinstance(p2, Cycle)
                    and l1 == OMEGA and len(p1.values) == len(p2.values)
                    and p1 != p2):
                n = len(p2.values)
                for r in range(1, n):
                    if p2.values[n - r:] + p2.values[:n - r] == p1.values:
                        units = [(OONE, Constant(v))
                                 for v in p2.values[n - r:]]
                        segs[i:i + 2] = units + [(l1 + l2, p2)]
                        changed = True
                        break
            if changed:
                break
        if changed:
            continue
        # a full aligned period written as finite constants before a cycle
        # of limit length folds back into the cycle (n + L = L)
        for i in range(1, len(segs)):
            length, pat = segs[i]
            if not (isinstance(pat, Cycle) and length.is_limit()):
                continue
            need = list(pat.values)
            j = i
            while need and j > 0:
                plen, ppat = segs[j - 1]
                if not (isinstance(ppat, Constant) and plen.is_finite()):
                    break
                take = min(plen.as_int(), len(need))
                if any(v != ppat.value for v in need[-take:]):
                    break
                del need[-take:]
                j -= 1
            if not need:
                consumed = len(pat.values)
                k = i - 1
                while consumed:
                    plen, ppat = segs[k]
                    avail = plen.as_int()
                    if avail <= consumed:
                        consumed -= avail
                        del segs[k]
                        i -= 1
                        k -= 1
                    else:
                        segs[k] = (Ordinal.from_int(avail - consumed), ppat)
                        consumed = 0
                changed = True
                break
        if changed:
            continue
        # absorb a matching unit constant into a following exactly-w cycle
        for i in range(len(segs) - 1):
            (l1, p1), (l2, p2) = segs[i], segs[i + 1]
            if (isinstance(p1, Constant) and isinstance(p2, Cycle)
                    and l1.is_finite() and l2 == OMEGA
                    and p1.value == p2.values[-1]):
                rot = Cycle((p2.values[-1],) + p2.values[:-1])
                k = l1.as_int()
                repl = ([(Ordinal.from_int(k - 1), p1)] if k > 1 else [])
                segs[i:i + 2] = repl + [(OMEGA, rot)]
                changed = True
                break
    return TransfiniteMap(tuple(segs))


# -- skand / coskand values --------------------------------------------------


@dataclass(frozen=True)
class Skand:
    start: Ordinal
    mapping: TransfiniteMap

    def __post_init__(self):
        if not self.mapping.total:
            raise ValueError("a skand has length >= 1")

    @property
    def length(self) -> Ordinal:
        return self.mapping.total

    @property
    def end(self) -> Ordinal:
        return self.start + self.length

    def __repr__(self):
        return "Skand<[%s, %s): %d segs>" % (self.start, self.end,
                                             len(self.mapping.segments))


@dataclass(frozen=True)
class Coskand:
    start: Ordinal
    mapping: TransfiniteMap

    def __post_init__(self):
        if not self.mapping.total:
            raise ValueError("a coskand has length >= 1")

    @property
    def length(self) -> Ordinal:
        return self.mapping.total

    @property
    def end(self) -> Ordinal:
        return self.start + self.length

    def __repr__(self):
        return "Coskand<[%s, %s): %d segs>" % (self.start, self.end,
                                               len(self.mapping.segments))


def make_skand(start, segments) -> Skand:
    return Skand(_ord(start), TransfiniteMap.from_segments(segments))


def make_coskand(start, segments) -> Coskand:
    return Coskand(_ord(start), TransfiniteMap.from_segments(segments))


def constant_skand(value, length, start=0) -> Skand:
    return make_skand(start, [(_ord(length), Constant(value))])


def cycle_skand(values, length, start=0) -> Skand:
    return make_skand(start, [(_ord(length), Cycle(tuple(values)))])


def _ord(x) -> Ordinal:
    return x if isinstance(x, Ordinal) else Ordinal.from_int(x)


def value_at(s, pos) -> object:
    pos = _ord(pos)
    if pos.cmp(s.start) < 0 or pos.cmp(s.end) >= 0:
        raise OutOfClutchRegion("%s outside [%s, %s)" % (pos, s.start, s.end))
    return s.mapping.value_at(pos.sub_left(s.start))


def restrict(s, from_pos):
    """The remainder on [from_pos, end)."""
    from_pos = _ord(from_pos)
    if from_pos.cmp(s.start) < 0 or from_pos.cmp(s.end) >= 0:
        raise OutOfClutchRegion("%s outside [%s, %s)" % (from_pos, s.start,
                                                         s.end))
    return type(s)(from_pos, s.mapping.slice_from(from_pos.sub_left(s.start)))


def normalize(s):
    """The canonical representative: clutch region moved to [0, length) and
    the description rewritten to canonical form."""
    return type(s)(OZERO, normalize_map(s.mapping))


def skand_equal(x: Skand, y: Skand) -> bool:
    """Equal iff the clutch regions have the same order type and the
    components agree under the unique isomorphism between them."""
    return map_equal(x.mapping, y.mapping)


def coskand_equal(x: Coskand, y: Coskand) -> bool:
    return map_equal(x.mapping, y.mapping)


def is_reflexive(s: Skand) -> bool:
    """Equal to its one-step tail: length >= w and one constant value on the
    first w positions."""
    if s.length.cmp(OMEGA) < 0:
        return False
    prefix, period = s.mapping.word()
    vals = set(prefix) | set(period)
    return len(vals) == 1


def is_self_similar(s: Skand) -> bool:
    """Equal to every tail: indecomposable infinite length and a globally
    constant component map."""
    cls = classify_ordinal(s.length)
    if not (cls.is_additively_indecomposable and s.length.cmp(OMEGA) >= 0):
        return False
    first = s.mapping.segments[0][1]
    return all(pat == first and isinstance(pat, Constant)
               for _, pat in s.mapping.segments)


# -- periodicity -------------------------------------------------------------


def _word_value(word, i: int):
    prefix, period = word
    if i < len(prefix):
        return prefix[i]
    if period is None:
        raise IndexError(i)
    return period[(i - len(prefix)) % len(period)]


def _word_is_tau_periodic(word, tau: int) -> bool:
    prefix, period = word
    if period is None:
        return False
    bound = len(prefix) + len(period) + tau
    return all(_word_value(word, i) == _word_value(word, i + tau)
               for i in range(bound))


def _stable_multiplier(step: Ordinal, points) -> int:
    """Least k with step*k >= every point (all points < sup step*k)."""
    k = 0
    for p in points:
        while (step * k).cmp(p) < 0:
            k += 1
    return k


def is_weakly_periodic(s: Skand, tau) -> bool:
    """Tails inside the window [0, w^(xi1+1)) repeat under a (+)tau shift,
    where xi1 is the leading exponent of tau (Cantor normal form)."""
    tau = _ord(tau)
    if not tau:
        raise InvalidPeriod("period must be a nonzero ordinal")
    xi1 = tau.leading_exp
    window = Ordinal.omega_pow(xi1 + 1)
    if s.length.cmp(window) < 0:
        return False
    m = s.mapping
    if tau.is_finite():
        return _word_is_tau_periodic(m.word(), tau.as_int())
    cuts = [b for b in m.boundaries() if b.cmp(window) < 0]
    k = _stable_multiplier(tau, cuts) + 2
    for sigma in range(k):
        a = m.sub(tau * sigma, tau * (sigma + 1))
        b = m.sub(tau * (sigma + 1), tau * (sigma + 2))
        if not map_equal(a, b):
            return False
    return True


def _critical_block_starts(m: TransfiniteMap):
    """Limit offsets whose w-blocks can differ: blocks containing a segment
    boundary plus the first interior block of each segment."""
    out = set()
    total = m.total
    for b in m.boundaries():
        lp = b.limit_part()
        if lp.cmp(total) < 0:
            out.add(lp)
        nxt = lp + OMEGA
        if nxt.cmp(total) < 0:
            out.add(nxt)
    return out


def _critical_window_multiples(m: TransfiniteMap, exp_plus_one: Ordinal):
    """Multiples of window = w^exp_plus_one worth separate checking: the
    ones bracketing a segment boundary, the first few, and one generic
    representative past the last boundary.  All other multiples land inside
    a single trailing segment and repeat the generic one."""
    window = Ordinal.omega_pow(exp_plus_one)
    quots = {OZERO, OONE, Ordinal.from_int(2)}
    for b in m.boundaries():
        q, _ = divmod_omega_pow(b, exp_plus_one)
        quots.update((q, q + 1, q + 2))
    out = []
    for q in quots:
        lam = window * q
        if lam.cmp(m.total) < 0 and lam not in out:
            out.append(lam)
    return out


def _critical_shift_points(m: TransfiniteMap, tau: Ordinal):
    """Positions P whose tails can behave differently under a +tau shift:
    window multiples and segment landmarks, each with a spread of finite
    offsets to exercise every cycle phase."""
    span = 2
    for _, pat in m.segments:
        if isinstance(pat, Cycle):
            span = max(span, 2 * len(pat.values))
    if tau.is_finite():
        span += tau.as_int()
    bases = list(_critical_window_multiples(m, tau.leading_exp + 1))
    for b in m.boundaries():
        for extra in (OZERO, OMEGA, OMEGA * 2):
            bases.append(b + extra)
    out = []
    for base in bases:
        for j in range(span + 1):
            p = base + Ordinal.from_int(j)
            if p.cmp(m.total) < 0 and p not in out:
                out.append(p)
    return out


def is_periodic(s: Skand, tau) -> bool:
    """Every tail is weakly periodic with the same period.  Equivalent to:
    every normal-form exponent of the length is > the leading exponent of
    tau, and tail(P) equals tail(P + tau) at every position P."""
    tau = _ord(tau)
    if not tau:
        raise InvalidPeriod("period must be a nonzero ordinal")
    xi1 = tau.leading_exp
    kappa, rem = divmod_omega_pow(s.length, xi1 + 1)
    if rem or not kappa:
        return False
    m = s.mapping
    if tau.is_finite():
        t = tau.as_int()
        for lam in _critical_block_starts(m):
            if not _word_is_tau_periodic(m.slice_from(lam).word(), t):
                return False
        return True
    for p in _critical_shift_points(m, tau):
        if not map_equal(m.slice_from(p), m.slice_from(p + tau)):
            return False
    return True


def is_strictly_periodic(s: Skand, tau) -> bool:
    """Periodic, with every w^(xi1+1)-block tail equal to the whole skand;
    forces the length to be w^mu."""
    tau = _ord(tau)
    if not is_periodic(s, tau):
        return False
    if not classify_ordinal(s.length).is_additively_indecomposable:
        return False
    xi1 = tau.leading_exp
    m = s.mapping
    for lam in _critical_window_multiples(m, xi1 + 1):
        if not lam:
            continue
        if not map_equal(m.slice_from(lam), m):
            return False
    return True


def min_finite_period(s: Skand):
    """Smallest finite n with is_weakly_periodic(s, n); None when no finite
    period up to the description-derived bound works."""
    if s.length.cmp(OMEGA) < 0:
        return None
    prefix, period = s.mapping.word()
    bound = len(prefix) + 2 * max(1, len(period))
    for n in range(1, bound + 1):
        if is_weakly_periodic(s, n):
            return n
    return None


# -- founded-set encoding -----------------------------------------------------


def _pattern_code(pat) -> Fset:
    if isinstance(pat, Constant):
        return kpair(Atom("const"), pat.value)
    listing = Fset(frozenset(kpair(nat_code(i), v)
                             for i, v in enumerate(pat.values)))
    return kpair(Atom("cycle"), listing)


def encode_skand(s: Skand) -> Fset:
    """Injective founded encoding of the normalized description: one ordered
    pair (pattern, (start offset, length)) per segment."""
    n = normalize(s)
    elems = []
    for off, (length, pat) in zip(n.mapping.boundaries(), n.mapping.segments):
        elems.append(kpair(_pattern_code(pat),
                           kpair(ordinal_code(off), ordinal_code(length))))
    return Fset(frozenset(elems))


# -- coskand specifics --------------------------------------------------------


def coskand_kind(c: Coskand) -> str:
    """'individual' when the region's supremum is a limit ordinal (nothing
    can contain such a coskand as a member), else 'founded-set'."""
    return "individual" if c.length.is_limit() else "founded-set"


def coskand_to_setterm(c: Coskand) -> Fset:
    """Unroll a finite-length coskand into the ordinary founded set built by
    increasing nesting."""
    if not c.length.is_finite():
        raise InfiniteLength("only finite coskands are ordinary sets")
    n = c.length.as_int()
    comps = [c.mapping.value_at(Ordinal.from_int(i)) for i in range(n)]
    for comp in comps:
        if not isinstance(comp, Fset):
            raise ValueError("components must be set terms, got %r" % (comp,))
    acc = comps[0]
    for comp in comps[1:]:
        acc = Fset(comp.elements | frozenset([acc]))
    return acc


def prepend_component(s: Skand, component) -> Skand:
    """The set {component-elements, s}: one more layer of decreasing nesting."""
    return Skand(OZERO, TransfiniteMap.from_segments(
        ((OONE, Constant(component)),) + s.mapping.segments))


# -- brace coordinates ---------------------------------------------------------


def brace_coordinates(s, prefix: int):
    """Conway coordinates of the first `prefix` brace pairs: (-1/a, 1/a) per
    position for skands, (-a, a) for coskands, with the position-0
    conventions (-2, 2) and (-1/2, 1/2)."""
    out = []
    pos = s.start
    decreasing = isinstance(s, Skand)
    for _ in range(prefix):
        if pos.cmp(s.end) >= 0:
            break
        if not pos:
            if decreasing:
                pair = (from_rational(-2), from_rational(2))
            else:
                half = from_rational(Fraction(1, 2))
                pair = (negate(half), half)
        else:
            v = from_ordinal(pos)
            if decreasing:
                inv = invert(v).value
                pair = (negate(inv), inv)
            else:
                pair = (negate(v), v)
        out.append(pair)
        pos = pos + OONE
    return out


# -- Mirimanoff equations -------------------------------------------------------


@dataclass(frozen=True)
class Reflexive:
    """X = {x0, x1, ..., X}."""
    components: frozenset


@dataclass(frozen=True)
class Periodic:
    """X = {block0, {block1, { ... {block(n-1), X} ... }}}."""
    blocks: tuple


@dataclass(frozen=True)
class Extraordinary:
    """X = {block0, {block1, {block2, ...}}} with a described prefix."""
    blocks: tuple
    prefix_length: int


def _block_set(b) -> Fset:
    if isinstance(b, Fset):
        return b
    return Fset(frozenset(b))


def solve_mirimanoff(eq) -> Skand:
    """The canonical witness over [0, w); the solution family also contains
    every longer skand with the same first-w prefix."""
    if isinstance(eq, Reflexive):
        return constant_skand(Fset(eq.components), OMEGA)
    if isinstance(eq, Periodic):
        vals = tuple(_block_set(b) for b in eq.blocks)
        return cycle_skand(vals, OMEGA)
    if isinstance(eq, Extraordinary):
        blocks = [_block_set(b) for i, b in
                  zip(range(eq.prefix_length), eq.blocks)]
        if not blocks:
            raise ValueError("prefix_length must be >= 1")
        segs = [(OONE, Constant(b)) for b in blocks[:-1]]
        segs.append((OMEGA, Constant(blocks[-1])))
        return make_skand(0, segs)
    raise TypeError("not a Mirimanoff equation: %r" % (eq,))


def is_solution(s: Skand, eq) -> bool:
    """Checks the defining first-w structure of the equation."""
    if s.length.cmp(OMEGA) < 0:
        return False
    word = s.mapping.word()
    if isinstance(eq, Reflexive):
        target = Fset(eq.components)
        prefix, period = word
        return all(v == target for v in prefix) and \
            all(v == target for v in period)
    if isinstance(eq, Periodic):
        vals = tuple(_block_set(b) for b in eq.blocks)
        n = len(vals)
        prefix, period = word
        bound = len(prefix) + math.lcm(max(len(period), 1), n) + n
        return all(_word_value(word, i) == vals[i % n] for i in range(bound))
    if isinstance(eq, Extraordinary):
        blocks = [_block_set(b) for i, b in
                  zip(range(eq.prefix_length), eq.blocks)]
        return all(_word_value(word, i) == b for i, b in enumerate(blocks))
    raise TypeError("not a Mirimanoff equation: %r" % (eq,))
