"""Exact arithmetic of 2-bridge knot/link parameters.

A 2-bridge knot or link b(alpha, beta) is classified by alpha > 1 and the
residue class of beta mod 2*alpha (coprime to alpha).  alpha odd gives a
knot, alpha even a 2-component link.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class BadAlpha(ValueError):
    pass


class NonCoprime(ValueError):
    pass


class NotALink(ValueError):
    pass


class NotAKnot(ValueError):
    pass


class NoEvenRepresentative(ValueError):
    pass


# exact rationals; no floats anywhere
Rational = Fraction


@dataclass(frozen=True)
class TwoBridge:
    """b(alpha, beta) with beta stored as the representative in [1, 2*alpha-1]."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha <= 1:
            raise BadAlpha("alpha must exceed 1, got %r" % (self.alpha,))
        if not 1 <= self.beta <= 2 * self.alpha - 1:
            raise NonCoprime("beta %r not reduced mod %d" % (self.beta, 2 * self.alpha))
        if gcd(self.alpha, self.beta) != 1:
            raise NonCoprime("gcd(%d, %d) != 1" % (self.alpha, self.beta))

    @property
    def is_knot(self) -> bool:
        return self.alpha % 2 == 1

    @property
    def is_link(self) -> bool:
        return self.alpha % 2 == 0

    def __str__(self):
        return "b(%d,%d)" % (self.alpha, self.beta)


@dataclass(frozen=True)
class ContinuedFraction:
    """Tower c_1 + 1/(c_2 + 1/(... + 1/c_m)) with nonzero integer entries."""

    entries: tuple

    def __post_init__(self):
        if not self.entries or any(c == 0 for c in self.entries):
            raise ValueError("entries must be a nonempty sequence of nonzero integers")

    def value(self) -> Fraction:
        v = Fraction(self.entries[-1])
        for c in reversed(self.entries[:-1]):
            v = c + 1 / v
        return v


@dataclass(frozen=True)
class EvenConwayForm:
    """Parameters (q_j, s_j) of the all-even expansion [-2q_1, 2s_1, ..., -2q_m, 2s_m].

    For a link the trailing 2*s_m entry is absent, so s has length m - 1.
    """

    m: int
    q: tuple
    s: tuple

    def __post_init__(self):
        if self.m < 1 or len(self.q) != self.m or len(self.s) not in (self.m, self.m - 1):
            raise ValueError("inconsistent even form")

    def entries(self) -> tuple:
        out = []
        for j in range(self.m):
            out.append(-2 * self.q[j])
            if j < len(self.s):
                out.append(2 * self.s[j])
        return tuple(out)

    def value(self) -> Fraction:
        return ContinuedFraction(self.entries()).value()


def normalize(alpha: int, beta: int) -> TwoBridge:
    """Reduce beta mod 2*alpha into [1, 2*alpha-1] and validate coprimality."""
    if alpha <= 1:
        raise BadAlpha("alpha must exceed 1, got %r" % (alpha,))
    b = beta % (2 * alpha)
    if gcd(alpha, b) != 1:
        raise NonCoprime("gcd(%d, %d) != 1" % (alpha, beta))
    return TwoBridge(alpha, b)


def equivalent(a: TwoBridge, b: TwoBridge, oriented: bool = False) -> bool:
    """Schubert equivalence: same alpha and beta' congruent to beta^{+-1}.

    The congruence is mod alpha for knots and unoriented links, mod 2*alpha
    for oriented links.
    """
    if a.alpha != b.alpha:
        return False
    mod = 2 * a.alpha if (oriented and a.is_link) else a.alpha
    return b.beta % mod in (a.beta % mod, pow(a.beta, -1, mod))


def mirror(t: TwoBridge) -> TwoBridge:
    """Mirror image b(alpha, -beta)."""
    return normalize(t.alpha, -t.beta)


def reorient_component(t: TwoBridge) -> TwoBridge:
    """Reverse the orientation of one component: b(alpha, beta - alpha)."""
    if not t.is_link:
        raise NotALink(str(t))
    return normalize(t.alpha, t.beta - t.alpha)


def beta_interior(t: TwoBridge) -> int:
    """The representative of beta (or beta - alpha) lying in (0, alpha)."""
    return t.beta if t.beta < t.alpha else t.beta - t.alpha


def cf_expand(t: TwoBridge) -> ContinuedFraction:
    """Plain continued fraction of alpha/beta, beta taken in (0, alpha)."""
    num, den = t.alpha, beta_interior(t)
    entries = []
    while den:
        c = num // den
        entries.append(c)
        num, den = den, num - c * den
    return ContinuedFraction(tuple(entries))


def _nearest_even_quotient(a: int, b: int) -> int:
    # even q with a = q*b + r, |r| < |b|
    q = a // b
    if q % 2 == 0 and abs(a - q * b) < abs(b):
        return q
    if (q + 1) % 2 == 0 and abs(a - (q + 1) * b) < abs(b):
        return q + 1
    if (q - 1) % 2 == 0 and abs(a - (q - 1) * b) < abs(b):
        return q - 1
    raise NoEvenRepresentative("no even quotient for %d / %d" % (a, b))


def _even_numerator_candidates(t: TwoBridge):
    if t.is_knot:
        b = t.beta % t.alpha
        bi = pow(b, -1, t.alpha)
        return [x for x in (b, bi, b - t.alpha, bi - t.alpha) if x and x % 2 == 0]
    # link: beta is odd already; reduce into (-alpha, alpha)
    b = t.beta if t.beta < t.alpha else t.beta - 2 * t.alpha
    return [b]


def even_cf_expand(t: TwoBridge) -> EvenConwayForm:
    """All-even continued fraction of alpha over an equivalent representative.

    For a knot the denominator is replaced by an even representative
    (beta^{+-1} mod alpha, shifted by -alpha if needed); repeated
    nearest-even division then yields even entries [-2q_1, 2s_1, ...],
    an even count of them for knots and an odd count for links.
    """
    for bp in _even_numerator_candidates(t):
        num, den = t.alpha, bp
        entries = []
        try:
            while den:
                c = _nearest_even_quotient(num, den)
                entries.append(c)
                num, den = den, num - c * den
        except NoEvenRepresentative:
            continue
        if t.is_knot and len(entries) % 2 == 1:
            continue
        if t.is_link and len(entries) % 2 == 0:
            continue
        q = tuple(-entries[i] // 2 for i in range(0, len(entries), 2))
        s = tuple(entries[i] // 2 for i in range(1, len(entries), 2))
        form = EvenConwayForm(len(q), q, s)
        if form.value() != Fraction(t.alpha, bp):
            raise NoEvenRepresentative("re-evaluation failed for %s" % t)
        return form
    raise NoEvenRepresentative(str(t))


def linking_number(t: TwoBridge) -> int:
    """Linking number of the two components: sum of (-1)^[(2h-1) beta / alpha]."""
    if not t.is_link:
        raise NotALink(str(t))
    return sum((-1) ** (((2 * h - 1) * t.beta) // t.alpha) for h in range(1, t.alpha // 2 + 1))


def is_genus_one(t: TwoBridge) -> bool:
    """Whether a knot has genus one.

    With beta replaced by an even equivalent representative, the test is
    divisibility of (alpha - 1)/4 or (alpha + 1)/4 (by alpha mod 4) by beta/2.
    """
    if not t.is_knot:
        raise NotAKnot(str(t))
    target = (t.alpha - 1) // 4 if t.alpha % 4 == 1 else (t.alpha + 1) // 4
    b = t.beta % t.alpha
    for x in (b, pow(b, -1, t.alpha)):
        even = x if x % 2 == 0 else x - t.alpha
        if target % (abs(even) // 2) == 0:
            return True
    return False
