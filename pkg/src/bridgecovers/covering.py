"""Cyclic branched coverings M_{n, k_1..k_v} of 2-bridge knots and links.

Covers the covering taxonomy (strictly / almost-strictly / meridian / singly /
monodromy-cyclic), equivalence and homeomorphism predicates, geometric
structure labels and Heegaard genus bounds.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .two_bridge import TwoBridge, equivalent, normalize


class BadNormalForm(ValueError):
    pass


class NotHyperbolic(ValueError):
    pass


class NotMeridianCyclic(ValueError):
    pass


@dataclass(frozen=True)
class CoveringSpec:
    """Degree n plus branching exponents, one per component of the link.

    Exponents are nonzero residues mod n generating Z_n, stored in [1, n-1].
    """

    n: int
    exponents: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("degree must be at least 2")
        if not self.exponents:
            raise ValueError("need at least one exponent")
        if any(k % self.n == 0 for k in self.exponents):
            raise ValueError("exponents must be nonzero mod n")
        object.__setattr__(self, "exponents", tuple(k % self.n for k in self.exponents))
        if gcd(self.n, *self.exponents) != 1:
            raise ValueError("exponents do not generate Z_%d" % self.n)

    @property
    def nu(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class CoveringClass:
    strictly: bool
    almost_strictly: bool
    meridian: bool
    singly: bool
    monodromy: bool

    def __post_init__(self):
        chain = (self.strictly, self.almost_strictly, self.meridian, self.singly, self.monodromy)
        for a, b in zip(chain, chain[1:]):
            if a and not b:
                raise ValueError("implication chain violated: %r" % (chain,))


class GeometryType(Enum):
    hyperbolic = "hyperbolic"
    euclidean = "euclidean"
    spherical = "spherical"
    nil = "nil"
    sl2r = "sl2r"
    undetermined = "undetermined"


@dataclass(frozen=True)
class GenusBounds:
    general: int
    braid: int | None = None
    symmetric: int | None = None


def _check_components(t: TwoBridge, spec: CoveringSpec):
    want = 1 if t.is_knot else 2
    if spec.nu != want:
        raise ValueError("%s has %d component(s), spec has %d exponent(s)"
                         % (t, want, spec.nu))


def classify(spec: CoveringSpec) -> CoveringClass:
    """Covering taxonomy flags from the branching exponents."""
    n, ks = spec.n, spec.exponents
    strictly = len(set(ks)) == 1
    almost = len({frozenset((k, (-k) % n)) for k in ks}) == 1
    merid = all(gcd(n, k) == 1 for k in ks)
    singly = any(gcd(n, k) == 1 for k in ks)
    return CoveringClass(strictly, almost, merid, singly, True)


def covering_equivalent(t: TwoBridge, s1: CoveringSpec, s2: CoveringSpec) -> bool:
    """Sufficient-condition test for equivalence of two coverings of a link.

    Both specs must be in singly-cyclic normal form (n; 1, k).  True means a
    listed condition certifies the equivalence (k' = k, or k k' = 1 mod n, or
    the reorientation move k -> -k when beta^2 = alpha +- 1 mod 2 alpha);
    False means no condition applies, not that the coverings differ.
    """
    if s1.n != s2.n:
        raise BadNormalForm("specs have different degrees")
    for s in (s1, s2):
        if s.nu != 2 or s.exponents[0] != 1:
            raise BadNormalForm("expected normal form (n; 1, k), got %r" % (s.exponents,))
    if not t.is_link:
        raise BadNormalForm("%s is not a link" % t)
    n = s1.n
    k, k2 = s1.exponents[1], s2.exponents[1]
    if k2 == k or (k * k2) % n == 1:
        return True
    if (t.beta * t.beta) % (2 * t.alpha) in (t.alpha + 1, t.alpha - 1):
        if k2 == (-k) % n or (k * k2) % n == n - 1:
            return True
    return False


def hyperbolic_homeomorphic(t: TwoBridge, n: int, k: int, k2: int) -> bool:
    """Exact homeomorphism test for meridian-cyclic coverings of a hyperbolic
    2-bridge link: k' = k^{+-1}, widened to k' = +-k^{+-1} when
    beta^2 = alpha +- 1 mod 2 alpha.  For a knot all exponents give the same
    covering, so the answer is True.
    """
    bmod = t.beta % t.alpha
    if bmod in (1, t.alpha - 1):
        raise NotHyperbolic(str(t))
    if gcd(n, k) != 1 or gcd(n, k2) != 1:
        raise NotMeridianCyclic("exponents %d, %d not coprime to %d" % (k, k2, n))
    if t.is_knot:
        return True
    k, k2 = k % n, k2 % n
    if k2 in (k, pow(k, -1, n)):
        return True
    if (t.beta * t.beta) % (2 * t.alpha) in (t.alpha + 1, t.alpha - 1):
        return k2 in ((-k) % n, (-pow(k, -1, n)) % n)
    return False


def geometry(t: TwoBridge, spec: CoveringSpec) -> GeometryType:
    """Geometric structure label, where the classification decides one.

    Torus-knot/link cases (beta = +-1 mod alpha) of strictly-cyclic coverings
    split by the sign of 1/n + 1/alpha - 1/2; non-toroidal meridian-cyclic
    coverings are hyperbolic except for the small degrees, where n = 2 gives
    lens spaces and the figure-eight degree-3 covering is euclidean.
    Returns undetermined rather than raising.
    """
    _check_components(t, spec)
    n = spec.n
    cls = classify(spec)
    if t.beta % t.alpha in (1, t.alpha - 1):
        if not cls.strictly:
            return GeometryType.undetermined
        x = Fraction(1, n) + Fraction(1, t.alpha) - Fraction(1, 2)
        if x > 0:
            return GeometryType.spherical
        if x == 0:
            return GeometryType.nil
        return GeometryType.sl2r
    if n == 2:
        return GeometryType.spherical
    if not cls.meridian:
        return GeometryType.undetermined
    if t.alpha == 5:
        if n == 3:
            return GeometryType.euclidean if equivalent(t, normalize(5, 2)) \
                else GeometryType.undetermined
        return GeometryType.hyperbolic
    return GeometryType.hyperbolic if n >= 3 else GeometryType.undetermined


def genus_bounds(t: TwoBridge, spec: CoveringSpec) -> GenusBounds:
    """Upper bounds on the Heegaard genus of the covering."""
    _check_components(t, spec)
    n = spec.n
    cls = classify(spec)
    if t.is_link:
        k1, k2 = spec.exponents
        general = n + 1 - gcd(n, k1) - gcd(n, k2)
    else:
        general = n - 1
    braid = None
    if cls.strictly:
        if t.beta % t.alpha in (1, t.alpha - 1):
            braid = min(t.alpha - 1, n - 1)
        elif t.alpha % 3 == 2 and t.alpha > 2:
            # alpha = 3c - 1 and beta equivalent to 3
            inv3 = pow(3, -1, t.alpha)
            if t.beta % t.alpha in {3 % t.alpha, -3 % t.alpha, inv3, -inv3 % t.alpha}:
                braid = min((t.alpha + 1) // 3, n - 1)
    symmetric = n - 1 if cls.strictly else None
    return GenusBounds(general, braid, symmetric)


def lens_recognize(t: TwoBridge, spec: CoveringSpec):
    """Recognize the covering as a lens space where the parameters force one.

    Degree-2 coverings give L(alpha, beta); coverings of the Hopf link
    b(2,1) with coprime exponent give L(n, k).  Returns None otherwise.
    """
    _check_components(t, spec)
    if spec.n == 2:
        return (t.alpha, t.beta % t.alpha)
    if t.alpha == 2:
        k1, k2 = spec.exponents
        if gcd(spec.n, k1) == 1:
            k = (pow(k1, -1, spec.n) * k2) % spec.n
            if gcd(spec.n, k) == 1:
                return (spec.n, k)
    return None
