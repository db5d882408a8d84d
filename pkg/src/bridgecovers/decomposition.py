"""Two-step factorization of singly-cyclic coverings of 2-bridge links.

A singly-cyclic covering M_{n,k} of b(alpha, beta) factors through an
intermediate orbifold: quotient first by the subgroup of order d = gcd(n, k)
acting with axis the first component, leaving the link L(d, alpha_1/beta)
with alpha_1 = alpha/2, then take the remaining meridian-cyclic covering of
degree n/d.  This module does the arithmetic bookkeeping for that diagram
(degrees, component counts, branching indices) together with the monodromy
permutations that drive the orbit counts.
"""

from dataclasses import dataclass
from math import gcd

from .two_bridge import NotALink, Rational, TwoBridge, linking_number


@dataclass(frozen=True)
class LinkLDescriptor:
    """The link L(d, alpha_1/beta): d ladder strands closed over one box row.

    Not a diagram, just the parameters.  source_alpha keeps the alpha of the
    2-bridge link the descriptor came from (alpha_1 is its half, so the
    fraction alone does not determine it once reduced conventions drift).
    """

    d: int
    alpha1_over_beta: Rational
    l: int
    components: int
    source_alpha: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive, got %d" % self.d)
        if self.alpha1_over_beta <= 0:
            raise ValueError("alpha_1/beta must be positive")
        if self.components != 1 + gcd(self.d, self.l):
            raise ValueError("component count %d disagrees with 1 + gcd(%d, %d)"
                             % (self.components, self.d, self.l))


@dataclass(frozen=True)
class DecompositionResult:
    """Degrees and intermediate data of the covering factorization.

    upper_degree is the meridian-cyclic covering onto the intermediate link
    (branching index upper_degree on every component), lower_degree the
    cyclic covering of the base branched over one trivial component.
    """

    d: int
    upper_degree: int
    lower_degree: int
    intermediate: LinkLDescriptor
    base_indices: tuple

    def __post_init__(self):
        if self.lower_degree != self.d or self.intermediate.d != self.d:
            raise ValueError("lower degree must equal d")
        n = self.upper_degree * self.lower_degree
        if self.base_indices != (n, self.upper_degree):
            raise ValueError("base indices %r disagree with degrees (%d, %d)"
                             % (self.base_indices, n, self.upper_degree))

    def to_json(self) -> dict:
        inter = self.intermediate
        return {
            "d": self.d,
            "degrees": [self.upper_degree, self.lower_degree],
            "intermediate": {
                "d": inter.d,
                "alpha1": inter.alpha1_over_beta.numerator,
                "beta": inter.alpha1_over_beta.denominator,
                "l": inter.l,
                "components": inter.components,
                "index": self.upper_degree,
            },
        }


@dataclass(frozen=True)
class MonodromyRep:
    """Meridian images in the symmetric group: powers of the standard n-cycle."""

    n: int
    images: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("degree must be positive")
        shifts = []
        for perm in self.images:
            if len(perm) != self.n or set(perm) != set(range(self.n)):
                raise ValueError("image is not a permutation of 0..%d" % (self.n - 1))
            s = perm[0]
            if any(perm[i] != (i + s) % self.n for i in range(self.n)):
                raise ValueError("image is not a power of the standard cycle")
            shifts.append(s)
        if gcd(self.n, *shifts) != 1:
            raise ValueError("images generate an intransitive group")

    @property
    def shifts(self) -> tuple:
        return tuple(perm[0] for perm in self.images)


def decompose(t: TwoBridge, n: int, k: int) -> DecompositionResult:
    """Factor the (n; 1, k) covering of a 2-bridge link through L(d, alpha_1/beta).

    d = gcd(n, k); the intermediate link has 1 + gcd(d, l) components where l
    is the linking number of t, every component carrying branching index n/d.
    gcd(n, k) = 1 is allowed and degenerate: the upper covering is the whole
    covering and the intermediate link is t itself in its L(1, .) form.
    """
    if not t.is_link:
        raise NotALink(str(t))
    if n < 2:
        raise ValueError("degree must be at least 2, got %d" % n)
    k %= n
    if k == 0:
        raise ValueError("branching exponent must be nonzero mod n")
    d = gcd(n, k)
    l = linking_number(t)
    inter = LinkLDescriptor(
        d=d,
        alpha1_over_beta=Rational(t.alpha // 2, t.beta),
        l=l,
        components=1 + gcd(d, l),
        source_alpha=t.alpha,
    )
    return DecompositionResult(
        d=d,
        upper_degree=n // d,
        lower_degree=d,
        intermediate=inter,
        base_indices=(n, n // d),
    )


def build_monodromy(n: int, k: int) -> MonodromyRep:
    """Monodromy of the (n; 1, k) covering: m_1 -> sigma, m_2 -> sigma^k."""
    sigma = tuple((i + 1) % n for i in range(n))
    power = tuple((i + k) % n for i in range(n))
    return MonodromyRep(n, (sigma, power))


def _cycles(perm) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return count


def component_orbit_counts(rep: MonodromyRep) -> tuple:
    """(cycles of each meridian image, branching index of each preimage).

    The cycle count of sigma^{k_j} is the number of components over the j-th
    component of the base; each carries branching index n / (that count).
    """
    counts = tuple(_cycles(perm) for perm in rep.images)
    indices = tuple(rep.n // c for c in counts)
    return counts + (indices,)


def orbit_genus(rep: MonodromyRep) -> int:
    """Heegaard genus bound from the orbit data: n + 1 - sum of cycle counts."""
    counts = tuple(_cycles(perm) for perm in rep.images)
    return rep.n + 1 - sum(counts)
