"""4-coloured graphs encoding closed orientable 3-manifolds.

The Lins-Mandel family G(n, p, q, c) and its generalization carry four
fixed-point-free involutions on the vertex set Z_n x Z_2p.  Checking that
every 3-residue is a 2-sphere decides whether the graph is a gem, i.e.
whether the associated pseudocomplex is a manifold.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd

from .covering import CoveringSpec
from .polyhedral import NotAManifold
from .two_bridge import TwoBridge, normalize


class DegenerateInvolution(ValueError):
    pass


class NotAGem(ValueError):
    pass


class TooLarge(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class NonIntegerGenus(ValueError):
    pass


class Sphere:
    """Sentinel for parameter ranges whose manifold collapses to S^3."""

    __slots__ = ()

    def __repr__(self):
        return "Sphere"


SPHERE = Sphere()

# the three essentially distinct cyclic orders of the four colours
CYCLIC_ORDERS = ((0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2))


@dataclass(frozen=True)
class ColouredGraph:
    """Connected 4-regular graph given by four fixed-point-free involutions.

    Vertices are 0..V-1; involutions[c][v] is the endpoint of the c-coloured
    edge at v.  Parallel edges of different colours are allowed.
    """

    involutions: tuple

    def __post_init__(self):
        if len(self.involutions) != 4:
            raise ValueError("need exactly four involutions")
        v_count = len(self.involutions[0])
        if v_count == 0 or v_count % 2:
            raise ValueError("vertex count must be positive and even")
        for c, inv in enumerate(self.involutions):
            if len(inv) != v_count:
                raise ValueError("involution %d acts on a different vertex set" % c)
            for v, w in enumerate(inv):
                if w == v:
                    raise DegenerateInvolution("colour %d fixes vertex %d" % (c, v))
                if not 0 <= w < v_count or inv[w] != v:
                    raise ValueError("colour %d is not an involution at vertex %d" % (c, v))
        if len(_component(self, range(4), 0)) != v_count:
            raise ValueError("graph is not connected")

    @property
    def vertex_count(self) -> int:
        return len(self.involutions[0])


@dataclass(frozen=True)
class LMParams:
    """Parameters (n, p, q, c): q reduced mod 2p, c mod n, gcd(p, q) = 1."""

    n: int
    p: int
    q: int
    c: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise ValueError("n and p must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError("gcd(p, q) must be 1")
        object.__setattr__(self, "q", self.q % (2 * self.p))
        object.__setattr__(self, "c", self.c % self.n)


@dataclass(frozen=True)
class GLMParams:
    """As LMParams plus a second column shift c' with gcd(n, c, c') = 1."""

    n: int
    p: int
    q: int
    c: int
    cprime: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise ValueError("n and p must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError("gcd(p, q) must be 1")
        if gcd(self.n, gcd(self.c, self.cprime)) != 1:
            raise ValueError("gcd(n, c, c') must be 1")
        object.__setattr__(self, "q", self.q % (2 * self.p))
        object.__setattr__(self, "c", self.c % self.n)
        object.__setattr__(self, "cprime", self.cprime % self.n)


@dataclass(frozen=True)
class DunwoodyParams:
    """Record of a Dunwoody family member; no arithmetic enforced."""

    a: int
    b: int
    c: int
    n: int
    r: int
    s: object = None  # None marks the shift parameter as unresolved


def eta(j: int, p: int) -> int:
    """+1 on residues 1..p mod 2p, -1 on the rest (so eta(0) = -1)."""
    return 1 if 1 <= j % (2 * p) <= p else -1


def _build(n: int, p: int, q: int, c: int, cp: int) -> ColouredGraph:
    width = 2 * p

    def idx(i, j):
        return (i % n) * width + (j % width)

    inv = [[], [], [], []]
    for v in range(n * width):
        i, j = divmod(v, width)
        inv[0].append(idx(i + c * eta(j - q, p), 1 - j + 2 * q))
        inv[1].append(idx(i + cp * eta(j, p), 1 - j))
        inv[2].append(idx(i, j + (-1) ** j))
        inv[3].append(idx(i, j - (-1) ** j))
    return ColouredGraph(tuple(tuple(col) for col in inv))


def build_lins_mandel(params: LMParams) -> ColouredGraph:
    """G(n, p, q, c) on Z_n x Z_2p with the four standard involutions."""
    return _build(params.n, params.p, params.q, params.c, 1)


def build_generalized(params: GLMParams) -> ColouredGraph:
    """Same as build_lins_mandel but colour 1 shifts columns by c'."""
    return _build(params.n, params.p, params.q, params.c, params.cprime)


def _component(g: ColouredGraph, colours, start: int) -> list:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for c in colours:
            w = g.involutions[c][v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def _components(g: ColouredGraph, colours) -> list:
    done = [False] * g.vertex_count
    comps = []
    for start in range(g.vertex_count):
        if done[start]:
            continue
        comp = _component(g, colours, start)
        for v in comp:
            done[v] = True
        comps.append(comp)
    return comps


def bicoloured_cycles(g: ColouredGraph, colours) -> list:
    """Sorted vertex counts of the cycles spanned by two colours."""
    a, b = colours
    if a == b or not (0 <= a < 4 and 0 <= b < 4):
        raise ValueError("need two distinct colours in 0..3")
    return sorted(len(comp) for comp in _components(g, (a, b)))


def is_bipartite(g: ColouredGraph) -> bool:
    side = [None] * g.vertex_count
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for inv in g.involutions:
            w = inv[v]
            if side[w] is None:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return False
    return True


def is_gem(g: ColouredGraph) -> bool:
    """True iff every 3-residue is a 2-sphere.

    For a component R of the graph on three colours, the represented surface
    has Euler characteristic (#bicoloured cycles inside R) - |R|/2; the
    sphere check is chi = 2.  This is the oracle the closed-form criterion
    is validated against.
    """
    cycle_id = {}
    for pair in combinations(range(4), 2):
        label = [0] * g.vertex_count
        for num, comp in enumerate(_components(g, pair)):
            for v in comp:
                label[v] = num
        cycle_id[pair] = label
    for missing in range(4):
        kept = tuple(c for c in range(4) if c != missing)
        for comp in _components(g, kept):
            cycles = sum(
                len({cycle_id[pair][v] for v in comp})
                for pair in combinations(kept, 2)
            )
            if cycles - len(comp) // 2 != 2:
                return False
    return True


def gem_closed_form(params) -> bool:
    """Arithmetic gem criterion: p even, a vanishing shift, or c = (-1)^q c'."""
    n = params.n
    if params.p % 2 == 0:
        return True
    cp = getattr(params, "cprime", 1)
    if params.c % n == 0 or cp % n == 0:
        return True
    return (params.c - (-1) ** params.q * cp) % n == 0


def is_crystallization(g: ColouredGraph) -> bool:
    """True iff deleting any one colour leaves the graph connected."""
    if not is_gem(g):
        raise NotAGem("graph has a non-spherical 3-residue")
    return all(
        len(_components(g, tuple(c for c in range(4) if c != missing))) == 1
        for missing in range(4)
    )


def represented_covering(params):
    """The 2-bridge link and covering spec a gem's manifold realizes.

    Returns SPHERE for the degenerate ranges (p = 1 or a vanishing shift);
    otherwise (b(p, q), spec) where the exponents are c' (links only) and -c
    taken mod n.
    """
    if not gem_closed_form(params):
        raise NotAManifold("parameters fail the gem criterion")
    n = params.n
    cp = getattr(params, "cprime", 1)
    if params.p == 1 or params.c % n == 0 or cp % n == 0:
        return SPHERE
    t = normalize(params.p, params.q)
    if t.is_knot:
        return t, CoveringSpec(n, (-params.c % n,))
    return t, CoveringSpec(n, (cp % n, -params.c % n))


def _rooted_match(g1: ColouredGraph, g2: ColouredGraph, sigma, w0: int) -> bool:
    # a colour-respecting map is forced once one vertex image is chosen
    image = [-1] * g1.vertex_count
    image[0] = w0
    stack = [0]
    while stack:
        v = stack.pop()
        for c in range(4):
            u = g1.involutions[c][v]
            w = g2.involutions[sigma[c]][image[v]]
            if image[u] == -1:
                image[u] = w
                stack.append(u)
            elif image[u] != w:
                return False
    return len(set(image)) == g1.vertex_count


def graph_isomorphic(g1: ColouredGraph, g2: ColouredGraph,
                     allow_colour_permutation: bool = False) -> bool:
    """Exact isomorphism decision by propagating rooted correspondences."""
    if g1.vertex_count > 200 or g2.vertex_count > 200:
        raise TooLarge("brute-force isomorphism capped at 200 vertices")
    if g1.vertex_count != g2.vertex_count:
        return False
    sigmas = permutations(range(4)) if allow_colour_permutation else ((0, 1, 2, 3),)
    for sigma in sigmas:
        for w0 in range(g2.vertex_count):
            if _rooted_match(g1, g2, sigma, w0):
                return True
    return False


def lm_isomorphic_closed_form(a: LMParams, b: LMParams) -> bool:
    """Isomorphism of G(n,p,q,c) graphs decided arithmetically (n, p > 2).

    For even p the answer depends on gcd(n, c): q' must be +-q^{+-1} mod 2p
    with c' = c (or c^{+-1} in the coprime case), or that shifted by p with
    c' negated.  For odd p the criterion is stated only on the gem range
    c = (-1)^q, where it reads q' = +-q^{+-1} mod p.
    """
    if a.n <= 2 or a.p <= 2 or b.n <= 2 or b.p <= 2:
        raise OutOfRange("isomorphism conditions require n, p > 2")
    if b.n != a.n or b.p != a.p:
        return False
    n, p = a.n, a.p
    if p % 2 == 0:
        qinv = pow(a.q, -1, 2 * p)
        plain = {x % (2 * p) for x in (a.q, -a.q, qinv, -qinv)}
        shifted = b.q in {(x + p) % (2 * p) for x in plain}
        if gcd(n, a.c) != 1:
            return (b.q in plain and b.c == a.c) or (shifted and b.c == -a.c % n)
        cs = {a.c, pow(a.c, -1, n)}
        return (b.q in plain and b.c in cs) or (shifted and b.c in {-x % n for x in cs})
    if a.c != (-1) ** a.q % n or b.c != (-1) ** b.q % n:
        raise OutOfRange("odd p conditions are stated only for c = (-1)^q")
    qinv = pow(a.q, -1, p)
    return b.q % p in {x % p for x in (a.q, -a.q, qinv, -qinv)}


def heegaard_genus(g: ColouredGraph, pairing) -> int:
    """Genus of the surface split along a cyclic colour order.

    chi sums the bicoloured cycle counts of the four adjacent colour pairs
    and subtracts the vertex count; the genus is 1 - chi/2.
    """
    if sorted(pairing) != [0, 1, 2, 3]:
        raise ValueError("pairing must be a cyclic order of all four colours")
    chi = -g.vertex_count
    for i in range(4):
        chi += len(_components(g, (pairing[i], pairing[(i + 1) % 4])))
    if chi % 2:
        raise NonIntegerGenus("odd Euler characteristic %d" % chi)
    return 1 - chi // 2


def dunwoody_params(a: int, r: int, n: int):
    """Record (a, 0, 1, n, r, s unresolved) and the knot b(2a+1, 2r) it covers."""
    if a <= 0 or r <= 0 or n <= 1:
        raise ValueError("need a, r > 0 and n > 1")
    return DunwoodyParams(a, 0, 1, n, r, None), normalize(2 * a + 1, 2 * r)


def serialize_graph(g: ColouredGraph) -> str:
    """One line per colour: the involution in one-line permutation notation."""
    return "\n".join(" ".join(str(w) for w in inv) for inv in g.involutions) + "\n"


def parse_graph(text: str) -> ColouredGraph:
    rows = [tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip()]
    if len(rows) != 4:
        raise ValueError("expected four involution lines, got %d" % len(rows))
    return ColouredGraph(tuple(rows))
