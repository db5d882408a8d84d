"""Face-paired ball schemata for cyclic branched coverings.

The boundary sphere of a ball is cut by n great semicircles from N to S,
each subdivided by p-1 vertices, and each lune is bisected by an arc from
the vertex q steps below N to the vertex q steps above S on the next
semicircle.  Identifying the northern region R_i of a lune with the
southern region R'_{i-k} (orientation reversing, anchored at the marked
vertices P_i -> P_{i-k}) yields a closed 3-manifold exactly when the Euler
characteristic of the quotient complex vanishes.

For p odd the branching set is a knot and all exponents k give the same
covering; the literal i-k matching is degenerate there (chi != 0 unless
k = +-1), so the complex is always built with the shift-1 pairing and the
requested k is only recorded.
"""

from dataclasses import dataclass
from math import gcd

from .words import FreeWord, Presentation, format_word


class BadParams(ValueError):
    pass


class NotAManifold(ValueError):
    pass


@dataclass(frozen=True)
class CellComplexCounts:
    t0: int
    t1: int
    t2: int
    t3: int
    chi: int

    def __post_init__(self):
        if self.chi != self.t0 - self.t1 + self.t2 - self.t3:
            raise ValueError("inconsistent Euler characteristic")


@dataclass(frozen=True)
class MinkusSchema:
    n: int
    p: int
    q: int
    k: int
    pairing_shift: int

    @property
    def vertex_count(self) -> int:
        # poles plus p-1 subdivision points per semicircle
        return self.n * (self.p - 1) + 2

    @property
    def edge_count(self) -> int:
        return self.n * self.p + self.n

    @property
    def face_count(self) -> int:
        return 2 * self.n

    def vertex_name(self, v: int) -> str:
        if v == 0:
            return "N"
        if v == 1:
            return "S"
        i, t = divmod(v - 2, self.p - 1)
        return "v(%d,%d)" % (i, t + 1)

    @property
    def regions(self) -> dict:
        faces = _faces(self)
        out = {}
        for (kind, i), (verts, _) in faces.items():
            label = ("R%d" if kind == "N" else "R'%d") % i
            out[label] = tuple(self.vertex_name(v) for v in verts)
        return out

    @property
    def marked_vertices(self) -> tuple:
        # P_i is the arc endpoint q steps below N on semicircle i
        return tuple(_v(self, i, self.q) for i in range(self.n))


def build_minkus(n: int, k: int, p: int, q: int) -> MinkusSchema:
    if p < 2 or not 0 < q < p or gcd(p, q) != 1:
        raise BadParams("need 0 < q < p coprime, got p=%r q=%r" % (p, q))
    if q % 2 == 0:
        raise BadParams("q must be the odd representative, got %d" % q)
    if n < 2 or k % n == 0:
        raise BadParams("need degree n >= 2 and k nonzero mod n")
    shift = k % n if p % 2 == 0 else 1
    return MinkusSchema(n, p, q, k % n, shift)


def _v(s: MinkusSchema, i: int, t: int) -> int:
    if t == 0:
        return 0
    if t == s.p:
        return 1
    return 2 + (i % s.n) * (s.p - 1) + (t - 1)


def _faces(s: MinkusSchema) -> dict:
    """Each region as (vertex cycle, slot list); a slot is (edge id, sign).

    Edge ids: semicircle segment sc(i,t) = i*p + t runs v(i,t) -> v(i,t+1);
    bisecting arc arc(i) = n*p + i runs v(i,q) -> v(i+1, p-q).
    """
    n, p, q = s.n, s.p, s.q

    def sc(i, t):
        return (i % n) * p + t

    def arc(i):
        return n * p + (i % n)

    faces = {}
    L = p + 1
    for i in range(n):
        verts = [_v(s, i, 0)]
        slots = []
        for t in range(q):
            slots.append((sc(i, t), +1))
            verts.append(_v(s, i, t + 1))
        slots.append((arc(i), +1))
        verts.append(_v(s, i + 1, p - q))
        for t in range(p - q - 1, 0, -1):
            slots.append((sc(i + 1, t), -1))
            verts.append(_v(s, i + 1, t))
        slots.append((sc(i + 1, 0), -1))
        faces[("N", i)] = (tuple(verts), tuple(slots))

        verts = [_v(s, i, q)]
        slots = []
        for t in range(q, p):
            slots.append((sc(i, t), +1))
            verts.append(_v(s, i, t + 1))
        for t in range(p - 1, p - q - 1, -1):
            slots.append((sc(i + 1, t), -1))
            verts.append(_v(s, i + 1, t))
        slots.append((arc(i), -1))
        faces[("S", i)] = (tuple(verts), tuple(slots))
    for verts, slots in faces.values():
        assert len(verts) == L and len(slots) == L
    return faces


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def class_count(self, size):
        return len({self.find(x) for x in range(size)})


def _glued(s: MinkusSchema):
    """Faces, directed-edge traversal table, and the vertex/edge unions
    induced by the orientation-reversing pairing R_i -> R'_{i - shift}."""
    faces = _faces(s)
    n, q = s.n, s.q
    L = s.p + 1

    trav = {}
    for key, (verts, slots) in faces.items():
        for pos, (e, sg) in enumerate(slots):
            trav[(e, sg)] = (key, pos)
    assert len(trav) == 2 * s.edge_count

    vuf = _UnionFind(s.vertex_count)
    euf = _UnionFind(s.edge_count)
    for i in range(n):
        l = (i - s.pairing_shift) % n
        nverts, nslots = faces[("N", i)]
        sverts, sslots = faces[("S", l)]
        # anchor: north position q (the marked vertex) maps to south position 0,
        # slots aligned reversed from there
        for t in range(L):
            en, _ = nslots[(q + t) % L]
            es, _ = sslots[(-t - 1) % L]
            euf.union(en, es)
            vuf.union(nverts[(q + t) % L], sverts[(-t) % L])
    return faces, trav, vuf, euf


def quotient_counts(s: MinkusSchema) -> CellComplexCounts:
    """Cell counts of the identification space, by union-find."""
    _, _, vuf, euf = _glued(s)
    t0 = vuf.class_count(s.vertex_count)
    t1 = euf.class_count(s.edge_count)
    t2, t3 = s.n, 1
    return CellComplexCounts(t0, t1, t2, t3, t0 - t1 + t2 - t3)


def _edge_relators(s: MinkusSchema):
    faces, trav, _, euf = _glued(s)
    n, q = s.n, s.q
    L = s.p + 1

    def step(e, sg):
        key, pos = trav[(e, sg)]
        kind, i = key
        if kind == "N":
            l = (i - s.pairing_shift) % n
            t = (pos - q) % L
            es, ss = faces[("S", l)][1][(-t - 1) % L]
            return (i, +1), (es, -ss)
        i_n = (i + s.pairing_shift) % n
        t = (-1 - pos) % L
        en, sn = faces[("N", i_n)][1][(q + t) % L]
        return (i_n, -1), (en, -sn)

    relators = []
    seen = set()
    done = set()
    for e0 in trav:
        if e0 in seen:
            continue
        rel = []
        e = e0
        while True:
            seen.add(e)
            g, e = step(*e)
            rel.append(g)
            if e == e0:
                break
        root = euf.find(e0[0])
        if root in done:
            continue
        done.add(root)
        relators.append(FreeWord(tuple((i + 1, sg) for i, sg in rel)))
    return relators


def schema_presentation(s: MinkusSchema) -> Presentation:
    """Fundamental-group presentation: one generator per face pair, one
    relator per edge class, read around the edge."""
    counts = quotient_counts(s)
    if counts.chi != 0:
        raise NotAManifold("chi = %d" % counts.chi)
    return Presentation(s.n, tuple(_edge_relators(s)))


def schema_dump(s: MinkusSchema) -> str:
    """Text dump: regions, vertex classes, relators."""
    lines = ["schema n=%d k=%d p=%d q=%d (pairing shift %d)"
             % (s.n, s.k, s.p, s.q, s.pairing_shift)]
    lines.append("regions:")
    for label, verts in s.regions.items():
        lines.append("  %s: %s" % (label, " ".join(verts)))
    _, _, vuf, _ = _glued(s)
    classes = {}
    for v in range(s.vertex_count):
        classes.setdefault(vuf.find(v), []).append(s.vertex_name(v))
    lines.append("vertex classes:")
    for names in classes.values():
        lines.append("  {%s}" % ", ".join(names))
    counts = quotient_counts(s)
    lines.append("cells: t0=%d t1=%d t2=%d t3=%d chi=%d"
                 % (counts.t0, counts.t1, counts.t2, counts.t3, counts.chi))
    if counts.chi == 0:
        lines.append("relators:")
        for r in _edge_relators(s):
            lines.append("  %s" % format_word(r))
    return "\n".join(lines)
