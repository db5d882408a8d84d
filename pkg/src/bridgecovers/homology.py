"""First homology of covering manifolds by several independent routes.

Each route computes H_1 of the same covering from different raw material:
Smith normal form of an abelianized presentation, the arithmetic closed
forms, or the order |Res(Delta, t^n - 1)| of the torsion subgroup.  All
arithmetic is exact; disagreement between routes is reported as data.
"""

from dataclasses import dataclass
from math import gcd

from .covering import CoveringSpec, lens_recognize
from .polyhedral import build_minkus, schema_presentation
from .presentations import (
    alexander_polynomial,
    minkus_presentation,
    mu3_presentation,
    takahashi_word,
)
from .two_bridge import TwoBridge, even_cf_expand, is_genus_one
from .words import LaurentPolynomial, Presentation


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; entries are a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows, cols=None) -> "IntMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))


@dataclass(frozen=True)
class AbelianGroup:
    """rank copies of Z plus cyclic factors in a divisibility chain."""

    rank: int
    torsion: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError("invariant factors must be at least 2")
            if i and d % self.torsion[i - 1]:
                raise ValueError("torsion is not a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self):
        """Group order, or None when the rank part makes it infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z_%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ClosedFormParams:
    """Intermediate quantities of the arithmetic homology formulas.

    The even-alpha formulas fill s, d, h, m, a, b; the genus-one recurrence
    fills hg and the two sequences (indexed from 1, slot 0 unused).
    """

    s: int = None
    d: int = None
    h: int = None
    m: int = None
    a: int = None
    b: int = None
    hg: int = None
    aprime: tuple = None
    asecond: tuple = None

    def __post_init__(self):
        if self.a is not None and self.a < 1:
            raise ValueError("a must be positive")
        if self.b is not None and self.b < 1:
            raise ValueError("b must be positive")


def smith_normal_form(m: IntMatrix) -> tuple:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Plain elimination suffers catastrophic entry growth on some of the
    circulant-like relator matrices this package produces (minutes for a
    25x24 matrix).  Instead: get the rank r and one nonzero r x r minor D
    by fraction-free elimination, then eliminate with every entry kept as
    a balanced residue mod D.  The row lattice always contains D*Z^cols,
    so the reductions are row operations in disguise; pivots recovered as
    gcd(pivot, D), never-pivoted columns contribute a factor D.
    """
    rows, cols = m.rows, m.cols
    b = [list(row) for row in m.entries]
    prev = 1
    r = 0
    while r < min(rows, cols):
        piv = None
        for i in range(r, rows):
            for j in range(r, cols):
                if b[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        b[r], b[i0] = b[i0], b[r]
        if j0 != r:
            for row in b:
                row[r], row[j0] = row[j0], row[r]
        for i in range(r + 1, rows):
            for j in range(r + 1, cols):
                b[i][j] = (b[i][j] * b[r][r] - b[i][r] * b[r][j]) // prev
            b[i][r] = 0
        prev = b[r][r]
        r += 1
    if r == 0:
        return ()
    D = abs(prev)
    if D == 1:
        return (1,) * r

    half = D // 2
    def red(x):
        x %= D
        return x - D if x > half else x

    a = [[red(x) for x in row] for row in m.entries]
    out = []
    rr = cc = 0
    while rr < rows and cc < cols:
        piv = None
        for i in range(rr, rows):
            for j in range(cc, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[rr], a[i0] = a[i0], a[rr]
        for row in a:
            row[cc], row[j0] = row[j0], row[cc]
        while True:
            done = True
            for i in range(rr + 1, rows):
                if a[i][cc]:
                    q = a[i][cc] // a[rr][cc]
                    if q:
                        for j in range(cc, cols):
                            a[i][j] = red(a[i][j] - q * a[rr][j])
                    if a[i][cc]:
                        # remainder is a smaller pivot candidate
                        a[rr], a[i] = a[i], a[rr]
                        done = False
            if not done:
                continue
            for j in range(cc + 1, cols):
                if a[rr][j]:
                    q = a[rr][j] // a[rr][cc]
                    if q:
                        for i in range(rr, rows):
                            a[i][j] = red(a[i][j] - q * a[i][cc])
                    if a[rr][j]:
                        for i in range(rows):
                            a[i][cc], a[i][j] = a[i][j], a[i][cc]
                        done = False
            if done:
                break
        out.append(gcd(a[rr][cc], D))
        rr += 1
        cc += 1
    out.extend([D] * (cols - len(out)))
    # enforce the divisibility chain; one pass in this order suffices
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            x, y = out[i], out[j]
            g = gcd(x, y)
            out[i], out[j] = g, x * y // g
    return tuple(out[:r])


def group_from_factors(rank: int, factors) -> AbelianGroup:
    """Canonical AbelianGroup from an arbitrary factor list (0 means Z)."""
    ds = []
    for f in factors:
        f = abs(int(f))
        if f == 0:
            rank += 1
        elif f > 1:
            ds.append(f)
    changed = True
    while changed:
        changed = False
        ds.sort()
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
    return AbelianGroup(rank, tuple(d for d in ds if d > 1))


def h1(p: Presentation) -> AbelianGroup:
    """Cokernel of the abelianized relator matrix."""
    mat = IntMatrix.from_rows(p.relator_matrix(), cols=p.generator_count)
    factors = smith_normal_form(mat)
    return AbelianGroup(p.generator_count - len(factors),
                        tuple(d for d in factors if d > 1))


def _single_exponent(spec: CoveringSpec):
    # reduce a two-exponent spec to the (1, k) normal form when possible
    if spec.nu == 1:
        return spec.exponents[0]
    k1, k2 = spec.exponents
    if gcd(spec.n, k1) == 1:
        return pow(k1, -1, spec.n) * k2 % spec.n
    if gcd(spec.n, k2) == 1:
        return pow(k2, -1, spec.n) * k1 % spec.n
    return None


def even_alpha_params(alpha: int, n: int, k: int) -> ClosedFormParams:
    """s, d, h, m, a, b for the covering M_{n,1,k} of b(alpha, 1)."""
    k %= n
    s = gcd(n, k)
    d = gcd(n, alpha * (k + 1) // 2)
    h = gcd(n, k + 1)
    m = gcd(d, s)
    a, rem = divmod(n * m, s * d)
    if rem:
        raise ValueError("n*m is not divisible by s*d")
    b, rem = divmod(alpha * h, 2 * d)
    if rem:
        raise ValueError("alpha*h is not divisible by 2*d")
    return ClosedFormParams(s=s, d=d, h=h, m=m, a=a, b=b)


def _even_alpha_group(alpha: int, n: int, k: int) -> AbelianGroup:
    p = even_alpha_params(alpha, n, k)
    if p.h == 1:
        return group_from_factors(p.d - p.m, [p.a] * p.m)
    if p.h < p.m + 1:
        factors = [p.a] * (p.m - p.h + 1) + [p.a * p.b] * (p.h - 2) + [p.h * p.a * p.b]
        return group_from_factors(p.d + 1 - p.h - p.m, factors)
    factors = [p.b] * (p.h - 1 - p.m) + [p.a * p.b] * (p.m - 1) + [p.h * p.a * p.b]
    return group_from_factors(p.d + 1 - p.h - p.m, factors)


def genus_one_params(alpha: int, n: int) -> ClosedFormParams:
    """Twist parameter and recurrence values for a genus-one knot."""
    hg = (1 - alpha) // 4 if alpha % 4 == 1 else (1 + alpha) // 4
    aprime = [0, 1, 1]
    asecond = [0, 1, 1 - 2 * hg]
    for i in range(3, n + 1):
        aprime.append(aprime[i - 1] - hg * aprime[i - 2])
        asecond.append(asecond[i - 1] - hg * asecond[i - 2])
    return ClosedFormParams(hg=hg, aprime=tuple(aprime[:n + 1]),
                            asecond=tuple(asecond[:n + 1]))


def whitehead_factors(n: int) -> tuple:
    """Raw factor triple of the n-fold meridian-cyclic coverings of b(8,3)."""
    r = n % 6
    if r == 0:
        return (n // 6, n // 2, 12 * n)
    if r in (2, 4):
        return (n // 2, n // 2, 4 * n)
    if r == 3:
        return (n // 3, n, 3 * n)
    return (n, n, n)


def _is_whitehead(t: TwoBridge) -> bool:
    return t.alpha == 8 and t.beta % 8 in (3, 5)


def h1_closed_form(t: TwoBridge, spec: CoveringSpec):
    """The arithmetic value of H_1 when (t, spec) hits a covered case.

    Covered: beta = +-1 mod alpha (both parities of alpha); strictly-cyclic
    coverings of genus-one knots; knots with alpha = 2n*beta +- 1; and the
    meridian-cyclic coverings of b(8,3) for n >= 3.  Returns None otherwise.
    """
    if spec.nu != (1 if t.is_knot else 2):
        raise ValueError("spec has %d exponents for %s" % (spec.nu, t))
    n = spec.n
    if t.beta % t.alpha in (1, t.alpha - 1):
        if t.is_knot:
            d = gcd(n, t.alpha)
            if n % 2:
                return group_from_factors(0, [2] * (d - 1))
            return group_from_factors(d - 1, [t.alpha // d])
        k = _single_exponent(spec)
        if k is None:
            return None
        if t.beta in (t.alpha - 1, t.alpha + 1):
            k = -k % n
        return _even_alpha_group(t.alpha, n, k)
    if t.is_knot and is_genus_one(t):
        p = genus_one_params(t.alpha, n)
        if n % 2 == 0:
            v = abs(p.aprime[n])
            return group_from_factors(0, [t.alpha * v, v])
        v = abs(p.asecond[n])
        return group_from_factors(0, [v, v])
    if t.is_knot:
        for sign in (1, -1):
            if (t.alpha - sign) % (2 * t.beta) == 0 and (t.alpha - sign) // (2 * t.beta) == n:
                if n % 2 == 0:
                    return group_from_factors(0, [t.alpha])
                return AbelianGroup(0, ())
    if t.is_link and _is_whitehead(t) and n >= 3:
        if all(gcd(n, k) == 1 for k in spec.exponents):
            return group_from_factors(0, whitehead_factors(n))
    return None


def _det(rows) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in rows]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if size else 1


def _sylvester(f: list, g: list) -> list:
    # f, g: descending coefficient lists
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    rows = []
    for i in range(dg):
        rows.append([0] * i + f + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + g + [0] * (size - dg - 1 - i))
    return rows


def order_via_resultant(delta: LaurentPolynomial, n: int):
    """|Res(Delta, t^n - 1)| exactly; 0 is reported as "infinite"."""
    coeffs = delta.coefficient_list()
    if not coeffs:
        raise ValueError("zero polynomial has no resultant order")
    f = list(reversed(coeffs))
    g = [1] + [0] * (n - 1) + [-1]
    val = abs(_det(_sylvester(f, g)))
    return val if val else "infinite"


def _poly_schema(t: TwoBridge, n: int, k: int):
    # the schema wants 0 < q < alpha odd; mirror odd-alpha data onto the odd
    # representative, and negate k when dropping a link's beta to beta - alpha
    # (reorienting one component flips its branching exponent)
    q = t.beta % t.alpha
    if t.is_knot:
        if q % 2 == 0:
            q = t.alpha - q
    elif t.beta > t.alpha:
        k = -k % n
    return build_minkus(n, k, t.alpha, q)


def verify_consistency(t: TwoBridge, spec: CoveringSpec) -> dict:
    """Compute H_1 by every applicable route and compare.

    Returns a JSON-ready report with one record per route; disagreement
    sets "agree" to False rather than raising.
    """
    if spec.nu != (1 if t.is_knot else 2):
        raise ValueError("spec has %d exponents for %s" % (spec.nu, t))
    n = spec.n
    routes = []

    def add(name, group, **extra):
        rec = {"route": name, "group": group.to_json()}
        rec.update(extra)
        routes.append(rec)

    if t.is_knot or len(set(spec.exponents)) == 1:
        add("minkus", h1(minkus_presentation(t, n)))
    single = None if t.is_knot else _single_exponent(spec)
    if single is not None:
        add("mu3", h1(mu3_presentation(t, n, single)))
    if t.is_knot:
        add("takahashi", h1(takahashi_word(even_cf_expand(t), n).expand()))
    schema_k = spec.exponents[0] if t.is_knot else single
    if schema_k is not None:
        schema = _poly_schema(t, n, schema_k)
        add("polyhedral", h1(schema_presentation(schema)))
    closed = h1_closed_form(t, spec)
    if closed is not None:
        if t.is_link and _is_whitehead(t) and n >= 3:
            add("closed_form", closed, raw_factors=list(whitehead_factors(n)))
        else:
            add("closed_form", closed)
    lens = lens_recognize(t, spec)
    if lens is not None:
        add("lens", group_from_factors(0, [lens[0]]))
    agree = all(r["group"] == routes[0]["group"] for r in routes)
    report = {
        "link": str(t),
        "alpha": t.alpha,
        "beta": t.beta,
        "degree": n,
        "exponents": list(spec.exponents),
        "routes": routes,
        "agree": agree,
    }
    if t.is_knot:
        order = order_via_resultant(alexander_polynomial(t), n)
        routes.append({"route": "resultant", "order": order})
        group = AbelianGroup(**{"rank": routes[0]["group"]["rank"],
                                "torsion": tuple(routes[0]["group"]["torsion"])})
        expected = group.order()
        ok = (order == "infinite") if expected is None else (order == expected)
        report["agree"] = report["agree"] and ok
    return report
