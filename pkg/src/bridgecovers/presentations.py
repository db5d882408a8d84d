"""The three fundamental-group presentation families for cyclic branched
coverings of 2-bridge knots and links, plus the Alexander polynomial.

All three run over generators x_1..x_n with index arithmetic mod n
(representatives 1..n; a derived x_0 means x_n).
"""

from dataclasses import dataclass
from math import gcd

from .two_bridge import NotAKnot, NotALink, TwoBridge, EvenConwayForm
from .words import (CyclicPresentation, FreeWord, LaurentPolynomial,
                    Presentation, word)


class BetaNotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class MinkusShiftData:
    """beta^{-1} mod 2*alpha and the partial sums s_1..s_{alpha-1}."""

    beta_inv: int
    s: tuple

    def __post_init__(self):
        prev = 0
        for v in self.s:
            if v - prev not in (1, -1):
                raise ValueError("shift increments must be +-1")
            prev = v


@dataclass(frozen=True)
class Mu3Data:
    """Exponents e_j and shifts s_j of the coloured-graph presentation."""

    nprime: int
    e: tuple
    s: tuple

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.e):
            raise ValueError("exponents must be +-1")


@dataclass
class TakahashiState:
    """The words d_{k,j}, b_{k,j} of the twist recurrence, keyed by (k, j)."""

    d_words: dict
    b_words: dict


# ---- Minkus presentation ----

def minkus_shift_data(t: TwoBridge) -> MinkusShiftData:
    b = t.beta % (2 * t.alpha)
    if b % 2 == 0:
        # reorientation: the odd representative of the same covering
        b = (b + t.alpha) % (2 * t.alpha)
    if b % 2 == 0 or gcd(b, 2 * t.alpha) != 1:
        raise BetaNotInvertible(str(t))
    binv = pow(b, -1, 2 * t.alpha)
    s = []
    acc = 0
    for i in range(1, t.alpha):
        acc += (-1) ** ((i * binv) // t.alpha)
        s.append(acc)
    return MinkusShiftData(binv, tuple(s))


def _minkus_letters(t: TwoBridge) -> list:
    """Letters of R = x_1 x_{1+s_1}^{-1} x_{1+s_2} ... with unwrapped indices."""
    data = minkus_shift_data(t)
    letters = [(1, 1)]
    for j, sj in enumerate(data.s, start=1):
        letters.append((1 + sj, (-1) ** j))
    return letters


def minkus_cyclic(t: TwoBridge, n: int) -> CyclicPresentation:
    """The defining word of the cyclic presentation, indices wrapped mod n."""
    w = FreeWord(tuple(((i - 1) % n + 1, e) for i, e in _minkus_letters(t)))
    return CyclicPresentation(n, w)


def minkus_presentation(t: TwoBridge, n: int) -> Presentation:
    """Fundamental group of the strictly-cyclic n-fold covering.

    Knots give the cyclic presentation G_n(R); links get n+1 generators
    (the extra one is y = x_{n+1}) with relators x_n and R_i y^{-1}.
    """
    cp = minkus_cyclic(t, n)
    if t.is_knot:
        return cp.expand()
    rels = [word((n, 1))]
    for i in range(n):
        rels.append(cp.w.shift(i, n) * word((n + 1, -1)))
    return Presentation(n + 1, tuple(rels))


# ---- coloured-graph presentation ----

def _mu(x: int, alpha: int) -> int:
    # representative in {0..2*alpha-1}; +1 on 1..alpha
    x %= 2 * alpha
    return 1 if 1 <= x <= alpha else -1


def _mu3_shifts(alpha: int, beta: int, n: int, k: int):
    """Exponents e_j and shifts s_j; valid for either parity of alpha.

    For alpha odd the covering is independent of k and the shift scales as
    s_j(k) = k * s_j(1) (the relabeling x_i -> x_{ki}); for alpha even the two
    sums carry different k-weights.  Even beta is first traded for beta+alpha
    (a reorientation, same covering) with k negated.
    """
    if beta % 2 == 0:
        beta = (beta + alpha) % (2 * alpha)
        k = -k % n
    e = [-_mu(2 * j * beta, alpha) for j in range(alpha)]
    s = [0] * alpha
    sa = sb = 0
    for j in range(1, alpha):
        sa += _mu(2 * j * beta - 2 * beta - alpha, alpha)
        sb += _mu(2 * j * beta - beta - alpha, alpha)
        bump = 1 if e[j] == -1 else 0
        if alpha % 2 == 0:
            s[j] = -k * sa - sb + k * bump
        else:
            s[j] = k * (-sa - sb + bump)
    return k, e, s


def mu3_data(t: TwoBridge, n: int, k: int) -> Mu3Data:
    if not t.is_link:
        raise NotALink(str(t))
    k %= n
    if k == 0:
        raise ValueError("k must be nonzero mod n")
    _, e, s = _mu3_shifts(t.alpha, t.beta, n, k)
    return Mu3Data(n // gcd(n, k), tuple(e), tuple(s))


def mu3_presentation(t: TwoBridge, n: int, k: int) -> Presentation:
    """Presentation of M_{n,1,k} read off the coloured graph: gcd(n,k)
    relators Q_i = prod_j x_{i-jk} and n relators Q'_i = prod_j x_{i+s_j}^{e_j}.
    """
    if not t.is_link:
        raise NotALink(str(t))
    k %= n
    if k == 0:
        raise ValueError("k must be nonzero mod n")
    k, e, s = _mu3_shifts(t.alpha, t.beta, n, k)
    d = gcd(n, k)
    rels = []
    for i in range(1, d + 1):
        rels.append(FreeWord(tuple(((i - j * k - 1) % n + 1, 1) for j in range(n // d))))
    for i in range(1, n + 1):
        rels.append(FreeWord(tuple(((i + s[j] - 1) % n + 1, e[j]) for j in range(t.alpha))))
    return Presentation(n, tuple(rels))


# ---- Takahashi presentation ----

def takahashi_state(form: EvenConwayForm, n: int) -> TakahashiState:
    if len(form.s) != form.m:
        raise NotAKnot("even form lacks the final twist parameter")
    q, s = form.q, form.s
    d = {}
    b = {}
    for kk in range(1, n + 1):
        d[(kk, 1)] = word((kk, 1))
    for kk in range(1, n + 1):
        k1 = kk % n + 1
        b[(kk, 1)] = d[(kk, 1)] ** q[0] * d[(k1, 1)] ** (-q[0])
    for j in range(2, form.m + 1):
        for kk in range(1, n + 1):
            km1 = (kk - 2) % n + 1
            d[(kk, j)] = b[(kk, j - 1)] ** (-s[j - 2]) * d[(kk, j - 1)] * b[(km1, j - 1)] ** s[j - 2]
        for kk in range(1, n + 1):
            k1 = kk % n + 1
            b[(kk, j)] = d[(kk, j)] ** q[j - 1] * b[(kk, j - 1)] * d[(k1, j)] ** (-q[j - 1])
    return TakahashiState(d, b)


def takahashi_word(form: EvenConwayForm, n: int) -> CyclicPresentation:
    """G_n(w) with w = b_{i+1,m}^{-s_m} d_{i+1,m} b_{i,m}^{s_m} at i = 1."""
    st = takahashi_state(form, n)
    m = form.m
    i = 1
    i1 = i % n + 1
    sm = form.s[m - 1]
    w = st.b_words[(i1, m)] ** (-sm) * st.d_words[(i1, m)] * st.b_words[(i, m)] ** sm
    return CyclicPresentation(n, w)


# ---- polynomials ----

def word_polynomial(cp: CyclicPresentation) -> LaurentPolynomial:
    """f_w(t): index-wise exponent sums of the defining word, exponents taken
    relative to the first letter's index with representatives in (-n/2, n/2],
    so words spanning less than the index circle get n-independent output."""
    w = cp.w
    if w.is_empty():
        return LaurentPolynomial()
    n = cp.n
    base = w.letters[0][0]
    coeffs = {}
    for i, e in w.letters:
        off = (i - base) % n
        if off > n // 2:
            off -= n
        coeffs[off] = coeffs.get(off, 0) + e
    return LaurentPolynomial(coeffs)


def alexander_polynomial(t: TwoBridge) -> LaurentPolynomial:
    """Alexander polynomial of a 2-bridge knot, via the exponent sums of the
    defining word with unwrapped indices; normalized to lowest exponent 0 and
    positive leading coefficient."""
    if not t.is_knot:
        raise NotAKnot(str(t))
    coeffs = {}
    for i, e in _minkus_letters(t):
        coeffs[i] = coeffs.get(i, 0) + e
    return LaurentPolynomial(coeffs).normalized()
