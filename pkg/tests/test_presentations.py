from math import gcd

import pytest

from bridgecovers.homology import AbelianGroup, h1
from bridgecovers.presentations import (
    alexander_polynomial,
    minkus_cyclic,
    minkus_presentation,
    minkus_shift_data,
    mu3_data,
    mu3_presentation,
    takahashi_word,
    word_polynomial,
)
from bridgecovers.two_bridge import EvenConwayForm, NotAKnot, NotALink, even_cf_expand, normalize
from bridgecovers.words import CyclicPresentation, LaurentPolynomial, parse_word, word


def knots(amax):
    for alpha in range(3, amax + 1, 2):
        for beta in range(1, 2 * alpha):
            if gcd(alpha, beta) == 1:
                yield normalize(alpha, beta)


def links(amax):
    for alpha in range(2, amax + 1, 2):
        for beta in range(1, 2 * alpha, 2):
            if gcd(alpha, beta) == 1:
                yield normalize(alpha, beta)


def test_minkus_shift_data():
    data = minkus_shift_data(normalize(5, 3))
    assert data.beta_inv == 7
    assert data.s == (-1, 0, 1, 0)


def test_minkus_word():
    assert minkus_cyclic(normalize(3, 1), 5).w == parse_word("x1 x2^-1 x3")
    # x_0 means x_n after wrapping
    assert minkus_cyclic(normalize(5, 3), 3).w == parse_word("x1 x3^-1 x1 x2^-1 x1")
    assert minkus_cyclic(normalize(5, 3), 3).w.exponent_sums(3) == [3, -1, -1]


def test_minkus_presentation_shape():
    pres = minkus_presentation(normalize(3, 1), 5)
    assert pres.generator_count == 5
    assert len(pres.relators) == 5
    # links carry the extra generator y and the killing relator x_n
    pres = minkus_presentation(normalize(8, 3), 4)
    assert pres.generator_count == 5
    assert len(pres.relators) == 5
    assert pres.relators[0] == word((4, 1))


def test_mu3_data():
    data = mu3_data(normalize(8, 3), 5, 2)
    assert data.nprime == 5
    assert len(data.e) == 8
    assert all(e in (1, -1) for e in data.e)
    with pytest.raises(NotALink):
        mu3_data(normalize(5, 3), 5, 2)


def test_mu3_presentation():
    pres = mu3_presentation(normalize(8, 3), 5, 2)
    assert pres.generator_count == 5
    assert len(pres.relators) == gcd(5, 2) + 5
    assert h1(pres) == AbelianGroup(0, (5, 5, 5))
    assert h1(mu3_presentation(normalize(2, 1), 5, 2)) == AbelianGroup(0, (5,))
    pres = mu3_presentation(normalize(8, 3), 6, 4)
    assert len(pres.relators) == gcd(6, 4) + 6
    with pytest.raises(ValueError):
        mu3_presentation(normalize(8, 3), 5, 5)


def test_takahashi_figure_eight():
    form = even_cf_expand(normalize(5, 2))
    cp = takahashi_word(form, 4)
    assert cp.w.letters == ((3, -1), (2, 2), (1, -1), (2, 1))
    # every degree yields the same window around the base index
    assert takahashi_word(form, 7).w.letters == ((3, -1), (2, 2), (1, -1), (2, 1))


def test_takahashi_trefoil_like():
    form = EvenConwayForm(1, (1,), (1,))
    cp = takahashi_word(form, 4)
    assert cp.w.letters == ((3, 1), (1, 1), (2, -1))
    assert cp.w.exponent_sums(4) == [1, -1, 1, 0]


def test_takahashi_rejects_links():
    form = even_cf_expand(normalize(8, 3))
    with pytest.raises(NotAKnot):
        takahashi_word(form, 3)


def test_word_polynomial():
    w = word((3, -1), (2, 2), (1, -1), (2, 1))
    p = word_polynomial(CyclicPresentation(5, w))
    assert p.unit_equal(LaurentPolynomial({-1: -1, 0: 3, 1: -1}))
    p = word_polynomial(CyclicPresentation(5, parse_word("x1 x2^-1 x3")))
    assert p == LaurentPolynomial({0: 1, 1: -1, 2: 1})
    assert word_polynomial(CyclicPresentation(3, word((1, 1)))) == LaurentPolynomial({0: 1})


def test_alexander_polynomial():
    assert alexander_polynomial(normalize(5, 3)).coefficient_list() == [1, -3, 1]
    assert alexander_polynomial(normalize(3, 1)).coefficient_list() == [1, -1, 1]
    with pytest.raises(NotAKnot):
        alexander_polynomial(normalize(8, 3))


def test_alexander_determinant():
    # |Delta(-1)| is the determinant alpha
    for t in knots(25):
        assert abs(alexander_polynomial(t)(-1)) == t.alpha


def test_minkus_takahashi_same_homology():
    for t in knots(13):
        form = even_cf_expand(t)
        for n in range(2, 9):
            a = h1(minkus_presentation(t, n))
            b = h1(takahashi_word(form, n).expand())
            assert a == b, (t, n, a, b)


def test_mu3_inverse_exponent():
    # k and k^{-1} mod n present the same covering
    for t in links(12):
        for n in range(2, 9):
            for k in range(1, n):
                if gcd(n, k) != 1:
                    continue
                a = h1(mu3_presentation(t, n, k))
                b = h1(mu3_presentation(t, n, pow(k, -1, n)))
                assert a == b, (t, n, k)


def test_word_polynomial_is_alexander():
    for t in knots(13):
        form = even_cf_expand(t)
        delta = alexander_polynomial(t)
        # at a degree beyond the word span both polynomials stabilize
        big = word_polynomial(takahashi_word(form, 40))
        assert big.unit_equal(word_polynomial(minkus_cyclic(t, 40)))
        assert big.unit_equal(delta)
        for n in range(2, 9):
            fp = word_polynomial(takahashi_word(form, n))
            mk = word_polynomial(minkus_cyclic(t, n))
            assert fp.unit_equal_mod(mk, n), (t, n)
