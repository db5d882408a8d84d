from math import gcd

import pytest

from bridgecovers.homology import AbelianGroup, h1
from bridgecovers.polyhedral import (
    BadParams,
    NotAManifold,
    build_minkus,
    quotient_counts,
    schema_dump,
    schema_presentation,
)
from bridgecovers.presentations import minkus_presentation
from bridgecovers.two_bridge import normalize


def test_build_validation():
    s = build_minkus(3, 1, 5, 3)
    assert (s.n, s.k, s.p, s.q) == (3, 1, 5, 3)
    with pytest.raises(BadParams):
        build_minkus(3, 1, 5, 2)  # q must be odd
    with pytest.raises(BadParams):
        build_minkus(3, 1, 6, 3)  # gcd(p, q) != 1
    with pytest.raises(BadParams):
        build_minkus(3, 1, 5, 7)  # q out of range
    with pytest.raises(BadParams):
        build_minkus(1, 1, 5, 3)
    with pytest.raises(BadParams):
        build_minkus(3, 3, 5, 3)  # k = 0 mod n


def test_cell_counts():
    s = build_minkus(3, 1, 5, 3)
    assert s.face_count == 2 * s.n
    assert s.vertex_count == s.n * (s.p - 1) + 2
    assert s.edge_count == s.n * s.p + s.n
    counts = quotient_counts(s)
    assert counts.chi == 0
    assert counts.t3 == 1
    assert counts.t2 == s.n
    assert counts.t1 == counts.t0 + s.n - 1


def test_hantzsche_wendt_schema():
    pres = schema_presentation(build_minkus(3, 1, 5, 3))
    assert pres.generator_count == 3
    assert h1(pres) == AbelianGroup(0, (4, 4))


def test_lens_schemata():
    for p in range(2, 10):
        for q in range(1, p, 2):
            if gcd(p, q) != 1:
                continue
            pres = schema_presentation(build_minkus(2, 1, p, q))
            assert h1(pres) == AbelianGroup(0, (p,))


def test_poincare_schema():
    pres = schema_presentation(build_minkus(5, 1, 3, 1))
    assert h1(pres).is_trivial


def test_chi_zero_sweep():
    for n in range(2, 7):
        for p in range(2, 10):
            for q in range(1, p, 2):
                if gcd(p, q) != 1:
                    continue
                for k in range(1, n):
                    s = build_minkus(n, k, p, q)
                    counts = quotient_counts(s)
                    assert counts.chi == 0, (n, k, p, q)
                    assert counts.t0 - counts.t1 + counts.t2 - counts.t3 == 0


def test_schema_matches_minkus_presentation():
    # strictly-cyclic overlap: same H_1 as the algebraic presentation
    for p in range(2, 10):
        for q in range(1, p, 2):
            if gcd(p, q) != 1:
                continue
            t = normalize(p, q)
            for n in range(2, 6):
                a = h1(schema_presentation(build_minkus(n, 1, p, q)))
                b = h1(minkus_presentation(t, n))
                assert a == b, (n, p, q, a, b)


def test_schema_dump():
    text = schema_dump(build_minkus(3, 1, 5, 3))
    assert "chi=0" in text
    assert "relators:" in text
    assert "R0" in text and "R'0" in text


def test_marked_vertices():
    s = build_minkus(3, 1, 5, 3)
    assert len(s.marked_vertices) == 3
    names = [s.vertex_name(v) for v in s.marked_vertices]
    assert names == ["v(0,3)", "v(1,3)", "v(2,3)"]
