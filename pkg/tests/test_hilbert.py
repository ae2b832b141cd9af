from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from kostka.core import ConePoint, cone_points
from kostka.errors import ValidationError
from kostka.hilbert import (
    classify_initial_pair,
    cone_face_dimension,
    construct_gcd1,
    construct_gcd2,
    decompose,
    failing_pairs,
    initial_certificate,
    is_hilbert_basis_element,
    is_initial_at_width,
    lies_on_2face,
    shares_column_sum,
    r_min,
    scan_initial,
)

KNOWN_FAILURES = [
    (14, 6), (15, 6), (20, 6), (20, 14), (21, 6), (24, 10),
    (25, 10), (26, 6), (26, 12), (27, 6), (27, 12), (27, 21),
]


def P(lam, mu, r):
    return ConePoint(lam, mu, r)


def test_criterion_examples():
    assert is_hilbert_basis_element(P((1,), (1,), 1))
    assert not is_hilbert_basis_element(P((2, 2), (2, 2), 2))
    with pytest.raises(ValidationError):
        is_hilbert_basis_element(P((), (), 2))


def test_decompose_examples():
    a, b = decompose(P((2, 2), (2, 2), 2))
    assert {a, b} == {P((1, 1), (1, 1), 2)}
    assert decompose(P((2,), (1, 1), 2)) is None
    a, b = decompose(P((3, 1), (2, 2), 2))
    assert {a, b} == {P((2,), (1, 1), 2), P((1, 1), (1, 1), 2)}


def test_decompose_size_bound():
    with pytest.raises(ValidationError):
        decompose(P((30,), (15, 15), 2))


def test_matching_column_sums_do_not_imply_reducible():
    # primitive generator of the ray (4, 2, 1): columns (2, 2, 2) against (4, 1, 1)
    p = P((3, 3), (3, 1, 1, 1), 4)
    assert shares_column_sum(p)
    assert decompose(p) is None
    assert is_hilbert_basis_element(p)


@pytest.mark.parametrize("r, n_max", [(1, 10), (2, 10), (3, 10), (4, 9), (5, 9)])
def test_criterion_matches_oracle(r, n_max):
    for n in range(1, n_max + 1):
        for p in cone_points(r, n):
            split = decompose(p)
            assert is_hilbert_basis_element(p) == (split is None), p
            if split:
                a, b = split
                assert tuple(x + y for x, y in zip(a.vector(), b.vector())) == p.vector()


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 6) for n in range(1, 12)])
def test_reducible_points_share_a_column_sum(r, n):
    for p in cone_points(r, n):
        if not is_hilbert_basis_element(p):
            assert shares_column_sum(p)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, 12))), st.integers(2, 4))
def test_multiples_are_reducible(rn, k):
    r, n = rn
    for p in list(cone_points(r, n))[:5]:
        q = ConePoint(tuple(k * x for x in p.lam), tuple(k * x for x in p.mu), r)
        assert not is_hilbert_basis_element(q)


def test_r_min():
    assert r_min(20, 15) == 22
    assert r_min(7, 3) == 7
    assert r_min(15, 6) == 17


def test_gcd1_examples():
    r, p = construct_gcd1(20, 15)
    assert r == 22
    assert p.lam == (20,) * 15 and p.mu == (15,) * 7 + (13,) * 15
    assert is_hilbert_basis_element(p) and lies_on_2face(p)
    r, p = construct_gcd1(6, 1)
    assert r == 6 and p.lam == (6,) and p.mu == (1,) * 6
    r, p = construct_gcd1(5, 3)
    assert r == 5 and p.lam == (5, 5, 5) and p.mu == (3,) * 5
    assert decompose(p) is None


def test_gcd2_examples():
    r, p = construct_gcd2(20, 15)
    assert r == 21
    assert p.lam == (20,) * 11 + (19,) * 5 and p.mu == (15,) * 21
    assert is_hilbert_basis_element(p) and lies_on_2face(p)
    r, p = construct_gcd2(6, 4)
    assert r == 7 and p.lam == (6, 6, 6, 5, 5) and p.mu == (4,) * 7
    assert decompose(p, max_size=30) is None
    with pytest.raises(ValidationError):
        construct_gcd2(5, 5)


@pytest.mark.parametrize("l1", range(2, 13))
def test_constructions_against_oracle(l1):
    for m1 in range(1, l1):
        builds = [construct_gcd1(l1, m1)]
        if gcd(l1 + 1, m1 + 1) == 1 and 2 * m1 >= l1:
            builds.append(construct_gcd2(l1, m1))
        for _, p in builds:
            assert (p.lam[0], p.mu[0]) == (l1, m1)
            assert not shares_column_sum(p)
            assert cone_face_dimension(p) <= 2
            if p.size <= 30:
                assert decompose(p, max_size=30) is None


def test_classification():
    assert failing_pairs(30) == KNOWN_FAILURES
    assert classify_initial_pair(7, 3).conditions[0]
    c = classify_initial_pair(14, 6)
    assert c.to_json() == {"pair": [14, 6], "conditions": [False, False, False], "sufficient": False}


@pytest.mark.parametrize("l1", range(1, 25))
def test_certificates_exist_for_sufficient_pairs(l1):
    for m1 in range(1, l1 + 1):
        cert = initial_certificate(l1, m1)
        if classify_initial_pair(l1, m1).sufficient or l1 == m1:
            assert cert is not None
            assert cert.r == l1 + 1
            assert (cert.lam[0], cert.mu[0]) == (l1, m1)
            assert is_hilbert_basis_element(cert)
        else:
            assert cert is None


def test_initial_at_width():
    assert not is_initial_at_width(14, 6)
    assert is_initial_at_width(9, 1)
    assert not is_initial_at_width(9, 6)


def test_two_face_membership():
    assert not lies_on_2face(P((3, 2, 1), (2, 2, 2), 3))
    assert cone_face_dimension(P((1,), (1,), 3)) == 1


def test_scan_examples():
    res = scan_initial(5, 3, 5)
    assert res.status == "found"
    assert res.witness.lam[0] == 5 and res.witness.mu[0] == 3
    assert is_hilbert_basis_element(res.witness)
    assert scan_initial(4, 2, 4).status == "exhausted"
    assert scan_initial(14, 6, 15, max_candidates=10_000).status == "budget-exceeded"
    assert scan_initial(14, 6, 15, time_budget=0.2).status == "budget-exceeded"


@pytest.mark.parametrize("r", range(2, 7))
def test_scan_agrees_with_coprimality_at_full_width(r):
    # an element of width r with first entries (r, mu1) exists exactly when gcd(r, mu1) = 1
    for m1 in range(1, r):
        res = scan_initial(r, m1, r)
        assert (res.status == "found") == is_initial_at_width(r, m1), (r, m1)
