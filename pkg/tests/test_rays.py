from math import comb

import pytest

from kostka.core import cone_points
from kostka.errors import ValidationError
from kostka.hilbert import cone_face_dimension
from kostka.rays import (
    FacetId,
    RayLabel,
    enumerate_ray_labels,
    facet_count,
    facet_ids,
    facet_incidence,
    make_label,
    num_rays,
    on_hyperplane,
    primitive_generator,
    ray_generator,
)


def test_labels_small():
    assert enumerate_ray_labels(1) == [(1, 1, 1)]
    assert enumerate_ray_labels(3) == [
        (1, 1, 1), (2, 1, 0), (2, 2, 2), (3, 1, 0), (3, 2, 0), (3, 2, 1), (3, 3, 3),
    ]
    assert len(enumerate_ray_labels(4)) == 14


@pytest.mark.parametrize("r", range(1, 31))
def test_label_count(r):
    labels = enumerate_ray_labels(r)
    assert len(labels) == len(set(labels)) == num_rays(r) == comb(r, 3) + comb(r, 2) + r


def test_rectangle_names_normalize():
    assert make_label(2, 2, 0) == RayLabel(2, 2, 2)
    with pytest.raises(ValidationError):
        make_label(2, 3, 0)
    with pytest.raises(ValidationError):
        make_label(0, 0, 0)


def test_generator_examples():
    p = ray_generator(5, (5, 4, 2))
    assert p.padded() == ((3, 3, 3, 3, 0), (3, 3, 2, 2, 2))
    assert ray_generator(3, (1, 1, 1)).padded() == ((1, 0, 0), (1, 0, 0))
    assert ray_generator(5, (5, 3, 1)).padded() == ((4, 4, 4, 0, 0), (4, 2, 2, 2, 2))
    assert primitive_generator(5, (5, 3, 1)).padded() == ((2, 2, 2, 0, 0), (2, 1, 1, 1, 1))
    assert primitive_generator(5, (5, 4, 2)) == p
    assert primitive_generator(3, (2, 2, 2)).padded() == ((1, 1, 0), (1, 1, 0))


def test_label_out_of_range():
    with pytest.raises(ValidationError):
        ray_generator(3, (4, 1, 0))


def test_incidence_examples():
    F = FacetId
    assert facet_incidence(3, (3, 2, 1)) == {F("H", 1), F("H", 3), F("HHAT", 2), F("J", 1)}
    assert facet_incidence(3, (2, 1, 0)) == {F("H", 2), F("H", 3), F("HHAT", 1), F("J", 2)}
    for r in range(2, 7):
        for a in range(1, r + 1):
            inc = facet_incidence(r, (a, a, a))
            assert all(F("J", j) in inc for j in range(1, r))


@pytest.mark.parametrize("r", range(1, 9))
def test_incidence_matches_coordinates(r):
    for lab in enumerate_ray_labels(r):
        p = ray_generator(r, lab)
        on = {f for f in facet_ids(r) if on_hyperplane(p, f)}
        assert on == facet_incidence(r, lab), lab


@pytest.mark.parametrize("r", range(1, 9))
def test_generators_span_rays(r):
    for lab in enumerate_ray_labels(r):
        assert cone_face_dimension(ray_generator(r, lab)) == 1


@pytest.mark.parametrize("r, n_max", [(1, 1), (2, 2), (3, 6), (4, 12)])
def test_rays_are_all_extremal_rays(r, n_max):
    # every primitive lattice point spanning a one-dimensional face, found by brute force
    found = set()
    for n in range(1, n_max + 1):
        for p in cone_points(r, n):
            if p.content_gcd() == 1 and cone_face_dimension(p) == 1:
                found.add(p)
    assert found == {primitive_generator(r, lab) for lab in enumerate_ray_labels(r)}


def test_facet_count():
    assert facet_count(3) == 7
    assert facet_count(10) == 28
    assert facet_count(2) == 3
    assert facet_count(1) == 1
    assert len(facet_ids(5)) == 13
