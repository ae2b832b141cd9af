"""Whole-range verification runs behind the ``verify-*`` and ``table*`` commands."""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .core import cone_points
from .faces import face_counts, face_dimension, is_edge, max_face_vertices, minimal_face, polytope
from .hilbert import (
    construct_gcd1,
    construct_gcd2,
    decompose,
    is_hilbert_basis_element,
    lies_on_2face,
)


def edge_mismatches(r: int) -> tuple[int, list[tuple]]:
    """Compare the label rule for edges with closure plus rank on every vertex pair.

    Returns the number of pairs checked and the list of disagreements.
    """
    labels = polytope(r).labels
    bad = []
    pairs = 0
    for u, v in combinations(labels, 2):
        pairs += 1
        fs = minimal_face(r, [u, v])
        oracle = fs.size == 2 and face_dimension(r, fs) == 1
        claim = is_edge(r, u, v)
        if claim != oracle:
            bad.append((u, v, claim, oracle))
    return pairs, bad


def hilbert_disagreements(r_max: int, n_max: int) -> tuple[int, list]:
    """Column criterion against exhaustive splitting for every nonzero point
    with ``r <= r_max`` and size ``<= n_max``."""
    checked = 0
    bad = []
    for n in range(1, n_max + 1):
        for p in cone_points(r_max, n):
            checked += 1
            crit = is_hilbert_basis_element(p)
            oracle = decompose(p, max_size=n_max) is None
            if crit != oracle:
                bad.append((p, crit, oracle))
    return checked, bad


def construction_failures(max_lambda1: int) -> tuple[int, list]:
    """Build both families for every admissible pair up to ``max_lambda1`` and
    confirm irreducibility and 2-face membership."""
    checked = 0
    bad = []
    for l1 in range(2, max_lambda1 + 1):
        for m1 in range(1, l1):
            builds = [construct_gcd1(l1, m1)]
            if gcd(l1 + 1, m1 + 1) == 1 and 2 * m1 >= l1:
                builds.append(construct_gcd2(l1, m1))
            for _, p in builds:
                checked += 1
                first = (p.lam[0], p.mu[0]) == (l1, m1)
                if not (first and is_hilbert_basis_element(p) and lies_on_2face(p)):
                    bad.append(p)
    return checked, bad


def table2(r_max: int, d_max: int) -> dict[int, dict[int, int]]:
    """``{d: {r: f_d(r)}}`` by enumeration."""
    out: dict[int, dict[int, int]] = {d: {} for d in range(d_max + 1)}
    for r in range(1, r_max + 1):
        dims = [d for d in range(d_max + 1) if d <= 2 * r - 2]
        counts = face_counts(r, dims) if dims else {}
        for d in range(d_max + 1):
            out[d][r] = counts.get(d, 0)
    return out


def table1(r_max: int, d_min: int = 2) -> dict[int, dict[int, int]]:
    """``{r: {d: m(r, d)}}`` for ``d_min <= d <= 2r - 2``."""
    return {
        r: {d: max_face_vertices(r, d) for d in range(d_min, 2 * r - 1)}
        for r in range(1, r_max + 1)
    }
