"""Extremal rays of the Kostka cone and their facet incidences.

Vertices of the Kostka polytope are named by triples ``(a, b, l)`` with
``0 <= l < b < a <= r``, or ``(a, a, a)`` for the rectangle rays.  Throughout
the package a vertex index is the position of its label in
``enumerate_ray_labels(r)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import NamedTuple

from .core import ConePoint
from .errors import ValidationError


class RayLabel(NamedTuple):
    a: int
    b: int
    l: int

    @property
    def is_rectangle(self) -> bool:
        return self.a == self.b

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.l]


def make_label(a: int, b: int, l: int) -> RayLabel:
    """Validate a triple, normalizing rectangle names ``(a, a, *)`` to ``(a, a, a)``."""
    a, b, l = int(a), int(b), int(l)
    if a == b:
        if a < 1:
            raise ValidationError(f"rectangle label needs a >= 1, got {(a, b, l)}")
        if not 0 <= l <= a:
            raise ValidationError(f"invalid rectangle label {(a, b, l)}")
        return RayLabel(a, a, a)
    if not 0 <= l < b < a:
        raise ValidationError(f"label {(a, b, l)} violates 0 <= l < b < a")
    return RayLabel(a, b, l)


def check_label(r: int, lab: RayLabel) -> RayLabel:
    lab = make_label(*lab)
    if lab.a > r:
        raise ValidationError(f"label {tuple(lab)} is not valid for r={r}")
    return lab


def is_valid_label(r: int, a: int, b: int, l: int) -> bool:
    if a == b == l:
        return 1 <= a <= r
    return 0 <= l < b < a <= r


@lru_cache(maxsize=None)
def _labels(r: int) -> tuple[RayLabel, ...]:
    out = []
    for a in range(1, r + 1):
        for b in range(1, a):
            for l in range(b):
                out.append(RayLabel(a, b, l))
        out.append(RayLabel(a, a, a))
    return tuple(sorted(out))


def enumerate_ray_labels(r: int) -> list[RayLabel]:
    """All vertex labels of the ``r``-Kostka polytope in lexicographic order."""
    if r < 1:
        raise ValidationError(f"r must be positive, got {r}")
    return list(_labels(r))


def num_rays(r: int) -> int:
    return comb(r, 3) + comb(r, 2) + r


def ray_generator(r: int, lab: RayLabel) -> ConePoint:
    a, b, l = check_label(r, lab)
    if a == b:
        return ConePoint((a,) * a, (a,) * a, r)
    lam = (a - l,) * b
    mu = (a - l,) * l + (b - l,) * (a - l)
    return ConePoint(lam, mu, r)


def primitive_generator(r: int, lab: RayLabel) -> ConePoint:
    p = ray_generator(r, lab)
    g = p.content_gcd()
    return ConePoint(tuple(x // g for x in p.lam), tuple(x // g for x in p.mu), r)


class FacetId(NamedTuple):
    kind: str  # "H", "HHAT" or "J"
    i: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.i}

    def __str__(self) -> str:
        return f"{self.kind}_{self.i}"


FACET_KINDS = ("H", "HHAT", "J")


def facet_ids(r: int) -> list[FacetId]:
    """The ``3r - 2`` bounding hyperplanes, in the order H, HHAT, J."""
    return (
        [FacetId("H", i) for i in range(1, r + 1)]
        + [FacetId("HHAT", i) for i in range(1, r)]
        + [FacetId("J", i) for i in range(1, r)]
    )


def check_facet(r: int, f: FacetId) -> FacetId:
    kind, i = f
    top = r if kind == "H" else r - 1
    if kind not in FACET_KINDS or not 1 <= i <= top:
        raise ValidationError(f"{kind}_{i} is not a hyperplane of the {r}-Kostka cone")
    return FacetId(kind, i)


def facet_incidence(r: int, lab: RayLabel) -> frozenset[FacetId]:
    """Bounding hyperplanes that contain the vertex ``lab``."""
    a, b, l = check_label(r, lab)
    out = {FacetId("H", i) for i in range(1, r + 1) if b != i}
    out.update(FacetId("HHAT", k) for k in range(1, r) if a != k and l != k)
    out.update(FacetId("J", j) for j in range(1, r) if j <= l or j >= a or a == b)
    return frozenset(out)


def hyperplane_normal(r: int, f: FacetId) -> tuple[int, ...]:
    """Inward normal ``n`` with ``n . (lam, mu) >= 0`` on the cone."""
    kind, i = check_facet(r, f)
    v = [0] * (2 * r)
    if kind == "H":
        v[i - 1] = 1
        if i < r:
            v[i] = -1
    elif kind == "HHAT":
        v[r + i - 1] = 1
        v[r + i] = -1
    else:
        for j in range(i):
            v[j] = 1
            v[r + j] = -1
    return tuple(v)


def size_balance_normal(r: int) -> tuple[int, ...]:
    """Normal of the equation ``sum(lam) = sum(mu)`` satisfied by the whole cone."""
    return (1,) * r + (-1,) * r


def on_hyperplane(p: ConePoint, f: FacetId) -> bool:
    n = hyperplane_normal(p.r, f)
    return sum(x * y for x, y in zip(n, p.vector())) == 0


def facet_count(r: int) -> int:
    """Number of facets of the ``r``-Kostka cone."""
    if r < 1:
        raise ValidationError(f"r must be positive, got {r}")
    if r > 2:
        return 3 * r - 2
    from .faces import polytope

    return polytope(r).facet_count()
