"""Face lattice of the Kostka polytope.

A face is identified with its vertex set, stored as a bit mask over the
lexicographically sorted label list.  Two closure routes exist:

* :func:`minimal_face` applies the label conditions directly (interval
  coverage and value membership) to every label of ``P_r``;
* :meth:`KostkaPolytope.closure` intersects the vertex masks of all bounding
  hyperplanes containing a set, which is what enumeration uses.

The test suite checks that the two agree.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError, ValidationError
from .exact import EchelonBasis, integer_rank
from .rays import (
    RayLabel,
    check_label,
    enumerate_ray_labels,
    facet_ids,
    facet_incidence,
    hyperplane_normal,
    is_valid_label,
    primitive_generator,
    size_balance_normal,
)

DEFAULT_MAX_FACES = 2_000_000


def default_max_faces() -> int:
    return int(os.environ.get("KOSTKA_MAX_FACES", DEFAULT_MAX_FACES))


def default_time_budget() -> float | None:
    raw = os.environ.get("KOSTKA_TIME_BUDGET")
    return float(raw) if raw else None


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class KostkaPolytope:
    """Vertex/hyperplane incidence data for ``P_r`` with cached closures."""

    def __init__(self, r: int):
        if r < 1:
            raise ValidationError(f"r must be positive, got {r}")
        self.r = r
        self.dim = 2 * r - 2
        self.labels = tuple(enumerate_ray_labels(r))
        self.n = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.vectors = tuple(primitive_generator(r, lab).vector() for lab in self.labels)
        self.hyperplanes = tuple(facet_ids(r))
        self.normals = tuple(hyperplane_normal(r, h) for h in self.hyperplanes)
        self.balance = size_balance_normal(r)
        hpos = {h: j for j, h in enumerate(self.hyperplanes)}
        self.vertex_planes = []
        plane_vertices = [0] * len(self.hyperplanes)
        for i, lab in enumerate(self.labels):
            m = 0
            for h in facet_incidence(r, lab):
                m |= 1 << hpos[h]
                plane_vertices[hpos[h]] |= 1 << i
            self.vertex_planes.append(m)
        self.plane_vertices = tuple(plane_vertices)
        self.full = (1 << self.n) - 1
        self.all_planes = (1 << len(self.hyperplanes)) - 1
        self._closures: dict[int, int] = {}

    def mask_of(self, labels: Iterable[RayLabel]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index[check_label(self.r, lab)]
        return m

    def labels_of(self, mask: int) -> list[RayLabel]:
        return [self.labels[i] for i in bits(mask)]

    def planes_of(self, mask: int) -> int:
        """Bit set of hyperplanes containing every vertex in ``mask``."""
        planes = self.all_planes
        vp = self.vertex_planes
        for i in bits(mask):
            planes &= vp[i]
        return planes

    def closure_of_planes(self, planes: int) -> int:
        cached = self._closures.get(planes)
        if cached is not None:
            return cached
        mask = self.full
        pv = self.plane_vertices
        for j in bits(planes):
            mask &= pv[j]
        self._closures[planes] = mask
        return mask

    def closure(self, mask: int) -> int:
        if not mask:
            raise ValidationError("closure of the empty vertex set is undefined")
        return self.closure_of_planes(self.planes_of(mask))

    def vertex_rank(self, mask: int, limit: int | None = None) -> int:
        return integer_rank((self.vectors[i] for i in bits(mask)), limit)

    def dimension(self, mask: int, planes: int | None = None) -> int:
        """Dimension of the face with vertex set ``mask``.

        Uses whichever exact rank is cheaper: of the vertex generators, or of
        the normals of the hyperplanes containing the face (plus the size
        balance equation).  The second route is only valid for closed sets.
        """
        if not mask:
            return -1
        if planes is None:
            planes = self.planes_of(mask)
        nv = mask.bit_count()
        np_ = planes.bit_count() + 1
        if nv <= np_:
            return self.vertex_rank(mask) - 1
        rows = [self.balance] + [self.normals[j] for j in bits(planes)]
        return 2 * self.r - 1 - integer_rank(rows)

    def basis_of(self, mask: int) -> EchelonBasis:
        b = EchelonBasis()
        for i in bits(mask):
            b.add(self.vectors[i])
        return b

    def adds_one_dimension(self, base: EchelonBasis, extra: int) -> bool:
        """Whether the vertices in ``extra`` raise the span of ``base`` by exactly one."""
        b = base.copy()
        grew = 0
        for i in bits(extra):
            if b.add(self.vectors[i]):
                grew += 1
                if grew > 1:
                    return False
        return grew == 1

    def facet_count(self) -> int:
        """Distinct facets, deduplicated by vertex set (needed for r <= 2)."""
        seen = set()
        for j in range(len(self.hyperplanes)):
            cl = self.closure_of_planes(1 << j)
            if cl in seen:
                continue
            if self.dimension(cl) == self.dim - 1:
                seen.add(cl)
        return len(seen)


@lru_cache(maxsize=32)
def polytope(r: int) -> KostkaPolytope:
    return KostkaPolytope(r)


@dataclass(frozen=True)
class FaceVertexSet:
    r: int
    mask: int
    dim: int | None = field(default=None, compare=False)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def labels(self) -> list[RayLabel]:
        return polytope(self.r).labels_of(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.size

    def with_dim(self) -> "FaceVertexSet":
        if self.dim is not None:
            return self
        return FaceVertexSet(self.r, self.mask, face_dimension(self.r, self))

    def to_json(self) -> dict:
        d = self.dim if self.dim is not None else face_dimension(self.r, self)
        return {"r": self.r, "dim": d, "labels": [lab.to_json() for lab in self.labels]}

    @classmethod
    def from_labels(cls, r: int, labels: Iterable[Sequence[int]]) -> "FaceVertexSet":
        return cls(r, polytope(r).mask_of(RayLabel(*lab) for lab in labels))


def minimal_face(r: int, labels: Iterable[Sequence[int]]) -> FaceVertexSet:
    """Smallest face of ``P_r`` containing the given vertices.

    A label ``(a, b, l)`` belongs to it iff ``b`` occurs among the given
    ``b``-values, ``a`` and ``l`` occur among the given ``a``/``l`` values, and
    every integer strictly between ``l`` and ``a`` lies strictly inside some
    given ``(l_i, a_i)``.
    """
    given = [check_label(r, RayLabel(*lab)) for lab in labels]
    if not given:
        raise ValidationError("minimal_face needs at least one label")
    bs = {lab.b for lab in given}
    ends = {lab.a for lab in given} | {lab.l for lab in given}
    covered = set()
    for a, _, l in given:
        covered.update(range(l + 1, a))
    P = polytope(r)
    mask = 0
    for i, (a, b, l) in enumerate(P.labels):
        if b in bs and a in ends and l in ends and all(j in covered for j in range(l + 1, a)):
            mask |= 1 << i
    return FaceVertexSet(r, mask)


def face_dimension(r: int, fs: FaceVertexSet) -> int:
    """Rank of the generators of ``fs`` minus one (``-1`` for the empty set)."""
    if not fs.mask:
        return -1
    return polytope(r).vertex_rank(fs.mask) - 1


def is_face(r: int, labels: Iterable[Sequence[int]]) -> bool:
    P = polytope(r)
    mask = P.mask_of(RayLabel(*lab) for lab in labels)
    return bool(mask) and P.closure(mask) == mask


def is_edge(r: int, u: Sequence[int], v: Sequence[int]) -> bool:
    """Whether two distinct vertices span an edge, decided from labels alone."""
    u = check_label(r, RayLabel(*u))
    v = check_label(r, RayLabel(*v))
    if u == v:
        raise ValidationError("is_edge needs two distinct vertices")
    if u.a - u.b > v.a - v.b:
        u, v = v, u
    a, b, l = u
    a2, b2, l2 = v
    if a == b:
        return a2 == b2 or a == b2 or a >= a2 or l2 >= a
    matches = (a == a2) + (b == b2) + (l == l2)
    return matches >= 2 or l >= a2 or l2 >= a


# -- enumeration -------------------------------------------------------------


class _Budget:
    def __init__(self, max_faces: int | None, time_budget: float | None):
        self.max_faces = default_max_faces() if max_faces is None else max_faces
        budget = default_time_budget() if time_budget is None else time_budget
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and not self.ticks & 0xFFF and time.monotonic() > self.deadline:
            raise ResourceLimitError("face enumeration exceeded its time budget")

    def check(self, count: int) -> None:
        if count > self.max_faces:
            raise ResourceLimitError(f"face enumeration exceeded {self.max_faces} faces")


def _levels_up(P: KostkaPolytope, top: int, budget: _Budget) -> Iterator[tuple[int, dict[int, int]]]:
    """Yield ``(k, {planes: mask})`` for k = 0..top by extending each
    (k-1)-face with one outside vertex and closing."""
    level = {P.vertex_planes[i]: 1 << i for i in range(P.n)}
    budget.check(len(level))
    yield 0, level
    vp = P.vertex_planes
    for k in range(1, top + 1):
        nxt: dict[int, int] = {}
        seen: set[int] = set()
        for planes, mask in level.items():
            base = None
            for v in bits(P.full & ~mask):
                p2 = planes & vp[v]
                if p2 in seen:
                    continue
                seen.add(p2)
                budget.tick()
                cl = P.closure_of_planes(p2)
                if base is None:
                    base = P.basis_of(mask)
                # the parent is a (k-1)-face, so the closure is a k-face iff
                # its new vertices add exactly one dimension
                if P.adds_one_dimension(base, cl & ~mask):
                    nxt[p2] = cl
            budget.check(len(nxt))
        level = nxt
        yield k, level


def _levels_down(P: KostkaPolytope, bottom: int, budget: _Budget) -> Iterator[tuple[int, dict[int, int]]]:
    """Yield ``(k, {planes: mask})`` for k = dim..bottom by cutting each
    (k+1)-face with every hyperplane not containing it."""
    level = {P.planes_of(P.full): P.full}
    yield P.dim, level
    nh = len(P.hyperplanes)
    for k in range(P.dim - 1, bottom - 1, -1):
        nxt: dict[int, int] = {}
        seen: set[int] = set()
        for planes, mask in level.items():
            for j in range(nh):
                if planes >> j & 1:
                    continue
                cl = mask & P.plane_vertices[j]
                if not cl or cl in seen:
                    continue
                seen.add(cl)
                budget.tick()
                p2 = P.planes_of(cl)
                if P.dimension(cl, p2) == k:
                    nxt[p2] = cl
            budget.check(len(nxt))
        level = nxt
        yield k, level


def _level(r: int, d: int, max_faces: int | None, time_budget: float | None) -> dict[int, int]:
    P = polytope(r)
    if not 0 <= d <= P.dim:
        raise ValidationError(f"dimension {d} out of range 0..{P.dim} for r={r}")
    budget = _Budget(max_faces, time_budget)
    if d <= P.dim - d:
        gen = _levels_up(P, d, budget)
    else:
        gen = _levels_down(P, d, budget)
    for k, level in gen:
        if k == d:
            return level
    raise AssertionError("unreachable")


def _sorted_faces(r: int, masks: Iterable[int], d: int) -> list[FaceVertexSet]:
    faces = [FaceVertexSet(r, m, d) for m in masks]
    faces.sort(key=lambda f: (f.size, f.indices))
    return faces


def enumerate_faces(
    r: int,
    d: int | None = None,
    max_faces: int | None = None,
    time_budget: float | None = None,
) -> list[FaceVertexSet]:
    """All nonempty faces of ``P_r`` of dimension ``d`` (every dimension when
    ``d`` is None), sorted by vertex count and then vertex indices."""
    if d is not None:
        return _sorted_faces(r, _level(r, d, max_faces, time_budget).values(), d)
    P = polytope(r)
    out: list[FaceVertexSet] = []
    budget = _Budget(max_faces, time_budget)
    for k, level in _levels_up(P, P.dim, budget):
        out.extend(_sorted_faces(r, level.values(), k))
        budget.check(len(out))
    return out


def face_counts(
    r: int,
    dims: Iterable[int] | None = None,
    max_faces: int | None = None,
    time_budget: float | None = None,
) -> dict[int, int]:
    """Number of faces of each requested dimension (all of 0..2r-2 by default)."""
    P = polytope(r)
    if dims is None:
        budget = _Budget(max_faces, time_budget)
        return {k: len(level) for k, level in _levels_up(P, P.dim, budget)}
    return {d: len(_level(r, d, max_faces, time_budget)) for d in dims}


def max_face_vertices(r: int, d: int, max_faces: int | None = None, time_budget: float | None = None) -> int:
    """Largest vertex count of a ``d``-face of ``P_r``."""
    level = _level(r, d, max_faces, time_budget)
    return max(m.bit_count() for m in level.values())


def m_closed_form(d: int) -> int:
    """Maximum product of three positive integers summing to ``d + 3``."""
    if d < 0:
        raise ValidationError(f"d must be nonnegative, got {d}")
    out = 1
    for i in range(1, 4):
        out *= (d + 2 + i) // 3
    return out


def construct_max_face(r: int, z1: int, z2: int, z3: int) -> FaceVertexSet:
    """Face cut out by ``lam_1 = .. = lam_{z1}``, ``lam_{z1+z2} = .. = lam_r = 0``
    and ``mu_{z1} = .. = mu_{r-z3}``; it has ``z1*z2*z3`` vertices."""
    if min(z1, z2, z3) < 1:
        raise ValidationError("z1, z2, z3 must be positive")
    d = z1 + z2 + z3 - 3
    if r <= d + 1:
        raise ValidationError(f"need r > d + 1 = {d + 1}, got r={r}")
    labels = [
        RayLabel(a, b, l)
        for l in range(z1)
        for b in range(z1, z1 + z2)
        for a in range(r - z3 + 1, r + 1)
    ]
    fs = FaceVertexSet.from_labels(r, labels)
    return FaceVertexSet(r, fs.mask, face_dimension(r, fs))


@dataclass(frozen=True)
class OrderClass:
    pattern: tuple[int, ...]
    t: int


def canonical_class(labels: Iterable[Sequence[int]]) -> OrderClass:
    """Rank-compress the concatenated, lexicographically sorted label entries."""
    flat = [x for lab in sorted(tuple(lab) for lab in labels) for x in lab]
    values = sorted(set(flat))
    rank = {x: i for i, x in enumerate(values)}
    return OrderClass(tuple(rank[x] for x in flat), len(values))


def realize_class(cls: OrderClass, values: Sequence[int]) -> list[RayLabel]:
    """Labels obtained by substituting ``values`` (strictly increasing, one per
    class value) into an order pattern."""
    if len(values) != cls.t or any(x >= y for x, y in zip(values, values[1:])):
        raise ValidationError("need exactly t strictly increasing values")
    flat = [values[i] for i in cls.pattern]
    return [RayLabel(*flat[i : i + 3]) for i in range(0, len(flat), 3)]


def labels_valid(r: int, labels: Iterable[Sequence[int]]) -> bool:
    return all(is_valid_label(r, *lab) for lab in labels)
