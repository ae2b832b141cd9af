"""Face-count polynomials, f-/h-vectors and the cyclic-polytope comparison.

The number of d-faces of ``P_r`` is a polynomial in ``r`` with a nonnegative
integer expansion ``sum_k alpha_k * C(r, k)`` for ``d_min <= k <= 3d + 3``,
``d_min = (d + 3) // 2``.  Knowing ``f_d(k)`` for those ``k`` pins every
coefficient down by a triangular recursion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .errors import ValidationError
from .faces import face_counts, polytope
from .rays import num_rays


def d_min(d: int) -> int:
    return (d + 3) // 2


def top_degree(d: int) -> int:
    return 3 * d + 3


@dataclass(frozen=True)
class BinomialPolynomial:
    """``sum_k alpha[k] * C(r, k)`` describing the number of ``d``-faces."""

    d: int
    alpha: Mapping[int, int] = field(default_factory=dict)

    def __call__(self, r: int) -> int:
        return evaluate(self, r)

    def coefficients(self) -> list[tuple[int, int]]:
        return sorted((k, a) for k, a in self.alpha.items() if a)

    def to_json(self) -> dict:
        return {"d": self.d, "alpha": {str(k): a for k, a in self.coefficients()}}

    @classmethod
    def from_json(cls, obj: dict) -> "BinomialPolynomial":
        return cls(int(obj["d"]), {int(k): int(v) for k, v in obj["alpha"].items()})

    def __str__(self) -> str:
        terms = [f"{a}*C(r,{k})" for k, a in reversed(self.coefficients())]
        return " + ".join(terms) if terms else "0"


def evaluate(p: BinomialPolynomial, r: int) -> int:
    if r < 0:
        raise ValidationError(f"r must be nonnegative, got {r}")
    return sum(a * comb(r, k) for k, a in p.alpha.items())


def alpha_dmin_expected(d: int) -> int:
    """The lowest coefficient: a facet count for odd ``d``, one top face for even ``d``."""
    if d < 0:
        raise ValidationError(f"d must be nonnegative, got {d}")
    if d == 1:
        return 3
    if d % 2:
        return 3 * d - 2
    return 1


def fit_face_polynomial(d: int, values: Mapping[int, int]) -> BinomialPolynomial:
    """Coefficients from ``values[k] = f_d(k)`` for ``k = d_min .. 3d+3``.

    Raises :class:`ValidationError` if a value is missing or the recursion
    produces a negative coefficient, which means the inputs are not face
    counts of Kostka polytopes.
    """
    lo, hi = d_min(d), top_degree(d)
    missing = [k for k in range(lo, hi + 1) if k not in values]
    if missing:
        raise ValidationError(f"missing f_{d}(r) for r in {missing}")
    alpha: dict[int, int] = {}
    for k in range(lo, hi + 1):
        a = int(values[k]) - sum(comb(k, j) * alpha[j] for j in range(lo, k))
        if a < 0:
            raise ValidationError(f"fit gives negative alpha_{k} = {a}; inputs are inconsistent")
        alpha[k] = a
    return BinomialPolynomial(d, alpha)


def enumerated_values(d: int, max_faces: int | None = None, time_budget: float | None = None) -> dict[int, int]:
    """``f_d(k)`` by direct enumeration for ``k = d_min .. 3d+3``."""
    out = {}
    for k in range(d_min(d), top_degree(d) + 1):
        if d > 2 * k - 2:
            out[k] = 0
        else:
            out[k] = face_counts(k, [d], max_faces, time_budget)[d]
    return out


def fit_from_enumeration(d: int, max_faces: int | None = None, time_budget: float | None = None) -> BinomialPolynomial:
    return fit_face_polynomial(d, enumerated_values(d, max_faces, time_budget))


@dataclass(frozen=True)
class FVector:
    """``entries[i]`` is ``f_{i-1}``: the empty face first, then vertices, edges, ..."""

    r: int
    entries: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.entries[k + 1]

    def to_json(self) -> dict:
        return {"r": self.r, "f_start": -1, "f": list(self.entries)}


@dataclass(frozen=True)
class HVector:
    r: int
    entries: tuple[int, ...]

    def to_json(self) -> dict:
        return {"r": self.r, "h_start": 0, "h": list(self.entries)}


def f_vector(r: int, max_faces: int | None = None, time_budget: float | None = None) -> FVector:
    """``(f_{-1}, f_0, ..., f_{2r-3})`` of ``P_r`` from full enumeration."""
    counts = face_counts(r, None, max_faces, time_budget)
    dim = polytope(r).dim
    return FVector(r, (1,) + tuple(counts[k] for k in range(dim)))


def h_from_f(f: FVector, dim: int) -> tuple[int, ...]:
    fs = f.entries
    return tuple(
        sum((-1) ** (k - i) * comb(dim - i, k - i) * fs[i] for i in range(k + 1))
        for k in range(dim + 1)
    )


def h_vector(r: int, max_faces: int | None = None, time_budget: float | None = None) -> HVector:
    f = f_vector(r, max_faces, time_budget)
    return HVector(r, h_from_f(f, 2 * r - 2))


def check_h_conjecture(r: int, h: HVector | None = None) -> tuple[bool, int | None]:
    """Whether ``h_k = 1`` for ``r - 1 <= k <= 2r - 2``; on failure also the first bad ``k``."""
    if h is None:
        h = h_vector(r)
    for k in range(r - 1, 2 * r - 1):
        if h.entries[k] != 1:
            return False, k
    return True, None


def cyclic_face_count(n: int, m: int, d: int) -> int:
    """Number of ``d``-faces of the cyclic ``m``-polytope on ``n`` vertices (``d <= m // 2``)."""
    if d > m // 2:
        raise ValidationError(f"the closed form needs d <= floor(m/2); got d={d}, m={m}")
    return comb(n, d + 1)


def limit_ratio(d: int) -> Fraction:
    """Limit of ``f_d(r)`` over the matching cyclic-polytope face count."""
    return Fraction(6 ** (d + 1) * factorial(d + 1), factorial(3 * d + 3))


def cyclic_ratio(p: BinomialPolynomial, r: int) -> Fraction:
    """``f_d(r) / C(n_r, d+1)`` where ``n_r`` is the vertex count of ``P_r``."""
    return Fraction(evaluate(p, r), comb(num_rays(r), p.d + 1))
