"""Hilbert-basis membership, the two coprimality constructions and initial pairs.

Adding cone points row by row is the same as taking the union of their column
multisets.  So ``(lam, mu)`` is reducible exactly when the columns of ``lam``
and of ``mu`` split into proper parts ``A``, ``B`` of equal total size such that
both the pair built from ``A``, ``B`` and the pair built from the complements
satisfy dominance.  Equal subset sums alone are necessary but not sufficient:
``((3, 3), (3, 1, 1, 1))`` has matching sums yet spans an extremal ray.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator

from .core import ConePoint, conjugate, dominates, embed, partitions
from .errors import ValidationError
from .exact import integer_rank
from .rays import facet_ids, hyperplane_normal, size_balance_normal

DEFAULT_DECOMPOSE_BOUND = 20
DEFAULT_SCAN_CANDIDATES = 200_000


def _subset_sums(parts, limit: int) -> int:
    cap = (1 << (limit + 1)) - 1
    reach = 1
    for c in parts:
        reach = (reach | (reach << c)) & cap
    return reach


def _common_sums(p: ConePoint) -> int:
    # matching sums s and n - s come in pairs, so s <= n // 2 suffices
    half = p.size // 2
    return _subset_sums(conjugate(p.lam), half) & _subset_sums(conjugate(p.mu), half) & ~1


def shares_column_sum(p: ConePoint) -> bool:
    """Whether some proper nonempty set of ``lam``-columns and some set of
    ``mu``-columns have equal total size.  Every reducible point has this
    property; the converse can fail."""
    if p.size == 0:
        raise ValidationError("the zero point is not a Hilbert basis candidate")
    return _common_sums(p) != 0


def _sub_multisets(cols: tuple[int, ...], allowed: int) -> dict[int, list[tuple[int, ...]]]:
    """Sub-multisets of ``cols`` grouped by total, keeping totals set in ``allowed``."""
    heights = sorted(set(cols), reverse=True)
    mult = [cols.count(h) for h in heights]
    out: dict[int, list[tuple[int, ...]]] = {}
    for counts in product(*(range(m + 1) for m in mult)):
        s = sum(c * h for c, h in zip(counts, heights))
        if allowed >> s & 1:
            sub = tuple(h for c, h in zip(counts, heights) for _ in range(c))
            out.setdefault(s, []).append(sub)
    return out


def _minus(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def is_hilbert_basis_element(p: ConePoint) -> bool:
    """Whether ``p`` is irreducible, i.e. not a sum of two nonzero integral cone points."""
    if p.size == 0:
        raise ValidationError("the zero point is not a Hilbert basis candidate")
    common = _common_sums(p)
    if not common:
        return True
    lam_parts = _sub_multisets(conjugate(p.lam), common)
    mu_parts = _sub_multisets(conjugate(p.mu), common)
    for s, subs in lam_parts.items():
        for cols_a in subs:
            alpha = conjugate(cols_a)
            rest_l = _minus(p.lam, alpha)
            for cols_b in mu_parts.get(s, ()):
                beta = conjugate(cols_b)
                if dominates(alpha, beta) and dominates(rest_l, _minus(p.mu, beta)):
                    return False
    return True


def _splits(parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All ``alpha`` with ``alpha`` and ``parts - alpha`` both non-increasing and nonnegative."""
    k = len(parts)

    def rec(i: int, prev_a: int, prev_b: int, prefix: tuple[int, ...]):
        if i == k:
            yield prefix
            return
        x = parts[i]
        for a in range(min(x, prev_a), -1, -1):
            if x - a <= prev_b:
                yield from rec(i + 1, a, x - a, prefix + (a,))

    big = max(parts, default=0)
    yield from rec(0, big, big, ())


def decompose(p: ConePoint, max_size: int = DEFAULT_DECOMPOSE_BOUND) -> tuple[ConePoint, ConePoint] | None:
    """Split ``p`` into two nonzero integral cone points, or None if irreducible.

    Exhaustive over coordinatewise splits; meant as an oracle at small sizes.
    """
    n = p.size
    if n > max_size:
        raise ValidationError(f"decompose is limited to size {max_size}, got {n}")
    lam, mu = p.padded()
    by_size_mu: dict[int, list[tuple[int, ...]]] = {}
    for g in _splits(mu):
        by_size_mu.setdefault(sum(g), []).append(g)
    for a in _splits(lam):
        s = sum(a)
        if s == 0 or s == n:
            continue
        rest_l = tuple(x - y for x, y in zip(lam, a))
        for g in by_size_mu.get(s, ()):
            rest_m = tuple(x - y for x, y in zip(mu, g))
            if dominates(a, g) and dominates(rest_l, rest_m):
                return ConePoint(a, g, p.r), ConePoint(rest_l, rest_m, p.r)
    return None


def r_min(lambda1: int, mu1: int) -> int:
    """Smallest ``z >= lambda1`` coprime to ``mu1``."""
    if not lambda1 > mu1 >= 1:
        raise ValidationError(f"need lambda1 > mu1 >= 1, got ({lambda1}, {mu1})")
    z = lambda1
    while gcd(z, mu1) != 1:
        z += 1
    return z


def construct_gcd1(lambda1: int, mu1: int) -> tuple[int, ConePoint]:
    """Irreducible point in ``K_r``, ``r = r_min``, with first entries ``(lambda1, mu1)``:
    a ``mu1 x lambda1`` rectangle against ``mu1^(r-mu1), (mu1-(r-lambda1))^mu1``."""
    r = r_min(lambda1, mu1)
    low = mu1 - (r - lambda1)
    assert low >= 0, (lambda1, mu1, r)
    p = ConePoint((lambda1,) * mu1, (mu1,) * (r - mu1) + (low,) * mu1, r)
    assert is_hilbert_basis_element(p), p
    return r, p


def construct_gcd2(lambda1: int, mu1: int) -> tuple[int, ConePoint]:
    """Irreducible point in ``K_{lambda1+1}`` when ``gcd(lambda1+1, mu1+1) = 1``
    and ``2*mu1 >= lambda1``; ``mu`` is the rectangle ``mu1^(lambda1+1)``."""
    if not lambda1 >= mu1 >= 1:
        raise ValidationError(f"need lambda1 >= mu1 >= 1, got ({lambda1}, {mu1})")
    if gcd(lambda1 + 1, mu1 + 1) != 1:
        raise ValidationError(f"gcd({lambda1 + 1}, {mu1 + 1}) != 1")
    if 2 * mu1 < lambda1:
        raise ValidationError(f"need 2*mu1 >= lambda1, got ({lambda1}, {mu1})")
    r = lambda1 + 1
    lam = (lambda1,) * (2 * mu1 - lambda1 + 1) + (lambda1 - 1,) * (lambda1 - mu1)
    p = ConePoint(lam, (mu1,) * r, r)
    if not is_hilbert_basis_element(p):
        raise ValidationError(f"construction for ({lambda1}, {mu1}) is reducible")
    return r, p


@dataclass(frozen=True)
class InitialPair:
    lambda1: int
    mu1: int
    conditions: tuple[bool, bool, bool]
    # the third condition under the stricter 2*mu1 > lambda1 + 1
    strict_third: bool

    @property
    def sufficient(self) -> bool:
        return any(self.conditions)

    def to_json(self) -> dict:
        return {
            "pair": [self.lambda1, self.mu1],
            "conditions": list(self.conditions),
            "sufficient": self.sufficient,
        }


def classify_initial_pair(lambda1: int, mu1: int) -> InitialPair:
    if not lambda1 >= mu1 >= 1:
        raise ValidationError(f"need lambda1 >= mu1 >= 1, got ({lambda1}, {mu1})")
    c3 = gcd(lambda1 + 1, mu1 + 1) == 1
    return InitialPair(
        lambda1,
        mu1,
        (
            gcd(lambda1, mu1) == 1,
            gcd(lambda1 + 1, mu1) == 1,
            c3 and 2 * mu1 >= lambda1,
        ),
        c3 and 2 * mu1 > lambda1 + 1,
    )


def failing_pairs(max_lambda1: int) -> list[tuple[int, int]]:
    """Pairs ``mu1 < lambda1 <= max_lambda1`` meeting none of the three conditions."""
    return [
        (l1, m1)
        for l1 in range(2, max_lambda1 + 1)
        for m1 in range(1, l1)
        if not classify_initial_pair(l1, m1).sufficient
    ]


def initial_certificate(lambda1: int, mu1: int) -> ConePoint | None:
    """A Hilbert basis element of ``K_{lambda1+1}`` starting with ``(lambda1, mu1)``,
    built from whichever sufficient condition holds; None if none does."""
    c = classify_initial_pair(lambda1, mu1)
    r = lambda1 + 1
    if lambda1 == mu1:
        # primitive generator of the ray (lambda1 + 1, 2, 1)
        return ConePoint((lambda1, lambda1), (lambda1,) + (1,) * lambda1, r)
    if c.conditions[0] or c.conditions[1]:
        _, p = construct_gcd1(lambda1, mu1)
        return embed(p, r)
    if c.conditions[2]:
        return construct_gcd2(lambda1, mu1)[1]
    return None


def is_initial_at_width(r: int, mu1: int) -> bool:
    """Whether ``(r, mu1)`` is ``r``-initial, i.e. ``r`` and ``mu1`` are coprime."""
    if not 1 <= mu1 <= r:
        raise ValidationError(f"need 1 <= mu1 <= r, got r={r}, mu1={mu1}")
    return gcd(r, mu1) == 1


def cone_face_dimension(p: ConePoint) -> int:
    """Dimension of the smallest face of ``K_r`` containing ``p``.

    ``p`` lies in the relative interior of that face, so its affine hull is cut
    out by exactly the hyperplanes tight at ``p`` together with the size
    balance equation.
    """
    r = p.r
    x = p.vector()
    rows = [size_balance_normal(r)]
    for f in facet_ids(r):
        n = hyperplane_normal(r, f)
        if sum(s * t for s, t in zip(n, x)) == 0:
            rows.append(n)
    return 2 * r - integer_rank(rows)


def lies_on_2face(p: ConePoint) -> bool:
    return cone_face_dimension(p) <= 2


@dataclass(frozen=True)
class ScanResult:
    status: str  # "found", "exhausted" or "budget-exceeded"
    witness: ConePoint | None
    examined: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "examined": self.examined,
        }


def _with_first(first: int, n: int, r: int) -> Iterator[tuple[int, ...]]:
    if n < first:
        return
    for rest in partitions(n - first, max_len=r - 1, max_part=first):
        yield (first,) + rest


def scan_initial(
    lambda1: int,
    mu1: int,
    r: int,
    max_candidates: int | None = DEFAULT_SCAN_CANDIDATES,
    time_budget: float | None = None,
) -> ScanResult:
    """Search ``K_r`` for a Hilbert basis element with first entries ``(lambda1, mu1)``.

    Sizes run from ``lambda1`` up to ``mu1 * r``, the largest size a partition
    with first part ``mu1`` and ``r`` parts can have, so an exhausted search
    is a proof of absence.
    """
    if not lambda1 >= mu1 >= 1:
        raise ValidationError(f"need lambda1 >= mu1 >= 1, got ({lambda1}, {mu1})")
    if r < lambda1:
        raise ValidationError(f"need r >= lambda1, got r={r}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    examined = 0
    for n in range(lambda1, mu1 * r + 1):
        mus = list(_with_first(mu1, n, r))
        if not mus:
            continue
        for lam in _with_first(lambda1, n, r):
            for mu in mus:
                examined += 1
                if max_candidates is not None and examined > max_candidates:
                    return ScanResult("budget-exceeded", None, examined - 1)
                if deadline is not None and not examined & 0x3FF and time.monotonic() > deadline:
                    return ScanResult("budget-exceeded", None, examined)
                if not dominates(lam, mu):
                    continue
                p = ConePoint(lam, mu, r)
                if is_hilbert_basis_element(p):
                    return ScanResult("found", p, examined)
    return ScanResult("exhausted", None, examined)
