"""Majorization relations and the maximal conversion probability.

Vectors of different dimension are compared after padding the shorter one
with zeros.  All comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import AllZero, TargetIsZeroVector, TotalMismatch
from .vectors import ONE, ProbVector, bottom_sum, pad, to_fraction


def _aligned(x: ProbVector, y: ProbVector) -> tuple[ProbVector, ProbVector]:
    n = max(x.dim, y.dim)
    return pad(x, n), pad(y, n)


def _aligned_equal_totals(x, y):
    x, y = _aligned(x, y)
    if x.total != y.total:
        raise TotalMismatch(f"totals differ: {x.total} vs {y.total}")
    return x, y


def majorizes(x: ProbVector, y: ProbVector) -> bool:
    """True iff ``x`` is majorized by ``y`` (every prefix sum of x <= that of y)."""
    x, y = _aligned_equal_totals(x, y)
    return all(a <= b for a, b in zip(x.prefix[1:-1], y.prefix[1:-1]))


def strictly_majorized(x: ProbVector, y: ProbVector) -> bool:
    """True iff every proper prefix sum of ``x`` is strictly below that of ``y``."""
    x, y = _aligned_equal_totals(x, y)
    return all(a < b for a, b in zip(x.prefix[1:-1], y.prefix[1:-1]))


def tie_indices(x: ProbVector, y: ProbVector) -> set[int]:
    """Indices ``m`` in ``1..n-1`` where the prefix sums of x and y coincide."""
    x, y = _aligned_equal_totals(x, y)
    n = x.dim
    return {m for m in range(1, n) if x.prefix[m] == y.prefix[m]}


def prefix_gaps(x: ProbVector, y: ProbVector) -> list[tuple[int, Fraction, Fraction]]:
    """``(l, top l of x, top l of y)`` for every proper prefix."""
    x, y = _aligned_equal_totals(x, y)
    return [(m, x.prefix[m], y.prefix[m]) for m in range(1, x.dim)]


def super_majorized(x: ProbVector, y: ProbVector) -> bool:
    """True iff every suffix (smallest-l) sum of ``x`` is at least that of ``y``."""
    x, y = _aligned(x, y)
    return all(bottom_sum(x, l) >= bottom_sum(y, l) for l in range(1, x.dim + 1))


def strictly_super_majorized(x: ProbVector, y: ProbVector) -> bool:
    x, y = _aligned(x, y)
    return all(bottom_sum(x, l) > bottom_sum(y, l) for l in range(1, x.dim + 1))


def scale(y: ProbVector, lam) -> ProbVector:
    lam = to_fraction(lam)
    if lam <= 0:
        raise ValueError(f"scale factor must be positive, got {lam}")
    return ProbVector._trusted(tuple(c * lam for c in y.components), y.total * lam)


@dataclass(frozen=True)
class PmaxResult:
    value: Fraction
    argmin_l: int
    skipped_indices: frozenset[int] = field(default_factory=frozenset)

    def __str__(self) -> str:
        return f"{self.value} ({float(self.value):.6g}) at l={self.argmin_l}"


def pmax(x: ProbVector, y: ProbVector) -> PmaxResult:
    """Maximal probability of converting ``x`` into ``y``.

    Minimum over ``l`` of (sum of l smallest of x) / (sum of l smallest of y).
    Indices where the target's tail sum is zero impose no constraint and are
    reported in ``skipped_indices``.
    """
    x, y = _aligned(x, y)
    if y.total == 0:
        raise TargetIsZeroVector("target vector has zero total")
    if x.total == 0:
        raise AllZero("source vector has zero total")
    if x.total != y.total:
        raise TotalMismatch(f"totals differ: {x.total} vs {y.total}")
    best = None
    best_l = 0
    skipped = set()
    for l in range(1, x.dim + 1):
        denom = bottom_sum(y, l)
        if denom == 0:
            skipped.add(l)
            continue
        ratio = bottom_sum(x, l) / denom
        if best is None or ratio < best:
            best, best_l = ratio, l
    assert best is not None and best <= ONE
    return PmaxResult(best, best_l, frozenset(skipped))
