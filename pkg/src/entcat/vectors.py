"""Exact-rational probability vectors.

A :class:`ProbVector` is an immutable, non-increasingly sorted tuple of
:class:`fractions.Fraction` components together with its total.  Totals other
than one are allowed so that unnormalized catalysts such as
``(1, a, a**2, ...)`` can be handled without dividing through.

Heavy kernels (tensor products, prefix sums) work on integer numerators over a
common denominator, which keeps sorting and accumulation on plain ``int``.
"""

from __future__ import annotations

import heapq
import math
import os
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from itertools import accumulate, repeat
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import (
    AllZero,
    DimensionTooSmall,
    EmptyVector,
    IndexOutOfRange,
    InvalidVector,
    NegativeComponent,
    ParseError,
    SizeCapExceeded,
    TotalMismatch,
    ZeroComponent,
)

DEFAULT_SIZE_CAP = 10**6
SIZE_CAP_ENV = "ENTCAT_SIZE_CAP"

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be decimals (``"0.25"``) or ratios (``"1/4"``); floats go
    through their shortest ``repr`` so ``0.1`` becomes ``1/10`` rather than
    the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse {value!r} as a rational") from exc
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"cannot convert {value!r} to a rational") from exc


def size_cap() -> int:
    """Component cap for tensor powers; ``ENTCAT_SIZE_CAP`` overrides it."""
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ParseError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ParseError(f"{SIZE_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class ProbVector:
    """Sorted (non-increasing), non-negative rational vector with its total."""

    components: tuple[Fraction, ...]
    total: Fraction | None = None

    def __post_init__(self):
        comps = tuple(to_fraction(v) for v in self.components)
        for value in comps:
            if value < 0:
                raise NegativeComponent(f"negative component {value}")
        for a, b in zip(comps, comps[1:]):
            if a < b:
                raise InvalidVector("components must be sorted non-increasing; use canonicalize()")
        actual = sum(comps, ZERO)
        if self.total is None:
            total = actual
        else:
            total = to_fraction(self.total)
            if total != actual:
                raise TotalMismatch(f"declared total {total} but components sum to {actual}")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "total", total)

    @classmethod
    def _trusted(cls, components: tuple[Fraction, ...], total: Fraction) -> "ProbVector":
        # Internal constructor for results that are sorted by construction.
        obj = object.__new__(cls)
        object.__setattr__(obj, "components", components)
        object.__setattr__(obj, "total", total)
        return obj

    @classmethod
    def _from_scaled(cls, ints: list[int], denom: int, total: Fraction) -> "ProbVector":
        obj = cls._trusted(tuple(Fraction(v, denom) for v in ints), total)
        obj.__dict__["scaled"] = (tuple(ints), denom)
        return obj

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.components)

    def __getitem__(self, index):
        return self.components[index]

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.components)
        return f"ProbVector(({body}), total={self.total})"

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def is_normalized(self) -> bool:
        return self.total == 1

    @property
    def is_uniform(self) -> bool:
        return not self.components or self.components[0] == self.components[-1]

    @cached_property
    def scaled(self) -> tuple[tuple[int, ...], int]:
        """Integer numerators over the least common denominator."""
        denom = math.lcm(*(c.denominator for c in self.components)) if self.components else 1
        return tuple(c.numerator * (denom // c.denominator) for c in self.components), denom

    @cached_property
    def prefix(self) -> tuple[Fraction, ...]:
        """``prefix[l]`` is the sum of the ``l`` largest components."""
        ints, denom = self.scaled
        return (ZERO,) + tuple(Fraction(s, denom) for s in accumulate(ints))

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.components]


def canonicalize(raw: Iterable) -> ProbVector:
    """Sort ``raw`` non-increasingly and wrap it as a :class:`ProbVector`."""
    values = [to_fraction(v) for v in raw]
    if not values:
        raise EmptyVector("vector has no components")
    for value in values:
        if value < 0:
            raise NegativeComponent(f"negative component {value}")
    if all(v == 0 for v in values):
        raise AllZero("vector has no positive component")
    values.sort(reverse=True)
    return ProbVector._trusted(tuple(values), sum(values, ZERO))


def vector(*values) -> ProbVector:
    """Shorthand: ``vector("0.4", "0.4", "0.1", "0.1")``."""
    return canonicalize(values)


def normalize(x: ProbVector) -> ProbVector:
    if x.total == 0:
        raise AllZero("cannot normalize a zero vector")
    return ProbVector._trusted(tuple(c / x.total for c in x.components), ONE)


def uniform(n: int, total=1) -> ProbVector:
    if n < 1:
        raise EmptyVector("uniform vector needs n >= 1")
    total = to_fraction(total)
    return ProbVector._trusted(tuple(repeat(total / n, n)), total)


def pad(x: ProbVector, n: int) -> ProbVector:
    """Append zeros up to dimension ``n``."""
    if n <= x.dim:
        return x
    return ProbVector._trusted(x.components + (ZERO,) * (n - x.dim), x.total)


def top_sum(x: ProbVector, l: int) -> Fraction:
    """Sum of the ``l`` largest components."""
    if not 0 <= l <= x.dim:
        raise IndexOutOfRange(f"l={l} outside 0..{x.dim}")
    return x.prefix[l]


def bottom_sum(x: ProbVector, l: int) -> Fraction:
    """Sum of the ``l`` smallest components."""
    if not 0 <= l <= x.dim:
        raise IndexOutOfRange(f"l={l} outside 0..{x.dim}")
    return x.total - x.prefix[x.dim - l]


e_sum = top_sum
E_sum = bottom_sum


def direct_sum(x: ProbVector, y: ProbVector) -> ProbVector:
    merged = tuple(heapq.merge(x.components, y.components, reverse=True))
    return ProbVector._trusted(merged, x.total + y.total)


def direct_power(x: ProbVector, k: int) -> ProbVector:
    """``k``-fold direct sum of ``x`` with itself."""
    if k < 1:
        raise IndexOutOfRange("direct power needs k >= 1")
    comps = tuple(c for c in x.components for _ in range(k))
    return ProbVector._trusted(comps, x.total * k)


def tensor(x: ProbVector, y: ProbVector) -> ProbVector:
    """All pairwise products, sorted non-increasing."""
    xi, dx = x.scaled
    yi, dy = y.scaled
    products = sorted((a * b for a in xi for b in yi), reverse=True)
    return ProbVector._from_scaled(products, dx * dy, x.total * y.total)


def tensor_power(x: ProbVector, k: int, cap: int | None = None) -> ProbVector:
    """``k``-fold tensor power by repeated squaring."""
    if k < 1:
        raise IndexOutOfRange("tensor power needs k >= 1")
    cap = size_cap() if cap is None else cap
    if x.dim ** k > cap:
        raise SizeCapExceeded(f"dim {x.dim}^{k} = {x.dim ** k} exceeds cap {cap}")
    result = None
    base = x
    while k:
        if k & 1:
            result = base if result is None else tensor(result, base)
        k >>= 1
        if k:
            base = tensor(base, base)
    return result


def local_uniformity(x: ProbVector) -> Fraction:
    """Smallest ratio between consecutive components, over all n-1 pairs."""
    if x.dim < 2:
        raise DimensionTooSmall("local uniformity needs at least two components")
    if x.components[-1] <= 0:
        raise ZeroComponent("local uniformity needs positive components")
    comps = x.components
    return min(comps[i + 1] / comps[i] for i in range(len(comps) - 1))


def global_uniformity(x: ProbVector) -> Fraction:
    """Smallest component over the largest one."""
    if x.dim < 1 or x.components[0] <= 0:
        raise AllZero("global uniformity needs a positive largest component")
    return x.components[-1] / x.components[0]


def perturb_extremes(x: ProbVector, eps) -> ProbVector:
    """Move ``eps`` of mass from the smallest component to the largest."""
    eps = to_fraction(eps)
    comps = list(x.components)
    if eps < 0 or eps > comps[-1]:
        raise InvalidVector(f"perturbation {eps} not in [0, {comps[-1]}]")
    if x.dim == 1:
        return x
    comps[0] += eps
    comps[-1] -= eps
    return ProbVector._trusted(tuple(comps), x.total)


@dataclass(frozen=True)
class Segment:
    """Contiguous run ``values == parent[start_index-1:end_index]`` (1-based)."""

    start_index: int
    end_index: int
    values: tuple[Fraction, ...]

    def as_vector(self) -> ProbVector:
        return ProbVector._trusted(self.values, sum(self.values, ZERO))

    def __len__(self) -> int:
        return len(self.values)


def segment(x: ProbVector, start: int, end: int) -> Segment:
    if not 1 <= start <= end <= x.dim:
        raise IndexOutOfRange(f"segment {start}..{end} outside 1..{x.dim}")
    return Segment(start, end, x.components[start - 1:end])


def segments_of(x: ProbVector) -> Iterator[Segment]:
    """All contiguous segments of length at least two, shortest first."""
    n = x.dim
    for length in range(2, n + 1):
        for start in range(1, n - length + 2):
            yield segment(x, start, start + length - 1)


_SPLIT = re.compile(r"[\s,;]+")


def parse_vector(text: str) -> ProbVector:
    """Parse whitespace/comma separated decimals or ``p/q`` ratios."""
    text = text.split("#", 1)[0]
    tokens = [t for t in _SPLIT.split(text.strip().strip("()[]")) if t]
    if not tokens:
        raise ParseError("no entries found")
    return canonicalize(to_fraction(t) for t in tokens)


def read_vectors(path) -> list[ProbVector]:
    """One vector per non-blank, non-comment line."""
    vectors = []
    for line in Path(path).read_text().splitlines():
        if line.split("#", 1)[0].strip():
            vectors.append(parse_vector(line))
    return vectors


def read_vector(path) -> ProbVector:
    """A whole file read as a single vector (entries may span lines)."""
    lines = [line.split("#", 1)[0] for line in Path(path).read_text().splitlines()]
    return parse_vector(" ".join(lines))


def format_vector(x: ProbVector | Sequence[Fraction]) -> str:
    comps = x.components if isinstance(x, ProbVector) else x
    return "(" + ", ".join(str(c) for c in comps) + ")"
