"""Deterministic catalysis and multiple-copy usefulness.

Split indices ``d`` are 1-based and run over ``2..n-2``.  For a target ``y``
the split at ``d`` cuts it into a head ``y[:d]`` and a tail ``y[d:]``; the
two-level vector :func:`flatten_target` averages each part.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .certificates import Inequality, NotUseful, UsefulnessCertificate
from .errors import (
    AlphaOutOfRange,
    EmptyKd,
    IndexOutOfRange,
    InternalInconsistency,
    IntervalEmpty,
    NoCertificate,
    UniformCatalyst,
    ZeroComponent,
)
from .majorization import majorizes, strictly_majorized
from .vectors import (
    ONE,
    ZERO,
    ProbVector,
    Segment,
    canonicalize,
    global_uniformity,
    local_uniformity,
    normalize,
    perturb_extremes,
    tensor,
    to_fraction,
    uniform,
)


@dataclass(frozen=True)
class SegmentDecomposition:
    alpha: Fraction
    blocks: tuple[ProbVector, ...]
    starts: tuple[int, ...]  # 1-based start of each block inside the parent

    def segments(self) -> list[Segment]:
        return [Segment(s, s + b.dim - 1, b.components) for s, b in zip(self.starts, self.blocks)]


@dataclass(frozen=True)
class FlatTarget:
    d: int
    vector: ProbVector


def _require_positive(c: ProbVector, what="catalyst"):
    if c.dim == 0 or c.components[-1] <= 0:
        raise ZeroComponent(f"{what} must have positive components")


def _block(values) -> ProbVector:
    values = tuple(values)
    return ProbVector._trusted(values, sum(values, ZERO))


def decompose(c: ProbVector, alpha) -> SegmentDecomposition:
    """Split ``c`` wherever the ratio of consecutive components is <= alpha."""
    alpha = to_fraction(alpha)
    if not 0 <= alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    _require_positive(c)
    comps = c.components
    blocks, starts = [], [1]
    current = [comps[0]]
    for i in range(1, len(comps)):
        if comps[i] / comps[i - 1] <= alpha:
            blocks.append(_block(current))
            starts.append(i + 1)
            current = []
        current.append(comps[i])
    blocks.append(_block(current))
    return SegmentDecomposition(alpha, tuple(blocks), tuple(starts))


def _check_split(y: ProbVector, d: int, lo: int, hi: int):
    if not lo <= d <= hi:
        raise IndexOutOfRange(f"split index d={d} outside {lo}..{hi} for n={y.dim}")


def flatten_target(y: ProbVector, d: int) -> FlatTarget:
    """Average the top ``d`` and the bottom ``n-d`` components separately."""
    n = y.dim
    _check_split(y, d, 1, n - 1)
    head = y.prefix[d] / d
    tail = (y.total - y.prefix[d]) / (n - d)
    comps = (head,) * d + (tail,) * (n - d)
    return FlatTarget(d, ProbVector._trusted(comps, y.total))


def kd_nonempty(y: ProbVector, d: int) -> bool:
    _check_split(y, d, 2, y.dim - 2)
    return y[0] > y[d - 1] and y[d] > y[-1]


def in_kd(x: ProbVector, y: ProbVector, d: int) -> bool:
    """Membership of ``x`` in the split region: head and tail strictly inside."""
    if x.dim != y.dim or x.total != y.total:
        return False
    head_x, head_y = _block(x[:d]), _block(y[:d])
    if head_x.total != head_y.total:
        return False
    return strictly_majorized(head_x, head_y) and strictly_majorized(_block(x[d:]), _block(y[d:]))


def kd_witness(y: ProbVector, d: int) -> ProbVector:
    if not kd_nonempty(y, d):
        raise EmptyKd(f"split region at d={d} is empty (y_1 = y_d or y_(d+1) = y_n)")
    x = flatten_target(y, d).vector
    if not in_kd(x, y, d):
        raise InternalInconsistency(f"flattened target is not inside the split region at d={d}")
    return x


def _eq7_parts(y: ProbVector, d: int):
    # (lower bound for local uniformity, upper bound for global uniformity)
    return max(y[d - 1] / y[0], y[-1] / y[d]), y[d] / y[d - 1]


def _eq7_holds(y: ProbVector, values, d: int) -> bool:
    if y[d] == 0 or len(values) < 2:
        return False
    seg = _block(values)
    lower, upper = _eq7_parts(y, d)
    return local_uniformity(seg) > lower and global_uniformity(seg) < upper


def sufficient_condition(y: ProbVector, c: ProbVector, d: int) -> bool:
    """Uniformity test: l_u(c) > max(y_d/y_1, y_n/y_(d+1)) and g_u(c) < y_(d+1)/y_d."""
    _check_split(y, d, 2, y.dim - 2)
    _require_positive(c)
    local_uniformity(c)  # raises for one-dimensional c
    return _eq7_holds(y, c.components, d)


def _eq7_transcript(y, values, d, label="c") -> list[Inequality]:
    seg = _block(values)
    lower, upper = _eq7_parts(y, d)
    return [
        Inequality(f"l_u({label}) > max(y_d/y_1, y_n/y_(d+1)) at d={d}", local_uniformity(seg), ">", lower),
        Inequality(f"g_u({label}) < y_(d+1)/y_d at d={d}", global_uniformity(seg), "<", upper),
    ]


class _BlockData:
    """Sorted ``y (x) block`` as integer prefix sums over a common denominator."""

    def __init__(self, y: ProbVector, block: ProbVector):
        self.block = block
        self.ints, self.cden = block.scaled
        product = tensor(y, block)
        ints, self.den = product.scaled
        self.prefix = [0, *accumulate(ints)]
        self.size = product.dim


def _two_level_runs(a: int, count_a: int, b: int, count_b: int, cints) -> list[tuple[int, int]]:
    """Runs ``(value, multiplicity)`` of the sorted product of a two-level vector and ``cints``."""
    merged = heapq.merge(
        ((a * c, count_a) for c in cints),
        ((b * c, count_b) for c in cints),
        key=lambda run: run[0],
        reverse=True,
    )
    runs: list[list[int]] = []
    for value, count in merged:
        if runs and runs[-1][0] == value:
            runs[-1][1] += count
        else:
            runs.append([value, count])
    return [(v, m) for v, m in runs]


def _flat_scaled(y: ProbVector, d: int) -> tuple[int, int, int]:
    # Head and tail levels of the flattened target, scaled by den(y) * d * (n-d).
    n = y.dim
    yints, _ = y.scaled
    top = sum(yints[:d])
    bottom = sum(yints[d:])
    return top * (n - d), bottom * d, d * (n - d)


def _flat_tensor_strict(runs, data: _BlockData, scale: int) -> bool:
    """Strict prefix dominance of the run-encoded product under ``data``.

    Within one run the prefix sums of the two-level product grow linearly while
    those of ``y (x) block`` are concave, so their gap is concave and only the
    run endpoints need checking.
    """
    size = data.size
    pos = acc = 0
    for value, count in runs:
        lo, hi = max(pos, 1), min(pos + count, size - 1)
        if lo <= hi:
            for l in {lo, hi}:
                if acc + (l - pos) * value >= data.prefix[l] * scale:
                    return False
        acc += value * count
        pos += count
    return True


def _flat_tensor_transcript(runs, data: _BlockData, scale: int, den: int, tag: str) -> list[Inequality]:
    out = []
    size = data.size
    pos = acc = 0
    for value, count in runs:
        for step in range(1, count + 1):
            l = pos + step
            if l >= size:
                break
            lhs = Fraction(acc + step * value, den)
            rhs = Fraction(data.prefix[l] * scale, den)
            out.append(Inequality(f"{tag} e_{l}(y(d) x c') < e_{l}(y x c')", lhs, "<", rhs))
        acc += value * count
        pos += count
    return out


def catalyst_useful(y: ProbVector, c: ProbVector):
    """Decide whether catalyst ``c`` enlarges the set of vectors convertible to ``y``.

    Returns a certificate for the smallest certifying split index, or a
    :class:`NotUseful`, which is a proof of uselessness.
    """
    _require_positive(c)
    n = y.dim
    if n <= 3:
        return NotUseful(f"n={n} <= 3: there is no split index 1 < d < n-1")
    if y.is_uniform:
        return NotUseful("target is uniform: nothing lies strictly inside its majorization set")
    decomposition = decompose(c, global_uniformity(y))
    blocks = [_BlockData(y, b) for b in decomposition.blocks]
    for d in range(2, n - 1):
        if not kd_nonempty(y, d):
            continue
        a, b, flat_scale = _flat_scaled(y, d)
        per_block = []
        for data in blocks:
            runs = _two_level_runs(a, d, b, n - d, data.ints)
            if not _flat_tensor_strict(runs, data, flat_scale):
                break
            per_block.append((runs, data))
        else:
            transcript = []
            for i, (runs, data) in enumerate(per_block, 1):
                den = y.scaled[1] * flat_scale * data.cden
                transcript += _flat_tensor_transcript(runs, data, flat_scale, den, f"block {i}:")
            return UsefulnessCertificate(
                kind="catalyst",
                target=y,
                d=d,
                witness=kd_witness(y, d),
                catalyst=c,
                transcript=tuple(transcript),
                notes=(f"catalyst splits into {len(blocks)} block(s) at ratio {decomposition.alpha}",),
            )
    return NotUseful("no split index d has y(d) x c' strictly majorized by y x c' for every block c'")


def necessary_segment(y: ProbVector, c: ProbVector, certificate=None) -> Segment:
    """A segment of ``c`` that itself satisfies the uniformity test."""
    cert = certificate if certificate is not None else catalyst_useful(y, c)
    if not cert:
        raise NoCertificate(getattr(cert, "reason", "catalyst is not useful"))
    d = cert.d
    outer = decompose(c, global_uniformity(y))
    z, z_start = outer.blocks[0], outer.starts[0]
    head_spread, tail_spread = y[d - 1] / y[0], y[-1] / y[d]
    inner = decompose(z, max(head_spread, tail_spread))
    pick = 0 if head_spread >= tail_spread else -1
    values = inner.blocks[pick].components
    start = z_start + inner.starts[pick] - 1
    seg = Segment(start, start + len(values) - 1, values)
    if not _eq7_holds(y, values, d):
        raise InternalInconsistency(f"segment {seg.start_index}..{seg.end_index} fails the uniformity test")
    return seg


def power_condition(y: ProbVector, d: int, k: int) -> bool:
    """y_d^k < y_1^(k-1) y_(d+1) and y_(d+1)^k > y_n^(k-1) y_d."""
    y1, yd, yd1, yn = y[0], y[d - 1], y[d], y[-1]
    return yd**k < y1 ** (k - 1) * yd1 and yd1**k > yn ** (k - 1) * yd


def _power_transcript(y, d, k) -> list[Inequality]:
    y1, yd, yd1, yn = y[0], y[d - 1], y[d], y[-1]
    return [
        Inequality(f"y_{d}^{k} < y_1^{k - 1} y_{d + 1}", yd**k, "<", y1 ** (k - 1) * yd1),
        Inequality(f"y_{d + 1}^{k} > y_n^{k - 1} y_{d}", yd1**k, ">", yn ** (k - 1) * yd),
    ]


def k_useful(y: ProbVector, k: int):
    """Whether some ``k``-dimensional catalyst (equivalently ``k`` copies) helps reach ``y``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = y.dim
    if n <= 3:
        return NotUseful(f"n={n} <= 3: there is no split index 1 < d < n-1")
    for d in range(2, n - 1):
        if power_condition(y, d, k):
            catalyst = construct_catalyst(y, d, k)
            transcript = _power_transcript(y, d, k) + _eq7_transcript(y, catalyst.components, d)
            return UsefulnessCertificate(
                kind="k-copies",
                target=y,
                d=d,
                witness=kd_witness(y, d),
                catalyst=catalyst,
                transcript=tuple(transcript),
                k=k,
            )
    return NotUseful(f"for every 1 < d < n-1: y_d^{k} >= y_1^{k - 1} y_(d+1) or y_(d+1)^{k} <= y_n^{k - 1} y_d")


def _log(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def least_power_below(r: Fraction, t: Fraction) -> int:
    """Least ``m >= 1`` with ``r**m < t``, for ``0 <= r < 1`` and ``t > 0``."""
    if not (0 <= r < 1 and t > 0):
        raise ValueError("need 0 <= r < 1 and t > 0")
    if r < t:
        return 1
    m = max(1, int(_log(t) / _log(r)) - 1)
    while r**m >= t:
        m += 1
    while m > 1 and r ** (m - 1) < t:
        m -= 1
    return m


def min_useful_k(y: ProbVector) -> int | None:
    """Least ``k >= 2`` for which :func:`k_useful` succeeds, or ``None`` if none does."""
    n = y.dim
    best = None
    for d in range(2, n - 1):
        y1, yd, yd1, yn = y[0], y[d - 1], y[d], y[-1]
        if not (y1 > yd and yd1 > yn):
            continue
        ratio = yd1 / yd
        m = max(least_power_below(yd / y1, ratio), least_power_below(yn / yd1, ratio))
        if best is None or m + 1 < best:
            best = m + 1
    if best is not None:
        if not k_useful(y, best) or (best > 2 and k_useful(y, best - 1)):
            raise InternalInconsistency(f"closed-form minimum k={best} disagrees with the scan")
    return best


def geometric(alpha, k: int) -> ProbVector:
    """Unnormalized ``(1, alpha, ..., alpha^(k-1))``."""
    alpha = to_fraction(alpha)
    return ProbVector._trusted(tuple(alpha**i for i in range(k)), sum((alpha**i for i in range(k)), ZERO))


def rational_ratio(lower: Fraction, target: Fraction, power: int) -> Fraction:
    """A rational ``a`` with ``lower < a < 1`` and ``a**power < target``.

    Starts from dyadic approximations of the geometric midpoint of
    ``(lower**power, target)`` and falls back to exact bisection.
    """
    if not (lower < 1 and lower**power < target and power >= 1):
        raise IntervalEmpty(f"no a with {lower} < a and a^{power} < {target}")

    def inside(a):
        return lower < a < 1 and a > 0 and a**power < target

    lo_pow = lower**power
    mid_pow = math.sqrt(float(lo_pow) * float(target)) if lo_pow > 0 else float(target) / 2
    if mid_pow > 0:
        guess = mid_pow ** (1.0 / power)
        for bits in range(1, 64):
            a = Fraction(round(guess * 2**bits), 2**bits)
            if inside(a):
                return a
    lo, hi = lower, ONE
    while True:
        mid = (lo + hi) / 2
        if inside(mid):
            return mid
        hi = mid


def construct_catalyst(y: ProbVector, d: int, k: int) -> ProbVector:
    """Normalized geometric catalyst of dimension ``k`` certifying usefulness at ``d``."""
    _check_split(y, d, 2, y.dim - 2)
    if k < 2 or not power_condition(y, d, k):
        raise IntervalEmpty(f"power condition fails at d={d}, k={k}")
    lower, upper = _eq7_parts(y, d)
    alpha = rational_ratio(lower, upper, k - 1)
    c = normalize(geometric(alpha, k))
    if not sufficient_condition(y, c, d):
        raise InternalInconsistency(f"geometric catalyst with ratio {alpha} fails the uniformity test")
    return c


def mlocc_witness_check(y: ProbVector, d: int, k: int, cap: int | None = None) -> bool:
    """Direct test: is ``x^(k)`` strictly majorized by ``y^(k)`` for ``x = y(d)``?"""
    from .vectors import tensor_power

    x = kd_witness(y, d)
    direct = strictly_majorized(tensor_power(x, k, cap), tensor_power(y, k, cap))
    if direct != power_condition(y, d, k):
        raise InternalInconsistency(f"tensor-power test and closed form disagree at d={d}, k={k}")
    return direct


def targets_for_catalyst(z: ProbVector, n: int, d: int) -> ProbVector:
    """A normalized ``n``-dimensional target for which ``z`` is a useful catalyst."""
    if n < 4:
        raise IndexOutOfRange("targets need n >= 4")
    if not 2 <= d <= n - 2:
        raise IndexOutOfRange(f"split index d={d} outside 2..{n - 2}")
    _require_positive(z)
    if z.is_uniform:
        raise UniformCatalyst("a uniform vector is never a useful catalyst")
    lu, gu = local_uniformity(z), global_uniformity(z)
    yd = lu / 2
    yd1 = yd * (gu + 1) / 2
    comps = [ONE] * (d - 1) + [yd] + [yd1] * (n - d - 1) + [yd1 * lu / 2]
    y = normalize(canonicalize(comps))
    if not sufficient_condition(y, z, d):
        raise InternalInconsistency("constructed target fails the uniformity test")
    return y


def _compositions_descending(total: int, parts: int, cap: int | None = None):
    # Non-increasing positive integer tuples summing to ``total``.
    cap = total if cap is None else cap
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(min(cap, total - parts + 1), 0, -1):
        if first * parts < total:
            break
        for rest in _compositions_descending(total - first, parts - 1, first):
            yield (first, *rest)


def grid_catalyst_search(x: ProbVector, y: ProbVector, k: int, resolution: int) -> ProbVector | None:
    """Search positive catalysts with components in ``(1/resolution) Z``.

    A hit is exactly verified.  ``None`` only means the grid has no catalyst;
    it does not prove that none exists.
    """
    if majorizes(x, y):
        return uniform(k)
    for parts in _compositions_descending(resolution, k):
        c = ProbVector._trusted(tuple(Fraction(p, resolution) for p in parts), ONE)
        if majorizes(tensor(x, c), tensor(y, c)):
            return c
    return None


def demonstrate(cert: UsefulnessCertificate, max_halvings: int = 200) -> ProbVector:
    """An explicit ``x`` with ``x`` not majorized by ``y`` but ``x (x) c`` majorized by ``y (x) c``.

    Pushes mass from the smallest to the largest component of the witness,
    halving the amount until the catalysed relation holds.
    """
    if cert.kind not in ("catalyst", "k-copies") or cert.catalyst is None:
        raise NoCertificate("demonstration needs a deterministic certificate with a catalyst")
    y, c, w = cert.target, cert.catalyst, cert.witness
    yc = tensor(y, c)
    eps = w[-1] / 2
    for _ in range(max_halvings):
        x = perturb_extremes(w, eps)
        if majorizes(tensor(x, c), yc):
            if majorizes(x, y):
                raise InternalInconsistency("perturbed witness is still majorized by the target")
            return x
        eps /= 2
    raise InternalInconsistency("no perturbation of the witness stayed catalysable")


def verify_deterministic(cert: UsefulnessCertificate) -> bool:
    y, d = cert.target, cert.d
    if not in_kd(cert.witness, y, d):
        return False
    if cert.kind == "catalyst":
        decomposition = decompose(cert.catalyst, global_uniformity(y))
        return all(
            strictly_majorized(tensor(cert.witness, block), tensor(y, block)) for block in decomposition.blocks
        )
    return (
        power_condition(y, d, cert.k)
        and sufficient_condition(y, cert.catalyst, d)
        and strictly_majorized(tensor(cert.witness, cert.catalyst), tensor(y, cert.catalyst))
    )
