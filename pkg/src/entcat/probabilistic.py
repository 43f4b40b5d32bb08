"""Probabilistic conversions with success threshold ``0 < lambda < 1``.

Here split indices run over ``1..n-2`` (one wider than the deterministic
case) and the decisions do not depend on the threshold; it only enters the
witnesses built for demonstrations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalysis import decompose, geometric, rational_ratio
from .certificates import Inequality, NotUseful, UsefulnessCertificate
from .errors import IndexOutOfRange, InfeasibleWitness, IntervalEmpty, InternalInconsistency, InvalidThreshold, NoCertificate, ZeroComponent
from .majorization import scale, strictly_super_majorized, super_majorized
from .vectors import (
    ONE,
    ProbVector,
    Segment,
    bottom_sum,
    global_uniformity,
    local_uniformity,
    normalize,
    perturb_extremes,
    size_cap,
    tensor,
    tensor_power,
    to_fraction,
)


@dataclass(frozen=True)
class ProbThreshold:
    value: Fraction

    def __post_init__(self):
        value = to_fraction(self.value)
        if value == 1:
            raise InvalidThreshold(
                "lambda = 1 is the deterministic case; use entcat.catalysis instead"
            )
        if not 0 < value < 1:
            raise InvalidThreshold(f"threshold must lie strictly between 0 and 1, got {value}")
        object.__setattr__(self, "value", value)


def threshold(lam) -> Fraction:
    return lam.value if isinstance(lam, ProbThreshold) else ProbThreshold(lam).value


@dataclass(frozen=True)
class LambdaWitness:
    d: int
    vector: ProbVector
    equality_index: int


def in_S_lambda(x: ProbVector, y: ProbVector, lam) -> bool:
    """Can ``x`` reach ``y`` with probability at least ``lam``?"""
    return super_majorized(x, scale(y, threshold(lam)))


def in_T_lambda(x: ProbVector, y: ProbVector, c: ProbVector, lam) -> bool:
    return super_majorized(tensor(x, c), scale(tensor(y, c), threshold(lam)))


def in_M_lambda_k(x: ProbVector, y: ProbVector, k: int, lam, cap: int | None = None) -> bool:
    lam = threshold(lam)
    return super_majorized(tensor_power(x, k, cap), scale(tensor_power(y, k, cap), lam**k))


def in_K_lambda(x: ProbVector, y: ProbVector, d: int, lam) -> bool:
    """Tail sums of ``x`` dominate ``lam * y``, tightly exactly at ``l = n - d``."""
    lam = threshold(lam)
    n = y.dim
    if x.dim != n:
        return False
    for l in range(1, n + 1):
        have, need = bottom_sum(x, l), lam * bottom_sum(y, l)
        if have < need or (have == need) != (l == n - d):
            return False
    return True


def kd_lambda_witness(y: ProbVector, d: int, lam) -> LambdaWitness:
    """Uniform tail holding ``lam * E_(n-d)(y)``; the head is ``lam * y'`` lifted evenly."""
    lam = threshold(lam)
    n = y.dim
    if not 1 <= d <= n - 2:
        raise IndexOutOfRange(f"split index d={d} outside 1..{n - 2}")
    if y[d] == y[-1]:
        raise InfeasibleWitness(
            f"tail y[{d + 1}..{n}] is uniform: no strict inequality possible at l=1", index=1
        )
    tail_value = lam * bottom_sum(y, n - d) / (n - d)
    lift = (y.total - lam * y.total) / d
    comps = tuple(lam * v + lift for v in y[:d]) + (tail_value,) * (n - d)
    x = ProbVector._trusted(comps, y.total)
    if not in_K_lambda(x, y, d, lam):
        raise InfeasibleWitness(f"constructed vector misses the boundary at l={n - d}", index=n - d)
    return LambdaWitness(d, x, n - d)


def _suffix_scan(y: ProbVector, c: ProbVector, d: int):
    # First 1-based i whose suffix c[i:] passes, scanning i = 1..k-1.
    if y[d] == 0:
        return None
    lower, upper = y[-1] / y[d], y[d] / y[d - 1]
    comps = c.components
    k = len(comps)
    ratios = [comps[j + 1] / comps[j] for j in range(k - 1)]
    suffix_min = [None] * (k - 1)
    running = None
    for j in range(k - 2, -1, -1):
        running = ratios[j] if running is None else min(running, ratios[j])
        suffix_min[j] = running
    for i in range(1, k):
        if suffix_min[i - 1] > lower and comps[-1] / comps[i - 1] < upper:
            return i
    return None


def block_form_condition(y: ProbVector, c: ProbVector, d: int) -> bool:
    """Same test phrased through the last block of ``c`` split at the tail's spread."""
    if y[d] == 0:
        return False
    tail_spread = y[-1] / y[d]
    if tail_spread == 1:
        return False
    last = decompose(c, tail_spread).blocks[-1]
    return last.dim >= 2 and global_uniformity(last) < y[d] / y[d - 1]


def prob_catalyst_useful(y: ProbVector, c: ProbVector, demo_lambda=None):
    """Whether ``c`` raises the set reachable with probability at least lambda (any lambda)."""
    if c.dim == 0 or c[-1] <= 0:
        raise ZeroComponent("catalyst must have positive components")
    n, k = y.dim, c.dim
    for d in range(1, n - 1):
        i = _suffix_scan(y, c, d)
        if i is None:
            continue
        values = c.components[i - 1:]
        seg = Segment(i, k, values)
        sub = ProbVector._trusted(values, sum(values, Fraction(0)))
        transcript = (
            Inequality(f"l_u(c[{i}..{k}]) > y_n/y_{d + 1}", local_uniformity(sub), ">", y[-1] / y[d]),
            Inequality(f"g_u(c[{i}..{k}]) < y_{d + 1}/y_{d}", global_uniformity(sub), "<", y[d] / y[d - 1]),
        )
        witness = lam = None
        if demo_lambda is not None:
            lam = threshold(demo_lambda)
            witness = kd_lambda_witness(y, d, lam).vector
        return UsefulnessCertificate(
            kind="prob-catalyst", target=y, d=d, witness=witness, catalyst=c,
            transcript=transcript, lam=lam, segment=seg,
        )
    return NotUseful("no 0 < d < n-1 and suffix c' of c with l_u(c') > y_n/y_(d+1) and g_u(c') < y_(d+1)/y_d")


def prob_power_condition(y: ProbVector, d: int, k: int) -> bool:
    return y[d] ** k > y[-1] ** (k - 1) * y[d - 1]


def construct_prob_catalyst(y: ProbVector, d: int, k: int) -> ProbVector:
    """Normalized geometric catalyst of dimension ``k`` that passes the suffix test at ``d``."""
    if not 1 <= d <= y.dim - 2:
        raise IndexOutOfRange(f"split index d={d} outside 1..{y.dim - 2}")
    if k < 2 or not prob_power_condition(y, d, k):
        raise IntervalEmpty(f"y_(d+1)^k > y_n^(k-1) y_d fails at d={d}, k={k}")
    alpha = rational_ratio(y[-1] / y[d], y[d] / y[d - 1], k - 1)
    c = normalize(geometric(alpha, k))
    if _suffix_scan(y, c, d) != 1:
        raise InternalInconsistency(f"geometric catalyst with ratio {alpha} fails the suffix test")
    return c


def prob_k_useful(y: ProbVector, k: int, demo_lambda=Fraction(1, 2)):
    """Whether ``k``-dimensional catalysts (equivalently ``k`` copies) help at some threshold."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lam = threshold(demo_lambda)
    n = y.dim
    for d in range(1, n - 1):
        if not prob_power_condition(y, d, k):
            continue
        catalyst = construct_prob_catalyst(y, d, k)
        transcript = (
            Inequality(f"y_{d + 1}^{k} > y_n^{k - 1} y_{d}", y[d] ** k, ">", y[-1] ** (k - 1) * y[d - 1]),
            Inequality(f"l_u(c) > y_n/y_{d + 1}", local_uniformity(catalyst), ">", y[-1] / y[d]),
            Inequality(f"g_u(c) < y_{d + 1}/y_{d}", global_uniformity(catalyst), "<", y[d] / y[d - 1]),
        )
        return UsefulnessCertificate(
            kind="prob-k-copies", target=y, d=d, witness=kd_lambda_witness(y, d, lam).vector,
            catalyst=catalyst, transcript=transcript, k=k, lam=lam,
        )
    return NotUseful(f"y_(d+1)^{k} <= y_n^{k - 1} y_d for every 0 < d < n-1")


def prob_inf_useful(y: ProbVector) -> bool:
    """Some finite catalyst or number of copies helps iff ``y_2 > y_n``."""
    return y.dim >= 3 and y[1] > y[-1]


def prob_min_useful_k(y: ProbVector, limit: int = 10_000) -> int | None:
    """Least ``k`` for which :func:`prob_k_useful` succeeds (linear scan)."""
    if not prob_inf_useful(y):
        return None
    for k in range(2, limit + 1):
        if any(prob_power_condition(y, d, k) for d in range(1, y.dim - 1)):
            return k
    raise InternalInconsistency(f"no useful k up to {limit} although y_2 > y_n")


def demonstrate_lambda(y: ProbVector, c: ProbVector, lam, d: int, max_halvings: int = 200) -> ProbVector:
    """Explicit ``x`` outside the lambda-reachable set of ``y`` that ``c`` brings inside."""
    lam = threshold(lam)
    w = kd_lambda_witness(y, d, lam).vector
    eps = w[-1] / 2
    for _ in range(max_halvings):
        x = perturb_extremes(w, eps)
        if in_T_lambda(x, y, c, lam):
            if in_S_lambda(x, y, lam):
                raise InternalInconsistency("perturbed witness still reaches the target unaided")
            return x
        eps /= 2
    raise NoCertificate(f"catalyst does not lift the lambda-witness at d={d}")


def demonstrate_copies(y: ProbVector, k: int, lam, d: int, max_halvings: int = 200) -> ProbVector:
    """Explicit ``x`` outside the lambda-reachable set whose ``k`` copies reach ``y^(k)``."""
    lam = threshold(lam)
    w = kd_lambda_witness(y, d, lam).vector
    eps = w[-1] / 2
    for _ in range(max_halvings):
        x = perturb_extremes(w, eps)
        if in_M_lambda_k(x, y, k, lam):
            if in_S_lambda(x, y, lam):
                raise InternalInconsistency("perturbed witness still reaches the target unaided")
            return x
        eps /= 2
    raise NoCertificate(f"{k} copies do not lift the lambda-witness at d={d}")


def verify_probabilistic(cert: UsefulnessCertificate) -> bool:
    y, d, c = cert.target, cert.d, cert.catalyst
    if cert.kind == "prob-catalyst":
        if _suffix_scan(y, c, d) is None:
            return False
    elif cert.kind == "prob-k-copies":
        if not prob_power_condition(y, d, cert.k):
            return False
        if _suffix_scan(y, c, d) != 1:
            return False
    else:
        return False
    if cert.witness is None:
        return True
    lam = cert.lam
    if not in_K_lambda(cert.witness, y, d, lam):
        return False
    if not strictly_super_majorized(tensor(cert.witness, c), scale(tensor(y, c), lam)):
        return False
    if cert.kind == "prob-k-copies" and y.dim ** cert.k <= min(size_cap(), 50_000):
        return strictly_super_majorized(
            tensor_power(cert.witness, cert.k), scale(tensor_power(y, cert.k), lam**cert.k)
        )
    return True
