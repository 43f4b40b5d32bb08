"""Brute-force lemma checks.

Each ``check_*`` computes both sides of a stated equivalence independently:
a closed-form condition on vector components against a direct sort-and-compare
of the vectors involved.  The fuzz drivers return an :class:`OracleReport`;
any counterexample points at an implementation bug, since the underlying
statements are theorems.

Every trial draws from its own ``random.Random`` seeded by
``"{seed}:{suite}:{trial}"``, so reports are reproducible trial by trial.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

from .catalysis import (
    decompose,
    in_kd,
    kd_nonempty,
    kd_witness,
    power_condition,
)
from .errors import InfeasibleWitness, InternalInconsistency, PreconditionViolated, UniformTarget, UnknownSuite
from .majorization import (
    majorizes,
    strictly_majorized,
    strictly_super_majorized,
    super_majorized,
)
from .probabilistic import (
    _suffix_scan,
    block_form_condition,
    in_K_lambda,
    kd_lambda_witness,
    prob_catalyst_useful,
    prob_power_condition,
    threshold,
)
from .vectors import (
    ONE,
    ZERO,
    ProbVector,
    canonicalize,
    direct_power,
    direct_sum,
    format_vector,
    global_uniformity,
    local_uniformity,
    normalize,
    perturb_extremes,
    tensor,
    tensor_power,
    to_fraction,
)
from .majorization import scale

DEFAULT_TRIALS = 1000
DEFAULT_MAX_DIM = 5
DEFAULT_MAX_K = 4
LAMBDAS = (Fraction(1, 4), Fraction(1, 2), Fraction(9, 10))


@dataclass
class OracleReport:
    lemma_id: str
    trials: int
    seed: int
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.lemma_id}: {self.trials} trials, {len(self.counterexamples)} counterexamples, "
            f"{self.skipped} skipped, seed {self.seed}, {self.elapsed:.2f}s"
        )


# --- random instances -------------------------------------------------------


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{trial}")


def random_vector(rng: random.Random, n: int, zeros: bool = False, high: int = 9) -> ProbVector:
    """Normalized vector from small integer weights (ties are common on purpose)."""
    while True:
        weights = [rng.randint(0 if zeros else 1, high) for _ in range(n)]
        if any(weights):
            return normalize(canonicalize(weights))


def random_nonuniform(rng: random.Random, n: int, zeros: bool = False, high: int = 9) -> ProbVector:
    if n < 2:
        raise ValueError("a nonuniform vector needs n >= 2")
    while True:
        y = random_vector(rng, n, zeros, high)
        if not y.is_uniform:
            return y


def random_unit_fraction(rng: random.Random, den: int = 16) -> Fraction:
    """A fraction strictly between 0 and 1."""
    return Fraction(rng.randint(1, den - 1), den)


def sample_interior(y: ProbVector, t, rng_seed=0, transfers: int = 0) -> ProbVector:
    """A vector strictly majorized by ``y``: mix with the uniform vector, then apply transfers."""
    t = to_fraction(t)
    if y.is_uniform:
        raise UniformTarget("a uniform target has no strictly majorized vectors")
    if not 0 < t < 1:
        raise ValueError(f"mixing weight must lie in (0, 1), got {t}")
    n = y.dim
    mean = y.total / n
    comps = [(1 - t) * v + t * mean for v in y]
    rng = rng_seed if isinstance(rng_seed, random.Random) else random.Random(rng_seed)
    for _ in range(transfers):
        i, j = sorted(rng.sample(range(n), 2))
        comps.sort(reverse=True)
        gap = comps[i] - comps[j]
        if gap > 0:
            shift = gap / 2 * random_unit_fraction(rng)
            comps[i] -= shift
            comps[j] += shift
    x = canonicalize(comps) if any(comps) else None
    x = ProbVector._trusted(x.components, y.total)
    if not strictly_majorized(x, y):
        raise InternalInconsistency(f"sampled {format_vector(x)} is not strictly inside {format_vector(y)}")
    return x


def _scaled(x: ProbVector, factor) -> ProbVector:
    return scale(x, factor)


def _interior(rng, y, transfers=2):
    return sample_interior(y, random_unit_fraction(rng), rng, transfers)


def _strict_super_sample(rng, y: ProbVector, strict: bool = True) -> ProbVector:
    # y plus a non-negative (positive when strict) vector: tail sums only grow.
    base = _interior(rng, y) if not y.is_uniform and rng.random() < 0.5 else y
    bump = [Fraction(rng.randint(1 if strict else 0, 4), 16 * base.dim) for _ in range(base.dim)]
    return canonicalize(a + b for a, b in zip(base, bump))


def _shifted_pair(rng, y: ProbVector, y2: ProbVector) -> ProbVector:
    """Rescale ``y2`` so that it overlaps, touches, or separates from ``y`` at random."""
    mode = rng.choice(["free", "free", "below", "touch-below", "above", "touch-above"])
    if mode == "free" or y[-1] == 0:
        return _scaled(y2, Fraction(rng.randint(1, 12), 4))
    if mode == "below":
        return _scaled(y2, y[-1] / y2[0] * random_unit_fraction(rng))
    if mode == "touch-below":
        return _scaled(y2, y[-1] / y2[0])
    if mode == "above":
        return _scaled(y2, y[0] / y2[-1] * (1 + rng.randint(1, 8)))
    return _scaled(y2, y[0] / y2[-1])


def _report(suite, trials, seed, body) -> OracleReport:
    report = OracleReport(suite, trials, seed)
    start = time.perf_counter()
    for trial in range(trials):
        rng = trial_rng(seed, suite, trial)
        try:
            outcome = body(rng)
        except (InfeasibleWitness, UniformTarget, PreconditionViolated):
            report.skipped += 1
            continue
        if outcome is None:
            report.skipped += 1
        elif outcome is not True:
            outcome["trial"] = trial
            report.counterexamples.append(outcome)
    report.elapsed = time.perf_counter() - start
    return report


def _fmt(**vectors) -> dict:
    return {k: (format_vector(v) if isinstance(v, ProbVector) else str(v)) for k, v in vectors.items()}


# --- direct sums ---------------------------------------------------------------


def direct_sum_overlap(y: ProbVector, y2: ProbVector) -> bool:
    return y[0] > y2[-1] and y2[0] > y[-1]


def check_direct_sum_lemma(trials: int = DEFAULT_TRIALS, dims: int = 4, seed: int = 0) -> OracleReport:
    """Strict majorization survives a direct sum iff the two targets overlap."""

    def body(rng):
        y = random_nonuniform(rng, rng.randint(2, dims), zeros=rng.random() < 0.3)
        y2 = _shifted_pair(rng, y, random_nonuniform(rng, rng.randint(2, dims)))
        x, x2 = _interior(rng, y), _interior(rng, y2)
        direct = strictly_majorized(direct_sum(x, x2), direct_sum(y, y2))
        closed = direct_sum_overlap(y, y2)
        return True if direct == closed else dict(_fmt(x=x, y=y, x2=x2, y2=y2), direct=direct, closed=closed)

    return _report("direct-sum", trials, seed, body)


def chain_condition(family) -> bool:
    """Overlapping-sequence test over ``(y_i, k_i)`` blocks, taken in order of decreasing maxima."""
    blocks = sorted((y for y, _ in family), key=lambda v: v[0], reverse=True)
    top = max(b[0] for b in blocks)
    bottom = min(b[-1] for b in blocks)
    reach = [b[0] == top for b in blocks]
    for j in range(len(blocks)):
        if not reach[j]:
            continue
        for j2 in range(j + 1, len(blocks)):
            if blocks[j][-1] < blocks[j2][0]:
                reach[j2] = True
    return any(r and b[-1] == bottom for r, b in zip(reach, blocks))


def check_overlap_sequence(family) -> tuple[bool, bool]:
    """``family`` holds ``(y_i, k_i, x_i)`` with ``x_i`` strictly majorized by ``y_i``.

    Returns ``(chain condition, direct strict test of the combined direct sums)``.
    """
    if not family:
        raise PreconditionViolated("empty family")
    xs, ys = [], []
    for y, k, x in family:
        if y.is_uniform or y.dim < 2 or k < 1 or not strictly_majorized(x, y):
            raise PreconditionViolated(f"block {format_vector(y)} needs a strictly majorized partner")
        xs.append(direct_power(x, k))
        ys.append(direct_power(y, k))
    big_x, big_y = xs[0], ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        big_x, big_y = direct_sum(big_x, x), direct_sum(big_y, y)
    return chain_condition([(y, k) for y, k, _ in family]), strictly_majorized(big_x, big_y)


def binomial_family(y: ProbVector, d: int, k: int, x: ProbVector | None = None):
    """Blocks ``head^(k-i) (x) tail^(i)`` with multiplicity ``C(k, i)``, for ``i = 0..k``."""
    if x is None:
        x = kd_witness(y, d)

    def parts(v):
        head = ProbVector._trusted(v[:d], sum(v[:d], ZERO))
        tail = ProbVector._trusted(v[d:], sum(v[d:], ZERO))
        return head, tail

    (yh, yt), (xh, xt) = parts(y), parts(x)
    family = []
    for i in range(k + 1):
        yi = _mixed_power(yh, yt, k - i, i)
        xi = _mixed_power(xh, xt, k - i, i)
        family.append((yi, comb(k, i), xi))
    return family


def _mixed_power(a, b, p, q):
    if p and q:
        return tensor(tensor_power(a, p), tensor_power(b, q))
    return tensor_power(a, p) if p else tensor_power(b, q)


def check_overlap_suite(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """Chain condition vs direct test on random families and on binomial expansions."""

    def body(rng):
        if rng.random() < 0.5:
            n = rng.randint(4, 5)
            y = random_nonuniform(rng, n, zeros=rng.random() < 0.3)
            d = rng.randint(2, n - 2)
            if not kd_nonempty(y, d):
                return None
            k = rng.randint(1, 3)
            x = direct_sum(_interior(rng, _part(y, 0, d)), _interior(rng, _part(y, d, n)))
            family = binomial_family(y, d, k, x)
            chain, direct = check_overlap_sequence(family)
            expected = power_condition(y, d, k)
            ok = chain == direct == expected
            whole = strictly_majorized(tensor_power(x, k), tensor_power(y, k))
            ok = ok and whole == direct
            return True if ok else dict(_fmt(y=y, x=x, d=d, k=k), chain=chain, direct=direct, closed=expected)
        family = []
        for _ in range(rng.randint(1, 4)):
            yi = random_nonuniform(rng, rng.randint(2, 3))
            yi = _scaled(yi, Fraction(rng.randint(1, 16), 4))
            family.append((yi, rng.randint(1, 3), _interior(rng, yi)))
        chain, direct = check_overlap_sequence(family)
        if chain == direct:
            return True
        return {"family": [(format_vector(y), k, format_vector(x)) for y, k, x in family], "chain": chain, "direct": direct}

    return _report("overlap", trials, seed, body)


def _part(y: ProbVector, start: int, stop: int) -> ProbVector:
    vals = y[start:stop]
    return ProbVector._trusted(vals, sum(vals, ZERO))


# --- tensor products -------------------------------------------------------------


def check_lginterior(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """``x (x) c`` stays strictly inside ``y (x) c`` iff l_u(c) > g_u(y)."""

    def body(rng):
        y = random_nonuniform(rng, rng.randint(2, 4), zeros=rng.random() < 0.2)
        x = _interior(rng, y)
        g = global_uniformity(y)
        mode = rng.choice(["random", "boundary", "just-above"])
        if mode == "random" or g == 0:
            c = random_vector(rng, rng.randint(2, 4))
        else:
            ratio = g if mode == "boundary" else (g + 1) / 2
            head = random_vector(rng, rng.randint(1, 2))
            c = canonicalize([*head, head[-1] * ratio])
        direct = strictly_majorized(tensor(x, c), tensor(y, c))
        closed = local_uniformity(c) > g
        return True if direct == closed else dict(_fmt(x=x, y=y, c=c), direct=direct, closed=closed)

    return _report("lginterior", trials, seed, body)


def check_product_interior(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """Majorization (strict and plain) is preserved by direct sums and tensor products."""

    def body(rng):
        y = random_nonuniform(rng, rng.randint(2, 4), zeros=rng.random() < 0.3)
        y2 = random_nonuniform(rng, rng.randint(2, 4), zeros=rng.random() < 0.3)
        x, x2 = _interior(rng, y), _interior(rng, y2)
        strict = strictly_majorized(tensor(x, x2), tensor(y, y2))
        plain = majorizes(tensor(x, x2), tensor(y, y2)) and majorizes(direct_sum(x, x2), direct_sum(y, y2))
        return True if strict and plain else dict(_fmt(x=x, y=y, x2=x2, y2=y2), strict=strict, plain=plain)

    return _report("product-interior", trials, seed, body)


def check_tensor_power_lemma(y: ProbVector, d: int, k: int, x: ProbVector | None = None) -> tuple[bool, bool]:
    """(power condition, direct test that ``x^(k)`` is strictly majorized by ``y^(k)``)."""
    if x is None:
        x = kd_witness(y, d)
    elif not in_kd(x, y, d):
        raise PreconditionViolated("x is not in the split region of y at d")
    return power_condition(y, d, k), strictly_majorized(tensor_power(x, k), tensor_power(y, k))


def check_tensor_power_suite(trials: int = DEFAULT_TRIALS, seed: int = 0, max_dim: int = DEFAULT_MAX_DIM,
                             max_k: int = DEFAULT_MAX_K) -> OracleReport:
    def body(rng):
        n = rng.randint(4, max_dim)
        y = random_nonuniform(rng, n, zeros=rng.random() < 0.3)
        d = rng.randint(2, n - 2)
        if not kd_nonempty(y, d):
            return None
        k = rng.randint(1, max_k)
        x = None
        if rng.random() < 0.5:
            x = direct_sum(_interior(rng, _part(y, 0, d)), _interior(rng, _part(y, d, n)))
        closed, direct = check_tensor_power_lemma(y, d, k, x)
        return True if closed == direct else dict(_fmt(y=y, x=x, d=d, k=k), closed=closed, direct=direct)

    return _report("tensor-power", trials, seed, body)


# --- probabilistic lemmas ---------------------------------------------------------


def check_prob_boundary_lemma(y: ProbVector, d: int, k: int, lam, x: ProbVector | None = None) -> tuple[bool, bool]:
    """(closed form ``y_(d+1)^k > y_n^(k-1) y_d``, direct strict super-majorization of k copies)."""
    lam = threshold(lam)
    if x is None:
        x = kd_lambda_witness(y, d, lam).vector
    elif not in_K_lambda(x, y, d, lam):
        raise PreconditionViolated("x is not on the lambda boundary at d")
    direct = strictly_super_majorized(tensor_power(x, k), scale(tensor_power(y, k), lam**k))
    return prob_power_condition(y, d, k), direct


def _random_k_lambda_member(rng, y: ProbVector, d: int, lam: Fraction) -> ProbVector | None:
    head, tail = _part(y, 0, d), _part(y, d, y.dim)
    x_tail = scale(_interior(rng, tail), lam)
    spare = y.total - lam * y.total
    weights = [Fraction(rng.randint(1, 6)) for _ in range(d)]
    weights.sort(reverse=True)
    z = _interior(rng, head) if not head.is_uniform and rng.random() < 0.5 else head
    total_w = sum(weights)
    x_head = [lam * a + spare * w / total_w for a, w in zip(z, weights)]
    x = canonicalize([*x_head, *x_tail])
    x = ProbVector._trusted(x.components, y.total)
    return x if in_K_lambda(x, y, d, lam) else None


def check_prob_boundary_suite(trials: int = DEFAULT_TRIALS, seed: int = 0, max_dim: int = DEFAULT_MAX_DIM,
                              max_k: int = DEFAULT_MAX_K) -> OracleReport:
    def body(rng):
        n = rng.randint(3, max_dim)
        y = random_nonuniform(rng, n, zeros=rng.random() < 0.3)
        d = rng.randint(1, n - 2)
        if y[d] == y[-1]:
            return None
        k = rng.randint(1, max_k)
        lam = rng.choice([*LAMBDAS, random_unit_fraction(rng, 32)])
        x = _random_k_lambda_member(rng, y, d, lam) if rng.random() < 0.5 else None
        closed, direct = check_prob_boundary_lemma(y, d, k, lam, x)
        return True if closed == direct else dict(_fmt(y=y, x=x, d=d, k=k, lam=lam), closed=closed, direct=direct)

    return _report("prob-boundary", trials, seed, body)


def check_strictsuper_lemma(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """Direct sums and products under strict super-majorization, plus the block corollary."""

    def body(rng):
        clause = rng.choice(["sum", "mixed-sum", "product", "blocks"])
        if clause == "sum":
            y = _scaled(random_vector(rng, rng.randint(1, 4), zeros=True), Fraction(rng.randint(1, 8), 4))
            y2 = _scaled(random_vector(rng, rng.randint(1, 4), zeros=True), Fraction(rng.randint(1, 8), 4))
            x, x2 = _strict_super_sample(rng, y), _strict_super_sample(rng, y2)
            ok = strictly_super_majorized(direct_sum(x, x2), direct_sum(y, y2))
            return True if ok else dict(_fmt(x=x, y=y, x2=x2, y2=y2), clause=clause)
        if clause == "mixed-sum":
            y = random_vector(rng, rng.randint(1, 4), zeros=rng.random() < 0.3)
            y2 = _shifted_pair(rng, y, random_nonuniform(rng, rng.randint(2, 4)))
            x, x2 = _strict_super_sample(rng, y), _interior(rng, y2)
            direct = strictly_super_majorized(direct_sum(x, x2), direct_sum(y, y2))
            closed = y2[0] > y[-1]
            return True if direct == closed else dict(_fmt(x=x, y=y, x2=x2, y2=y2), clause=clause,
                                                      direct=direct, closed=closed)
        if clause == "product":
            y = random_vector(rng, rng.randint(1, 4), zeros=True)
            y2 = random_vector(rng, rng.randint(1, 4), zeros=True)
            x = _strict_super_sample(rng, y)
            x2 = _strict_super_sample(rng, y2, strict=False)
            if x2[-1] == 0:
                return None
            ok = strictly_super_majorized(tensor(x, x2), tensor(y, y2))
            return True if ok else dict(_fmt(x=x, y=y, x2=x2, y2=y2), clause=clause)
        blocks_y, blocks_x = [], []
        for _ in range(rng.randint(1, 3)):
            yi = random_nonuniform(rng, rng.randint(2, 3))
            if blocks_y:
                yi = _scaled(yi, blocks_y[-1][-1] / yi[0] * rng.choice([ONE, random_unit_fraction(rng)]))
            blocks_y.append(yi)
            blocks_x.append(_interior(rng, yi))
        y0 = random_vector(rng, rng.randint(1, 3))
        target = blocks_y[-1][0] / y0[-1] * rng.choice([Fraction(1, 2), ONE, Fraction(2), random_unit_fraction(rng) * 4])
        y0 = _scaled(y0, target)
        x0 = _strict_super_sample(rng, y0)
        big_x, big_y = x0, y0
        for xi, yi in zip(blocks_x, blocks_y):
            big_x, big_y = direct_sum(big_x, xi), direct_sum(big_y, yi)
        direct = strictly_super_majorized(big_x, big_y)
        closed = blocks_y[-1][0] > y0[-1]
        if direct == closed:
            return True
        return dict(_fmt(x0=x0, y0=y0), blocks=[format_vector(b) for b in blocks_y], clause=clause,
                    direct=direct, closed=closed)

    return _report("strict-super", trials, seed, body)


def check_prob_forms(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """Suffix-segment test vs last-block test vs direct witness test, at several thresholds."""

    def body(rng):
        n = rng.randint(3, 5)
        y = random_nonuniform(rng, n, zeros=rng.random() < 0.2)
        c = random_vector(rng, rng.randint(2, 4), high=rng.choice([4, 9, 30]))
        decision = bool(prob_catalyst_useful(y, c))
        for d in range(1, n - 1):
            suffix = _suffix_scan(y, c, d) is not None
            block = block_form_condition(y, c, d)
            if suffix != block:
                return dict(_fmt(y=y, c=c, d=d), suffix=suffix, block=block)
        for lam in LAMBDAS:
            direct = False
            for d in range(1, n - 1):
                if y[d] == y[-1]:
                    continue
                w = kd_lambda_witness(y, d, lam).vector
                if strictly_super_majorized(tensor(w, c), scale(tensor(y, c), lam)):
                    direct = True
                    break
            if direct != decision:
                return dict(_fmt(y=y, c=c, lam=lam), decision=decision, direct=direct)
        return True

    return _report("prob-forms", trials, seed, body)


# --- linearity property -----------------------------------------------------------


def check_LP(trials: int = DEFAULT_TRIALS, seed: int = 0, samples: int = 200) -> OracleReport:
    """Sampled members of a direct sum (or split region times catalyst) are all in or all out."""

    def body(rng):
        if rng.random() < 0.5:
            y = random_nonuniform(rng, rng.randint(2, 3), zeros=rng.random() < 0.3)
            y2 = _shifted_pair(rng, y, random_nonuniform(rng, rng.randint(2, 3)))
            big_y = direct_sum(y, y2)

            def member():
                return direct_sum(_interior(rng, y, 1), _interior(rng, y2, 1))

            def inside(z):
                return strictly_majorized(z, big_y)
        else:
            n = rng.randint(4, 5)
            y = random_nonuniform(rng, n, zeros=rng.random() < 0.3)
            d = rng.randint(2, n - 2)
            if not kd_nonempty(y, d):
                return None
            c = random_vector(rng, rng.randint(2, 3))
            yc = tensor(y, c)
            head, tail = _part(y, 0, d), _part(y, d, n)

            def member():
                return direct_sum(_interior(rng, head, 1), _interior(rng, tail, 1))

            def inside(z):
                return strictly_majorized(tensor(z, c), yc)
        first = inside(member())
        for _ in range(samples):
            z = member()
            if inside(z) != first:
                return dict(_fmt(y=y, z=z), first=first)
        return True

    return _report("lp", trials, seed, body)


def check_decomposition_split(trials: int = DEFAULT_TRIALS, seed: int = 0) -> OracleReport:
    """Catalysis by ``c`` holds iff it holds block by block after splitting at g_u(y)."""

    def body(rng):
        n = rng.randint(3, 5)
        y = random_nonuniform(rng, n, zeros=rng.random() < 0.3)
        c = random_vector(rng, rng.randint(2, 4), high=rng.choice([5, 40]))
        x = random_vector(rng, n) if rng.random() < 0.5 else _interior(rng, y)
        whole = majorizes(tensor(x, c), tensor(y, c))
        blocks = decompose(c, global_uniformity(y)).blocks
        split = all(majorizes(tensor(x, b), tensor(y, b)) for b in blocks)
        return True if whole == split else dict(_fmt(x=x, y=y, c=c), whole=whole, split=split)

    return _report("decomposition", trials, seed, body)


def check_perturbation_interior(y: ProbVector, c: ProbVector, x: ProbVector, eps, max_halvings: int = 64) -> bool:
    """Whether moving at most ``eps`` from the smallest to the largest component of ``x`` keeps catalysis."""
    eps = to_fraction(eps)
    yc = tensor(y, c)
    if eps == 0:
        return majorizes(tensor(x, c), yc)
    eps = min(eps, x[-1])
    if eps <= 0:
        return False
    for _ in range(max_halvings):
        if majorizes(tensor(perturb_extremes(x, eps), c), yc):
            return True
        eps /= 2
    return False


SUITES = {
    "direct-sum": lambda trials, seed: check_direct_sum_lemma(trials, 4, seed),
    "overlap": check_overlap_suite,
    "lginterior": check_lginterior,
    "product-interior": check_product_interior,
    "tensor-power": check_tensor_power_suite,
    "prob-boundary": check_prob_boundary_suite,
    "strict-super": check_strictsuper_lemma,
    "prob-forms": check_prob_forms,
    "lp": check_LP,
    "decomposition": check_decomposition_split,
}


def run_suite(name: str, trials: int = DEFAULT_TRIALS, seed: int = 0) -> list[OracleReport]:
    """Run one named suite, or every suite for ``"all"``."""
    if name == "all":
        return [fn(trials, seed) for fn in SUITES.values()]
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return [SUITES[name](trials, seed)]
