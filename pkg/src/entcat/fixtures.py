"""Named scenarios used by the ``examples`` command and the acceptance tests.

Each builder returns a :class:`Scenario` whose ``checks`` map a short label
to an exact boolean (or value) computed end to end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalysis import catalyst_useful, k_useful, min_useful_k
from .majorization import majorizes, pmax, prefix_gaps, strictly_majorized
from .vectors import ProbVector, canonicalize, normalize, perturb_extremes, tensor, tensor_power, vector


@dataclass
class Scenario:
    name: str
    vectors: dict[str, ProbVector]
    checks: dict[str, object] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)


def jp_pair() -> tuple[ProbVector, ProbVector, ProbVector]:
    """Source, target and two-dimensional catalyst of the classic catalysis example."""
    return vector("0.4", "0.4", "0.1", "0.1"), vector("0.5", "0.25", "0.25", "0"), vector("0.6", "0.4")


def dk_pair(alpha=Fraction(3, 5)) -> tuple[ProbVector, ProbVector, ProbVector]:
    """Flattened source, target and two-level catalyst with weights ``alpha`` and ``1 - alpha``."""
    alpha = Fraction(alpha)
    beta = 1 - alpha
    x = canonicalize([alpha / 2 + beta / 4] * 2 + [beta / 4] * 2)
    y = canonicalize([alpha, beta / 2, beta / 2, 0])
    z = canonicalize([alpha, beta])
    return x, y, z


def yk_target(k: int, alpha=Fraction(1, 2), beta=None) -> ProbVector:
    """Four-level target that needs a catalyst of dimension at least ``k + 1``.

    ``beta`` defaults to ``alpha ** (k + 3)``, safely below the ``alpha ** (k + 2)`` bound.
    """
    alpha = Fraction(alpha)
    beta = alpha ** (k + 3) if beta is None else Fraction(beta)
    return normalize(canonicalize([1, alpha, alpha**k, beta]))


def find_perturbation(x: ProbVector, y: ProbVector, z: ProbVector, eps=Fraction(1, 8), max_halvings: int = 200):
    """Bisect ``eps`` until moving it from x_n to x_1 gives catalysis without plain majorization."""
    eps = min(Fraction(eps), x[-1])
    yz = tensor(y, z)
    for _ in range(max_halvings):
        moved = perturb_extremes(x, eps)
        if majorizes(tensor(moved, z), yz) and not majorizes(moved, y):
            return eps, moved
        eps /= 2
    return None, None


def jp_scenario() -> Scenario:
    x, y, c = jp_pair()
    s = Scenario("jp", {"x": x, "y": y, "c": c})
    s.checks["x majorized by y"] = majorizes(x, y)
    s.checks["x(x)c majorized by y(x)c"] = majorizes(tensor(x, c), tensor(y, c))
    s.checks["x^3 majorized by y^3"] = majorizes(tensor_power(x, 3), tensor_power(y, 3))
    s.checks["pmax"] = pmax(x, y).value
    cert = catalyst_useful(y, c)
    s.checks["catalyst useful"] = bool(cert)
    s.checks["min useful k"] = min_useful_k(y)
    if cert:
        s.details.append(f"certificate at d={cert.d}, witness {cert.witness.as_strings()}")
    return s


def dk_scenario(alpha=Fraction(3, 5)) -> Scenario:
    x, y, z = dk_pair(alpha)
    s = Scenario("dk", {"x": x, "y": y, "z": z})
    gaps = prefix_gaps(tensor(x, z), tensor(y, z))
    s.details.extend(f"e_{l}: {a} < {b}" for l, a, b in gaps)
    s.checks["all prefix inequalities strict"] = all(a < b for _, a, b in gaps)
    s.checks["x(x)z strictly majorized by y(x)z"] = strictly_majorized(tensor(x, z), tensor(y, z))
    eps, moved = find_perturbation(x, y, z)
    s.checks["perturbation eps"] = eps
    if moved is not None:
        s.vectors["x(eps)"] = moved
        s.checks["x(eps) majorized by y"] = majorizes(moved, y)
        s.checks["x(eps)(x)z majorized by y(x)z"] = majorizes(tensor(moved, z), tensor(y, z))
    return s


def yk_scenario(k: int = 3) -> Scenario:
    y = yk_target(k)
    s = Scenario("yk", {"y": y})
    s.checks["k"] = k
    s.checks[f"useful with dimension {k}"] = bool(k_useful(y, k))
    s.checks["min catalyst dimension"] = min_useful_k(y)
    return s


SCENARIOS = {"jp": jp_scenario, "dk": dk_scenario, "yk": yk_scenario}
