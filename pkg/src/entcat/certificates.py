"""Certificates returned by the decision procedures.

A positive answer is a :class:`UsefulnessCertificate` carrying the split
index, a witness vector, an optional catalyst and a transcript of exact
inequalities.  A negative answer is a :class:`NotUseful`, which is falsy so
``if catalyst_useful(y, c):`` reads naturally.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction

from .vectors import ProbVector, Segment

_OPS = {"<": operator.lt, ">": operator.gt, "<=": operator.le, ">=": operator.ge, "==": operator.eq}


@dataclass(frozen=True)
class Inequality:
    label: str
    lhs: Fraction
    op: str
    rhs: Fraction

    def holds(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{self.label}: {self.lhs} {self.op} {self.rhs}"


@dataclass(frozen=True)
class NotUseful:
    """Negative answer.  ``proven`` is False only for heuristic searches."""

    reason: str
    proven: bool = True

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class UsefulnessCertificate:
    """Positive answer of a usefulness decision.

    ``kind`` is one of ``"catalyst"``, ``"k-copies"``, ``"prob-catalyst"`` and
    ``"prob-k-copies"``; it selects what :meth:`verify` re-checks.
    """

    kind: str
    target: ProbVector
    d: int
    witness: ProbVector | None
    catalyst: ProbVector | None = None
    transcript: tuple[Inequality, ...] = ()
    k: int | None = None
    lam: Fraction | None = None
    segment: Segment | None = None
    notes: tuple[str, ...] = field(default=())

    def failed_inequalities(self) -> list[Inequality]:
        return [ineq for ineq in self.transcript if not ineq.holds()]

    def verify(self) -> bool:
        """Re-check the transcript and the witness from scratch."""
        if self.failed_inequalities():
            return False
        if self.kind in ("catalyst", "k-copies"):
            from .catalysis import verify_deterministic

            return verify_deterministic(self)
        from .probabilistic import verify_probabilistic

        return verify_probabilistic(self)
