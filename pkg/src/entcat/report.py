"""Structured command results with lossless JSON round trips.

Every rational is written as a ``"p/q"`` string (integers as ``"p"``), so a
report read back with :meth:`Report.from_json` compares equal to the original.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .certificates import Inequality, UsefulnessCertificate
from .majorization import PmaxResult
from .vectors import ProbVector, Segment

DECISIONS = ("useful", "not_useful", "true", "false", "value", "pass", "fail")


def fraction_to_str(q: Fraction) -> str:
    return str(q)


def vector_to_list(x: ProbVector) -> list[str]:
    return x.as_strings()


def vector_from_list(items) -> ProbVector:
    return ProbVector(tuple(Fraction(s) for s in items))


def _opt(fn, value):
    return None if value is None else fn(value)


def certificate_to_dict(cert: UsefulnessCertificate) -> dict:
    return {
        "kind": cert.kind,
        "target": vector_to_list(cert.target),
        "d": cert.d,
        "witness": _opt(vector_to_list, cert.witness),
        "catalyst": _opt(vector_to_list, cert.catalyst),
        "transcript": [
            {"label": i.label, "lhs": str(i.lhs), "op": i.op, "rhs": str(i.rhs)} for i in cert.transcript
        ],
        "k": cert.k,
        "lam": _opt(str, cert.lam),
        "segment": None if cert.segment is None else {
            "start": cert.segment.start_index,
            "end": cert.segment.end_index,
            "values": [str(v) for v in cert.segment.values],
        },
        "notes": list(cert.notes),
    }


def certificate_from_dict(data: dict) -> UsefulnessCertificate:
    seg = data.get("segment")
    return UsefulnessCertificate(
        kind=data["kind"],
        target=vector_from_list(data["target"]),
        d=data["d"],
        witness=_opt(vector_from_list, data.get("witness")),
        catalyst=_opt(vector_from_list, data.get("catalyst")),
        transcript=tuple(
            Inequality(i["label"], Fraction(i["lhs"]), i["op"], Fraction(i["rhs"])) for i in data.get("transcript", ())
        ),
        k=data.get("k"),
        lam=_opt(Fraction, data.get("lam")),
        segment=None if seg is None else Segment(seg["start"], seg["end"], tuple(Fraction(v) for v in seg["values"])),
        notes=tuple(data.get("notes", ())),
    )


def pmax_to_dict(p: PmaxResult) -> dict:
    return {"value": str(p.value), "argmin_l": p.argmin_l, "skipped_indices": sorted(p.skipped_indices)}


def pmax_from_dict(data: dict) -> PmaxResult:
    return PmaxResult(Fraction(data["value"]), data["argmin_l"], frozenset(data["skipped_indices"]))


@dataclass
class Report:
    command: str
    inputs: dict[str, ProbVector] = field(default_factory=dict)
    decision: str = "value"
    certificate: UsefulnessCertificate | None = None
    pmax: PmaxResult | None = None
    timings: dict[str, float] = field(default_factory=dict)
    values: dict[str, object] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.decision not in DECISIONS:
            raise ValueError(f"unknown decision {self.decision!r}")

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": {k: vector_to_list(v) for k, v in self.inputs.items()},
            "decision": self.decision,
            "certificate": _opt(certificate_to_dict, self.certificate),
            "pmax": _opt(pmax_to_dict, self.pmax),
            "timings": dict(self.timings),
            "values": {k: _encode(v) for k, v in self.values.items()},
            "messages": list(self.messages),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            command=data["command"],
            inputs={k: vector_from_list(v) for k, v in data.get("inputs", {}).items()},
            decision=data.get("decision", "value"),
            certificate=_opt(certificate_from_dict, data.get("certificate")),
            pmax=_opt(pmax_from_dict, data.get("pmax")),
            timings=dict(data.get("timings", {})),
            values={k: _decode(v) for k, v in data.get("values", {}).items()},
            messages=list(data.get("messages", [])),
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


# Values keep their type through JSON with a one-key tag for rationals and vectors.
def _encode(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str, float)):
        return value
    if isinstance(value, Fraction):
        return {"rational": str(value)}
    if isinstance(value, ProbVector):
        return {"vector": vector_to_list(value)}
    if isinstance(value, dict):
        return {"map": {k: _encode(v) for k, v in value.items()}}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _decode(value):
    if isinstance(value, dict):
        if "rational" in value:
            return Fraction(value["rational"])
        if "vector" in value:
            return vector_from_list(value["vector"])
        return {k: _decode(v) for k, v in value["map"].items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value
