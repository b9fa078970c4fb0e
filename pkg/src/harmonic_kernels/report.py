"""Verification reports: one JSON-lines object per (identity, parameters)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .grammar import format_polynomial
from .poly import SparsePolynomial, canonical_key
from .scalars import format_scalar

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    status: str
    witness: dict | None = None
    elapsed_ms: int = 0
    seed: int | None = None
    resolution_notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("fail reports must carry a witness")
        if self.status == SKIPPED and not any(
                note.startswith("cap:") for note in self.resolution_notes):
            raise ValueError("skipped reports must record the cap name")

    def to_json_line(self) -> str:
        obj = {
            "identity_id": self.identity_id,
            "params": self.params,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
            "resolution_notes": list(self.resolution_notes),
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.seed is not None:
            obj["seed"] = self.seed
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @property
    def ok(self) -> bool:
        return self.status == PASS


def first_difference(lhs: SparsePolynomial, rhs: SparsePolynomial) -> dict | None:
    """Witness of inequality: the first differing monomial in canonical order
    together with both coefficients, or None when equal."""
    diff = lhs - rhs
    if diff.is_zero:
        return None
    mono = min(diff.terms, key=canonical_key)
    system = lhs.system
    text = "*".join(system.display(s) if e == 1 else f"{system.display(s)}^{e}"
                    for s, e in mono) or "1"
    lc = lhs.terms.get(mono)
    rc = rhs.terms.get(mono)
    return {
        "monomial": text,
        "lhs": format_scalar(lc) if lc is not None else "0",
        "rhs": format_scalar(rc) if rc is not None else "0",
    }


def report_for(identity_id: str, params: dict, lhs: SparsePolynomial,
               rhs: SparsePolynomial, seed: int | None = None,
               notes: list | None = None) -> VerificationReport:
    """Exact-equality report with a witness on failure."""
    wit = first_difference(lhs, rhs)
    return VerificationReport(
        identity_id=identity_id,
        params=params,
        status=PASS if wit is None else FAIL,
        witness=wit,
        seed=seed,
        resolution_notes=list(notes or []),
    )


def format_report_poly(p: SparsePolynomial) -> str:
    return format_polynomial(p)
