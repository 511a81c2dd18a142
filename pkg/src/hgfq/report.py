"""Verification records and their JSON/CSV serialization.

One record captures a single identity instance: the two evaluated sides,
their difference, the effective tolerance, named hypothesis flags, and the
resulting status.  A record whose hypotheses are not all met is a skip,
never a failure.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

REPORT_FIELDS = (
    "theorem_id",
    "p",
    "e",
    "q",
    "l",
    "lambda",
    "char_index",
    "sqrt_branch",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_diff",
    "tolerance",
    "hypotheses",
    "status",
)


@dataclass
class VerificationReport:
    theorem_id: str
    p: int
    e: int
    q: int
    l: int | None
    lam: Fraction | None
    char_index: int | None
    sqrt_branch: str | None
    lhs: complex
    rhs: complex
    abs_diff: float
    tolerance: float
    hypotheses: dict[str, bool]
    status: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    @property
    def skipped(self) -> bool:
        return self.status == "skip"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "l": self.l,
            "lambda": None if self.lam is None else str(self.lam),
            "char_index": self.char_index,
            "sqrt_branch": self.sqrt_branch,
            "lhs_re": self.lhs.real,
            "lhs_im": self.lhs.imag,
            "rhs_re": self.rhs.real,
            "rhs_im": self.rhs.imag,
            "abs_diff": self.abs_diff,
            "tolerance": self.tolerance,
            "hypotheses": dict(self.hypotheses),
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_report(
    *,
    theorem_id: str,
    p: int,
    e: int,
    q: int,
    l: int | None = None,
    lam: Fraction | None = None,
    char_index: int | None = None,
    sqrt_branch: str | None = None,
    lhs: complex = 0j,
    rhs: complex = 0j,
    tolerance: float = 1e-6,
    hypotheses: dict[str, bool],
    exact_ok: bool = True,
) -> VerificationReport:
    """Assemble a record, deciding status from hypotheses and the scaled
    tolerance |lhs - rhs| <= tolerance * max(1, |lhs|, |rhs|)."""
    lhs = complex(lhs)
    rhs = complex(rhs)
    diff = abs(lhs - rhs)
    tol_eff = tolerance * max(1.0, abs(lhs), abs(rhs))
    if not all(hypotheses.values()):
        status = "skip"
    elif diff <= tol_eff and exact_ok:
        status = "pass"
    else:
        status = "fail"
    return VerificationReport(
        theorem_id=theorem_id,
        p=p,
        e=e,
        q=q,
        l=l,
        lam=lam,
        char_index=char_index,
        sqrt_branch=sqrt_branch,
        lhs=lhs,
        rhs=rhs,
        abs_diff=diff,
        tolerance=tol_eff,
        hypotheses=hypotheses,
        status=status,
    )


def report_sort_key(r: VerificationReport):
    return (
        r.theorem_id,
        r.q,
        r.l if r.l is not None else 0,
        r.lam if r.lam is not None else Fraction(0),
        r.char_index if r.char_index is not None else -1,
        r.sqrt_branch or "",
    )


def flatten_hypotheses(hyps: dict[str, bool]) -> str:
    return ";".join(f"{k}={'true' if v else 'false'}" for k, v in hyps.items())


def csv_header() -> str:
    return ",".join(REPORT_FIELDS)


def report_to_csv_row(r: VerificationReport) -> str:
    d = r.to_dict()
    d["hypotheses"] = flatten_hypotheses(r.hypotheses)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="")
    writer.writerow(
        ["" if d[k] is None else (repr(d[k]) if isinstance(d[k], float) else d[k]) for k in REPORT_FIELDS]
    )
    return buf.getvalue()


def summarize(reports) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skip": 0}
    for r in reports:
        out[r.status] += 1
    return out
