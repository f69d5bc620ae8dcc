import logging
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from tabkit.laurent import LaurentPoly

MAX_LISTED = 20


class CheckReport(BaseModel):
    """Outcome of one identity check; `mismatches` lists differing monomials."""

    name: str
    passed: bool
    mismatches: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    def to_json(self) -> dict:
        return self.model_dump()


def compare(name: str, lhs: LaurentPoly, rhs: LaurentPoly, **details) -> CheckReport:
    diff = lhs - rhs
    mismatches = [
        f"{LaurentPoly({m: 1}).as_expr()}: {lhs.terms.get(m, 0)} vs {rhs.terms.get(m, 0)}"
        for m in sorted(diff.terms)[:MAX_LISTED]
    ]
    report = CheckReport(
        name=name,
        passed=diff.is_zero(),
        mismatches=mismatches,
        details={"terms": len(lhs.terms), "differing": len(diff.terms), **details},
    )
    if report.passed:
        logging.info(f"{name}: {len(lhs.terms)} monomials agree")
    else:
        logging.error(f"{name}: {len(diff.terms)} monomials differ, first {mismatches[:3]}")
    return report


def merge(name: str, reports: List[CheckReport]) -> CheckReport:
    failed = [r for r in reports if not r.passed]
    return CheckReport(
        name=name,
        passed=not failed,
        mismatches=[f"{r.name}: {m}" for r in failed for m in r.mismatches][:MAX_LISTED],
        details={"cases": len(reports), "failed": [r.name for r in failed]},
    )
