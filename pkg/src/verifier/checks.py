"""Pass/fail ledger of a verification run."""

import logging
import math
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


def finite_or_none(value: Optional[float]) -> Optional[float]:
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def clean(obj: Any) -> Any:
    """Recursively replace non-finite floats with None so the payload is strict JSON."""
    if isinstance(obj, float):
        return finite_or_none(obj)
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if hasattr(obj, "item") and callable(obj.item):
        return clean(obj.item())
    return obj


class CheckResult(BaseModel):
    """Outcome of one named check."""

    name: str
    passed: bool
    worst_residual: Optional[float] = Field(default=None, description="Worst observed value")
    tolerance: Optional[float] = Field(default=None, description="Threshold it is compared with")
    samples: int = Field(default=1, ge=0, description="Number of evaluated cases")
    witness: Optional[Dict[str, Any]] = Field(default=None, description="Worst case, serialized")
    message: str = ""

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = ""
        if self.worst_residual is not None:
            detail = f" worst={self.worst_residual:.3e}"
        if self.tolerance is not None:
            detail += f" tol={self.tolerance:.1e}"
        return f"[{status}] {self.name}{detail} n={self.samples} {self.message}".rstrip()


class Finding(BaseModel):
    """An observation that is reported but neither passes nor fails."""

    name: str
    value: Any
    note: str = ""


class CheckLedger:
    """
    Collects the checks and findings of a run.

    Each check name may be recorded once.  A check fails when its worst
    residual crosses the tolerance, or when the residual is not finite.
    """

    def __init__(self) -> None:
        self.results: List[CheckResult] = []
        self.findings: List[Finding] = []

    def _record(self, result: CheckResult) -> CheckResult:
        if any(r.name == result.name for r in self.results):
            raise ValueError(f"Check {result.name} already recorded")
        self.results.append(result)
        if result.passed:
            logger.info(result.summary_line())
        else:
            logger.warning(result.summary_line())
        return result

    def check_at_most(
        self,
        name: str,
        worst: float,
        tolerance: float,
        samples: int = 1,
        witness: Optional[Dict[str, Any]] = None,
        message: str = "",
    ) -> CheckResult:
        """Pass when worst <= tolerance."""
        passed = math.isfinite(worst) and worst <= tolerance
        return self._record(
            CheckResult(
                name=name,
                passed=passed,
                worst_residual=finite_or_none(worst),
                tolerance=tolerance,
                samples=samples,
                witness=clean(witness) if witness is not None else None,
                message=message,
            )
        )

    def check_at_least(
        self,
        name: str,
        worst: float,
        threshold: float,
        samples: int = 1,
        witness: Optional[Dict[str, Any]] = None,
        message: str = "",
    ) -> CheckResult:
        """Pass when worst >= threshold."""
        passed = math.isfinite(worst) and worst >= threshold
        return self._record(
            CheckResult(
                name=name,
                passed=passed,
                worst_residual=finite_or_none(worst),
                tolerance=threshold,
                samples=samples,
                witness=clean(witness) if witness is not None else None,
                message=message,
            )
        )

    def check_true(
        self,
        name: str,
        passed: bool,
        samples: int = 1,
        witness: Optional[Dict[str, Any]] = None,
        message: str = "",
    ) -> CheckResult:
        return self._record(
            CheckResult(
                name=name,
                passed=bool(passed),
                samples=samples,
                witness=clean(witness) if witness is not None else None,
                message=message,
            )
        )

    def add_finding(self, name: str, value: Any, note: str = "") -> Finding:
        finding = Finding(name=name, value=clean(value), note=note)
        self.findings.append(finding)
        logger.info(f"Finding {name}: {note}")
        return finding

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def get_failed(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> Dict[str, int]:
        failed = len(self.get_failed())
        return {"total": len(self.results), "passed": len(self.results) - failed, "failed": failed}
