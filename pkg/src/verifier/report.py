"""Machine-readable verification reports."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel, Field

from src import __version__
from src.utils.rng import GENERATOR_NAME
from src.verifier.checks import CheckLedger, CheckResult, Finding, clean

logger = logging.getLogger(__name__)

# Fields that differ between otherwise identical runs
TIMING_FIELDS = ("wall_time",)


class VerificationReport(BaseModel):
    """Header, checks and findings of one CLI run."""

    tool_version: str = Field(default=__version__, description="curvgauge version")
    command: str = Field(description="Subcommand that produced the report")
    config: Dict[str, Any] = Field(default_factory=dict, description="Effective parameters")
    generator: str = Field(default=GENERATOR_NAME, description="Random generator and seeding scheme")
    checks: List[CheckResult] = Field(default_factory=list)
    findings: List[Finding] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)
    wall_time: float = Field(default=0.0, ge=0, description="Seconds spent")
    rows: List[Dict[str, Any]] = Field(default_factory=list, exclude=True)

    @classmethod
    def from_ledger(
        cls,
        command: str,
        config: Dict[str, Any],
        ledger: CheckLedger,
        wall_time: float,
        rows: Optional[List[Dict[str, Any]]] = None,
    ) -> "VerificationReport":
        return cls(
            command=command,
            config=clean(config),
            checks=list(ledger.results),
            findings=list(ledger.findings),
            summary=ledger.summary(),
            wall_time=wall_time,
            rows=rows or [],
        )

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json(self) -> str:
        return json.dumps(clean(self.model_dump(mode="json")), indent=2, sort_keys=True, allow_nan=False)

    def checks_frame(self) -> pd.DataFrame:
        columns = ["name", "passed", "worst_residual", "tolerance", "samples", "message"]
        return pd.DataFrame([c.model_dump(include=set(columns)) for c in self.checks], columns=columns)

    def to_csv(self) -> str:
        """Per-sample rows when the run kept them, otherwise one row per check."""
        frame = pd.DataFrame(self.rows) if self.rows else self.checks_frame()
        return frame.to_csv(index=False)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"Unknown report format {fmt!r}")


def write_report(report: VerificationReport, fmt: str, out: Optional[Union[str, Path]] = None) -> str:
    """
    Render the report and write it to ``out`` when given.

    Returns:
        The rendered text

    Raises:
        OSError: the output file cannot be written
    """
    text = report.render(fmt)
    if out is not None:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info(f"Wrote {fmt} report to {out}")
    return text


def load_report(path: Union[str, Path]) -> VerificationReport:
    """
    Read a JSON report written by ``write_report``.

    Raises:
        OSError: the file cannot be read
        pydantic.ValidationError: the file is not a verification report
    """
    return VerificationReport.model_validate_json(Path(path).read_text(encoding="utf-8"))
