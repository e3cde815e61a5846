#VerificationReport.py
from __future__ import annotations

import json
import math
import sys
import time
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

import jsonschema
from pydantic import BaseModel, Field, field_validator, model_validator

SCHEMA_VERSION = "v1"
SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schemas" / f"verification_report.{SCHEMA_VERSION}.json"


class ReportSchemaError(ValueError):
    """Raised when a serialized report does not match the versioned report schema."""
    pass


@lru_cache(maxsize=1)
def report_schema() -> dict:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_report_payload(payload: dict) -> None:
    try:
        jsonschema.validate(instance=payload, schema=report_schema())
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        name = payload.get("check_name", "?")
        raise ReportSchemaError(f"report {name} fails schema {SCHEMA_VERSION} at {where}: {e.message}") from e


def _finite_or_none(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else None


class ReportDetail(BaseModel):
    """One compared quantity: margin is the signed slack, negative when violated."""

    input: str
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    margin: float

    @field_validator("lhs", "rhs", mode="before")
    @classmethod
    def _sanitize_side(cls, v):
        return _finite_or_none(v)

    @field_validator("margin", mode="before")
    @classmethod
    def _sanitize_margin(cls, v):
        v = float(v)
        if math.isnan(v) or v == -math.inf:
            return -sys.float_info.max
        if v == math.inf:
            return sys.float_info.max
        return v


class VerificationReport(BaseModel):
    check_name: str
    alpha: Optional[float] = None
    passed: bool
    tolerance: float = Field(ge=0.0)
    measured_constants: Dict[str, Optional[float]] = Field(default_factory=dict)
    details: List[ReportDetail] = Field(default_factory=list)
    runtime_seconds: float = 0.0
    config_digest: str = ""
    seed: int = 0
    metadata: Dict[str, str] = Field(default_factory=dict)

    @field_validator("measured_constants", mode="before")
    @classmethod
    def _sanitize_constants(cls, v):
        return {str(k): _finite_or_none(val) for k, val in dict(v).items()}

    @model_validator(mode="after")
    def _check_passed(self):
        expected = all(d.margin >= -self.tolerance for d in self.details)
        if self.passed != expected:
            raise ValueError(f"passed={self.passed} disagrees with detail margins (expected {expected})")
        return self

    def failures(self) -> List[ReportDetail]:
        return [d for d in self.details if d.margin < -self.tolerance]

    def body(self) -> dict:
        """The report without its wall-clock field; identical across reruns."""
        return self.model_dump(mode="json", exclude={"runtime_seconds"})

    def body_json(self) -> str:
        return json.dumps(self.body(), sort_keys=True, separators=(",", ":"))

    def validated_payload(self) -> dict:
        """The JSON document of this report, checked against the versioned schema."""
        payload = self.model_dump(mode="json")
        validate_report_payload(payload)
        return payload

    def file_stem(self) -> str:
        if self.alpha is None:
            return self.check_name
        return f"{self.check_name}_alpha{self.alpha:g}"


class ReportBuilder:
    """Collects details and constants for one check and times it."""

    def __init__(self, check_name: str, alpha: Optional[float], tolerance: float, seed: int = 0, config_digest: str = ""):
        self.check_name = check_name
        self.alpha = alpha
        self.tolerance = tolerance
        self.seed = seed
        self.config_digest = config_digest
        self.details: List[ReportDetail] = []
        self.constants: Dict[str, Optional[float]] = {}
        self.metadata: Dict[str, str] = {}
        self._start = time.perf_counter()

    def add(self, input: str, lhs, rhs, margin: float) -> ReportDetail:
        detail = ReportDetail(input=input, lhs=lhs, rhs=rhs, margin=margin)
        self.details.append(detail)
        return detail

    def add_bound(self, input: str, lhs, rhs, slack: float = 0.0) -> ReportDetail:
        """Detail for lhs <= rhs + slack."""
        return self.add(input, lhs, rhs, rhs + slack - lhs)

    def add_close(self, input: str, lhs, rhs, allowed: float = 0.0) -> ReportDetail:
        """Detail for |lhs - rhs| <= allowed."""
        return self.add(input, lhs, rhs, allowed - abs(lhs - rhs))

    def add_flag(self, input: str, ok: bool, value=None) -> ReportDetail:
        return self.add(input, value, None, 0.0 if ok else -sys.float_info.max)

    def constant(self, label: str, value) -> None:
        self.constants[label] = value

    def max_constant(self, label: str, value) -> None:
        """Keep the running maximum of a measured constant."""
        current = self.constants.get(label)
        if value is None or not math.isfinite(value):
            self.constants[label] = value
        elif current is None or (math.isfinite(current) and value > current):
            self.constants[label] = value

    def meta(self, key: str, value) -> None:
        self.metadata[key] = str(value)

    def build(self) -> VerificationReport:
        passed = all(d.margin >= -self.tolerance for d in self.details)
        return VerificationReport(
            check_name=self.check_name,
            alpha=self.alpha,
            passed=passed,
            tolerance=self.tolerance,
            measured_constants=dict(self.constants),
            details=list(self.details),
            runtime_seconds=time.perf_counter() - self._start,
            config_digest=self.config_digest,
            seed=self.seed,
            metadata=dict(self.metadata),
        )
