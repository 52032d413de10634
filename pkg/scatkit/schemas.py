"""
Pydantic schemas for the JSON report.

- Every model forbids unknown fields so a report either matches the schema or fails loudly.
- Serialization is deterministic: sorted keys, fixed indentation, timing only when requested.
"""
import json
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "scatkit/1"
MAX_LEN_NAME = 64
MAX_LEN_EXPR = 20000


class WallRow(BaseModel):
    """One wall of a case diagram as it appears in the report table."""
    model_config = ConfigDict(extra="forbid")
    index: int = Field(..., ge=1)
    boundary_class: str = Field(..., max_length=MAX_LEN_NAME)
    multiplicity: int = Field(..., ge=1)
    angle: str = Field(..., max_length=MAX_LEN_NAME)  # exact, as a multiple of pi
    angle_radians: float
    coefficient: str = Field(..., max_length=MAX_LEN_EXPR)
    function: str = Field(..., max_length=MAX_LEN_EXPR)


class CheckResult(BaseModel):
    """Outcome of one named check; witnesses are printed expressions."""
    model_config = ConfigDict(extra="forbid")
    name: str = Field(..., min_length=1, max_length=MAX_LEN_NAME)
    passed: bool
    witnesses: list[str] = Field(default_factory=list)
    detail: Optional[str] = None


class Report(BaseModel):
    """Single JSON document per run."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)
    schema_: Literal["scatkit/1"] = Field(SCHEMA_VERSION, alias="schema")
    command: str = Field(..., max_length=MAX_LEN_NAME)
    case: Optional[str] = None
    coeff_mode: Optional[str] = None
    walls: list[WallRow] = Field(default_factory=list)
    checks: list[CheckResult] = Field(default_factory=list)
    timing: Optional[dict[str, float]] = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        exclude = {"timing"} if self.timing is None else None
        data = self.model_dump(by_alias=True, exclude=exclude)
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
