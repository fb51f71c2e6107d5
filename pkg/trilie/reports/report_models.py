from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class CheckResult(BaseModel):
    """
    Outcome of one property check. A failed check carries a witness
    naming the basis elements on which the property broke.
    """
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[Any] = None
    sampled: bool = False

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "name": "closure: [QDer, QDer] in QDer",
                "passed": True,
                "detail": "36 brackets of basis maps",
                "witness": None,
                "sampled": False,
            }
        },
    )


class Report(BaseModel):
    """
    Everything one command computed for one algebra.
    """
    algebra_id: str
    operation: str
    result: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "algebra_id": "catalog:A3",
                "operation": "spaces",
                "result": {"der": {"dim": 6}},
                "checks": [],
                "passed": True,
                "elapsed_seconds": 0.01,
            }
        },
    )
