import os
from typing import Literal, Mapping

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..exceptions import TrilieError


class Settings(BaseModel):
    """Run settings read from the environment; command-line flags override them per invocation."""

    seed: int = Field(default=0, alias="TRILIE_SEED")
    max_exhaustive: int = Field(default=8, ge=0, alias="TRILIE_MAX_EXHAUSTIVE")
    sample_size: int = Field(default=2000, ge=1, alias="TRILIE_SAMPLE_SIZE")
    random_maps: int = Field(default=100, ge=0, alias="TRILIE_RANDOM_MAPS")
    max_extension_dim: int = Field(default=12, ge=0, alias="TRILIE_MAX_EXTENSION_DIM")
    log_level: str = Field(default="WARNING", alias="TRILIE_LOG_LEVEL")
    format: Literal["text", "structured"] = Field(default="text", alias="TRILIE_FORMAT")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "TRILIE_SEED": 0,
                "TRILIE_MAX_EXHAUSTIVE": 8,
                "TRILIE_SAMPLE_SIZE": 2000,
                "TRILIE_RANDOM_MAPS": 100,
                "TRILIE_MAX_EXTENSION_DIM": 12,
                "TRILIE_LOG_LEVEL": "WARNING",
                "TRILIE_FORMAT": "text",
            }
        },
    )

    @field_validator("log_level")
    @classmethod
    def upper_level(cls, level: str) -> str:
        return level.upper()


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    environ = os.environ if environ is None else environ
    values = {f.alias: environ[f.alias] for f in Settings.model_fields.values() if environ.get(f.alias)}
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        first = e.errors()[0]
        raise TrilieError(f"bad setting {'.'.join(str(p) for p in first['loc'])}: {first['msg']}")
