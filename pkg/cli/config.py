"""
Command-line configuration.

``Settings`` supplies defaults that can be overridden with ``WORDORDERS_*``
environment variables or a ``.env`` file; ``RunConfig`` validates one
invocation after the command-line flags are applied on top.
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from presentations.presentation import BUILTIN_NAMES

Command = Literal["gb", "dims", "check", "compare", "normalize"]
Suite = Literal["qm", "free", "word-operad", "admissible", "morphisms", "injectivity", "rewriting", "all"]

MAX_DIMS_ARITY = 7


class CommandError(ValueError):
    """Raised when a command cannot run with the options it was given"""


class Settings(BaseSettings):
    """Defaults for every run."""

    model_config = SettingsConfigDict(env_prefix="WORDORDERS_", env_file=".env", extra="ignore")

    seed: int = Field(default=7, description="Seed of every numpy generator")
    trials: int = Field(default=1000, ge=1, description="Random trials per property suite")
    gb_max_arity: int = Field(default=4, ge=2, description="Overlap arity bound for gb")
    dims_max_arity: int = Field(default=6, ge=2, le=MAX_DIMS_ARITY, description="Largest arity for dims")
    log_level: str = Field(default="INFO", description="Logging level name")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        allowed = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in allowed:
            raise ValueError(f"Invalid log level '{v}'. Must be one of: {sorted(allowed)}")
        return v.upper()


class RunConfig(BaseModel):
    """One validated command-line invocation."""

    command: Command
    preset: Optional[str] = Field(default=None, description="Built-in presentation name")
    file: Optional[Path] = Field(default=None, description="Presentation file")
    order: str = Field(default="poisson-qm", description="Order name or order spec")
    max_arity: int = Field(ge=2, description="Overlap bound (gb) or largest arity (dims)")
    trials: int = Field(ge=1)
    seed: int
    format: Literal["text", "json"] = "text"
    suite: Suite = "all"
    monoid: Literal["qm", "free"] = "qm"

    @field_validator("preset")
    @classmethod
    def validate_preset(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in BUILTIN_NAMES:
            raise ValueError(f"Unknown preset '{v}'. Must be one of: {', '.join(BUILTIN_NAMES)}")
        return v

    @model_validator(mode="after")
    def check_source(self) -> "RunConfig":
        if self.preset is not None and self.file is not None:
            raise ValueError("Give either --preset or --file, not both")
        if self.preset is None and self.file is None:
            self.preset = "pois"
        if self.command == "dims" and self.max_arity > MAX_DIMS_ARITY:
            raise ValueError(f"dims supports max_arity <= {MAX_DIMS_ARITY}, got {self.max_arity}")
        return self

    @property
    def source(self) -> str:
        return self.preset if self.preset is not None else str(self.file)
