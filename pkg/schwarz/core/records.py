"""Structured command output."""
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class CommandResult(BaseModel):
    """One command invocation: inputs echoed, payload, and timing."""
    model_config = ConfigDict(frozen=True)

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    result: dict[str, Any] = Field(default_factory=dict)
    status: int = 0
    elapsed_ms: int = 0
