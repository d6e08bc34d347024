"""Wire models shared by the CLI commands."""

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field

from .config import SCHEMA_VERSION


class OutputEnvelope(BaseModel):
    """Every JSON document printed by the CLI."""

    schemaVersion: str = Field(
        default=SCHEMA_VERSION, description="Output schema version"
    )
    command: str = Field(..., description="Subcommand that produced the payload")
    params: Dict[str, Any] = Field(
        default_factory=dict, description="Echo of the inputs"
    )
    payload: Any = Field(None, description="Command-specific result")
    elapsedMs: int = Field(0, description="Wall-clock time in milliseconds")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "schemaVersion": SCHEMA_VERSION,
                "command": "rep-regular",
                "params": {"p": 11, "r": 1, "rep": "1:0,1:4,1:8"},
                "payload": {"regular": True},
                "elapsedMs": 0,
            }
        }
    )


class ErrorPayload(BaseModel):
    """Written to stderr as JSON when a command fails."""

    error: str = Field(..., description="Exception class name")
    message: str
    failed: Any = None
    witness: Any = None
