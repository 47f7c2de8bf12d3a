"""Pydantic model for the run manifest written by the CLI."""

from datetime import UTC, datetime

from pydantic import Field, field_serializer

from hkst.models.base import HkstBaseModel


class RunManifest(HkstBaseModel):
    """Provenance record of one CLI invocation.

    Attributes:
        tool_version: hkst version string.
        command_line: argv echo.
        input_digests: SHA-256 hex digest per input path.
        outputs: Paths written by the run.
        timestamp: Completion time (UTC).
    """

    tool_version: str
    command_line: list[str]
    input_digests: dict[str, str] = Field(default_factory=dict)
    outputs: list[str] = Field(default_factory=list)
    timestamp: datetime = Field(default_factory=lambda: datetime.now(UTC))

    @field_serializer("timestamp")
    def _rfc3339(self, value: datetime) -> str:
        return value.astimezone(UTC).isoformat(timespec="seconds").replace("+00:00", "Z")
