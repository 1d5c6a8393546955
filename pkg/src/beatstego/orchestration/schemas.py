"""Validated run configuration for one CLI invocation."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

Command = Literal["gen-cover", "encode", "decode", "detect", "analyze", "codec"]

# field name -> flag as typed on the command line
FLAGS: Dict[str, str] = {
    "input": "-i/--input",
    "output": "-o/--output",
    "tempo": "--tempo",
    "beats": "--beats",
    "rate": "--rate",
    "delta": "--delta",
    "phi": "--phi",
    "offset": "--offset",
    "message": "-m/--message",
    "csv": "--csv",
    "report_format": "--format",
    "codec_direction": "--encode/--decode",
}

REQUIRED: Dict[str, Tuple[str, ...]] = {
    "gen-cover": ("tempo", "beats", "output"),
    "encode": ("input", "output", "tempo", "message"),
    "decode": ("input",),
    "detect": ("input",),
    "analyze": ("input", "output"),
    "codec": ("codec_direction",),
}


class RunConfig(BaseModel):
    command: Command
    input: Optional[Path] = None
    output: Optional[Path] = None
    tempo: Optional[float] = Field(None, gt=0)
    beats: Optional[int] = Field(None, ge=1)
    rate: Optional[int] = Field(None, gt=0)
    delta: Optional[float] = Field(None, gt=0)
    phi: Optional[int] = Field(None, ge=1)
    offset: Optional[float] = Field(None, ge=0)
    message: Optional[str] = None
    csv: Optional[Path] = None
    strict: bool = True
    report_format: Literal["text", "json"] = "text"
    codec_direction: Optional[Literal["encode", "decode"]] = None

    @model_validator(mode="after")
    def _required_flags(self) -> "RunConfig":
        for name in REQUIRED[self.command]:
            if getattr(self, name) is None:
                raise ValueError(f"{FLAGS[name]} is required for {self.command}")
        return self

    @classmethod
    def from_namespace(cls, namespace) -> "RunConfig":
        values = {name: getattr(namespace, name) for name in cls.model_fields if hasattr(namespace, name)}
        return cls(**{k: v for k, v in values.items() if v is not None})


__all__ = ["RunConfig", "Command", "FLAGS", "REQUIRED"]
