"""Command-line orchestration."""

from .cli import build_parser, main, run
from .commands import CommandRegistry, register_commands
from .schemas import RunConfig

__all__ = ["main", "run", "build_parser", "CommandRegistry", "register_commands", "RunConfig"]
