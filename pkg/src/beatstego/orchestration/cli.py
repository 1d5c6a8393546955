"""CLI entrypoint for beatstego."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

from pydantic import ValidationError

from beatstego.config import available_profiles, load_settings
from beatstego.errors import BeatStegoError
from .commands import CommandRegistry, Streams, register_commands
from .schemas import FLAGS, RunConfig

logger = logging.getLogger(__name__)


def build_registry() -> CommandRegistry:
    registry = CommandRegistry()
    register_commands(registry)
    return registry


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beatstego", description="Hide text in the tempo of constant-bpm audio")
    parser.add_argument("--profile", choices=available_profiles(), help="Configuration profile")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-cover", help="Synthesize a click-track cover")
    gen.add_argument("--tempo", type=float, help="Tempo in bpm")
    gen.add_argument("--beats", type=int, help="Number of beats")
    gen.add_argument("--rate", type=int, help="Sample rate in Hz")
    gen.add_argument("-o", "--output", help="Output WAV path")

    enc = sub.add_parser("encode", help="Embed a message")
    enc.add_argument("-i", "--input", help="Cover WAV path")
    enc.add_argument("-o", "--output", help="Stego WAV path")
    enc.add_argument("--tempo", type=float, help="Reference tempo X of the cover in bpm")
    enc.add_argument("-m", "--message", help="Message text")
    _key_flags(enc)
    enc.add_argument("--offset", type=float, help="Time of the first beat in seconds")
    enc.add_argument("--lenient", dest="strict", action="store_false", help="Skip unsupported characters")

    dec = sub.add_parser("decode", help="Extract a message")
    dec.add_argument("-i", "--input", help="Stego WAV path")
    dec.add_argument("--tempo", type=float, help="Reference tempo X; estimated when omitted")
    _key_flags(dec)
    dec.add_argument("--csv", help="Write the tempo track as CSV")
    dec.add_argument("--lenient", dest="strict", action="store_false", help="Accept ZERO runs longer than a word gap")

    det = sub.add_parser("detect", help="Detect tempo modulation")
    det.add_argument("-i", "--input", help="WAV path")
    det.add_argument("--tempo", type=float, help="Tempo hint in bpm")
    det.add_argument("-o", "--output", help="Report path; stdout when omitted")
    det.add_argument("--format", dest="report_format", choices=["text", "json"], default="text")

    ana = sub.add_parser("analyze", help="Per-unit tempi as CSV")
    ana.add_argument("-i", "--input", help="WAV path")
    ana.add_argument("-o", "--output", help="CSV path")
    ana.add_argument("--tempo", type=float, help="Tempo hint in bpm")
    ana.add_argument("--phi", type=int, help="Beats per unit (default 1)")

    cod = sub.add_parser("codec", help="Text <-> symbol string on stdin/stdout")
    direction = cod.add_mutually_exclusive_group()
    direction.add_argument("--encode", dest="codec_direction", action="store_const", const="encode")
    direction.add_argument("--decode", dest="codec_direction", action="store_const", const="decode")
    cod.add_argument("--lenient", dest="strict", action="store_false")
    return parser


def _key_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--delta", type=float, help="Tempo offset in bpm")
    parser.add_argument("--phi", type=int, help="Beats per unit")


def _usage_message(exc: ValidationError) -> str:
    lines = []
    for error in exc.errors():
        loc = [str(part) for part in error.get("loc", ())]
        msg = error.get("msg", "").removeprefix("Value error, ")
        if loc and loc[0] in FLAGS:
            msg = f"{FLAGS[loc[0]]}: {msg}"
        lines.append(msg)
    return "; ".join(lines)


def configure_logging(settings, verbose: bool = False) -> None:
    level = "DEBUG" if verbose else str(settings.get("logging", "level", default="INFO")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=settings.get("logging", "format", default="%(asctime)s [%(levelname)s] %(name)s: %(message)s"),
        stream=sys.stderr,
    )
    # basicConfig is a no-op once handlers exist; the level still has to follow the flags.
    logging.getLogger().setLevel(getattr(logging, level, logging.INFO))


def run(argv: Optional[Sequence[str]] = None, *, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = RunConfig.from_namespace(args)
    except ValidationError as exc:
        sys.stderr.write(f"beatstego {args.command}: error: {_usage_message(exc)}\n")
        return 2

    settings = load_settings(args.profile) if args.profile else load_settings()
    configure_logging(settings, args.verbose)
    streams = Streams(stdin=stdin or sys.stdin, stdout=stdout or sys.stdout)
    try:
        return build_registry().run(config, settings, streams)
    except BeatStegoError as exc:
        logger.debug("%s failed: %s", config.command, exc.name)
        sys.stderr.write(f"{exc.name}: {exc}\n")
        return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
