"""Text <-> symbol stream conversion with explicit letter and word gaps."""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from beatstego.errors import BeatStegoError
from .symbols import Symbol, SymbolStream
from .table import DEFAULT_TABLE, CodeTable

logger = logging.getLogger(__name__)

LETTER_GAP: SymbolStream = (Symbol.ZERO,)
WORD_GAP: SymbolStream = (Symbol.ZERO, Symbol.ZERO)


class CodecError(BeatStegoError):
    pass


class UnsupportedCharacter(CodecError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"Character {char!r} at position {position} has no code")


class UnknownCode(CodecError):
    def __init__(self, run: SymbolStream, position: int):
        self.run = tuple(run)
        self.position = position
        code = "".join(symbol.value for symbol in self.run)
        super().__init__(f"Symbol run {code!r} at position {position} matches no character")


class MalformedGap(CodecError):
    def __init__(self, position: int, length: int):
        self.position = position
        self.length = length
        super().__init__(f"Gap of {length} ZERO units at position {position}; at most 2 allowed")


def normalize_message(message: str) -> str:
    """Lowercase and collapse whitespace: the form a decoded message comes back in."""
    return " ".join(message.lower().split())


def encode_text(message: str, table: Optional[CodeTable] = None, *, lenient: bool = False) -> SymbolStream:
    table = table or DEFAULT_TABLE
    words: List[List[SymbolStream]] = []
    current: List[SymbolStream] = []
    for position, raw_char in enumerate(message):
        if raw_char.isspace():
            if current:
                words.append(current)
                current = []
            continue
        char = raw_char.lower()
        code = table.code_for(char)
        if code is None:
            if not lenient:
                raise UnsupportedCharacter(raw_char, position)
            logger.warning("Skipping unsupported character %r at position %d", raw_char, position)
            continue
        current.append(code)
    if current:
        words.append(current)

    stream: List[Symbol] = []
    for word_index, word in enumerate(words):
        if word_index:
            stream.extend(WORD_GAP)
        for letter_index, code in enumerate(word):
            if letter_index:
                stream.extend(LETTER_GAP)
            stream.extend(code)
    return tuple(stream)


def decode_symbols(stream: Sequence[Symbol], table: Optional[CodeTable] = None, *, strict: bool = True) -> str:
    table = table or DEFAULT_TABLE
    symbols = tuple(stream)
    start, end = 0, len(symbols)
    while start < end and symbols[start] is Symbol.ZERO:
        start += 1
    while end > start and symbols[end - 1] is Symbol.ZERO:
        end -= 1

    out: List[str] = []
    index = start
    while index < end:
        run_start = index
        if symbols[index] is Symbol.ZERO:
            while index < end and symbols[index] is Symbol.ZERO:
                index += 1
            gap = index - run_start
            if gap >= 3 and strict:
                raise MalformedGap(run_start, gap)
            if gap >= 2:
                out.append(" ")
            continue
        while index < end and symbols[index] is not Symbol.ZERO:
            index += 1
        run = symbols[run_start:index]
        char = table.char_for(run)
        if char is None:
            raise UnknownCode(run, run_start)
        out.append(char)
    return "".join(out)


__all__ = [
    "CodecError",
    "UnsupportedCharacter",
    "UnknownCode",
    "MalformedGap",
    "LETTER_GAP",
    "WORD_GAP",
    "normalize_message",
    "encode_text",
    "decode_symbols",
]
