"""Three-valued tempo symbols and their text interchange form."""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence, Tuple

from beatstego.errors import BeatStegoError


class Symbol(str, Enum):
    """One unit of tempo: raised (PLUS), lowered (MINUS) or reference (ZERO)."""

    PLUS = "+"
    MINUS = "-"
    ZERO = "0"


SymbolStream = Tuple[Symbol, ...]


class ParseError(BeatStegoError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"Invalid symbol character {char!r} at index {position}")


_BY_CHAR = {symbol.value: symbol for symbol in Symbol}


def symbols_to_text_form(stream: Iterable[Symbol]) -> str:
    return "".join(symbol.value for symbol in stream)


def symbols_from_text_form(text: str) -> SymbolStream:
    symbols = []
    for position, char in enumerate(text):
        symbol = _BY_CHAR.get(char)
        if symbol is None:
            raise ParseError(position, char)
        symbols.append(symbol)
    return tuple(symbols)


def is_well_formed(stream: Sequence[Symbol]) -> bool:
    """No leading/trailing ZERO and no interior ZERO run longer than two."""
    if not stream:
        return True
    if stream[0] is Symbol.ZERO or stream[-1] is Symbol.ZERO:
        return False
    run = 0
    for symbol in stream:
        run = run + 1 if symbol is Symbol.ZERO else 0
        if run > 2:
            return False
    return True


__all__ = [
    "Symbol",
    "SymbolStream",
    "ParseError",
    "symbols_to_text_form",
    "symbols_from_text_form",
    "is_well_formed",
]
