"""Morse-derived code table: a dot becomes PLUS, a dash stays MINUS."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Mapping, Optional

from .symbols import Symbol, SymbolStream, symbols_from_text_form

# '(' and ')' follow International Morse; every other row is taken as published for the method.
_RAW_TABLE = """
a +-
b -+++
c -+-+
d -++
e +
f ++-+
g --+
h ++++
i ++
j +---
k -+-
l +-++
m --
n -+
o ---
p +--+
q --+-
r +-+
s +++
t -
u ++-
v +++-
w +--
x -++-
y -+--
z --++
0 -----
1 +----
2 ++---
3 +++--
4 ++++-
5 +++++
6 -++++
7 --+++
8 ---++
9 ----+
, --++--
. +-+-+-
: ---+++
; -+-+-+
! -+-+--
? ++--++
' +----+
- --+++-
_ ++--+-
/ -++-+
( -+--+
) -+--+-
" +-++-+
= -+++-
+ +-+-+
& +-+++
@ +--+-+
$ +++-+-
"""


def _parse_raw(raw: str) -> Dict[str, SymbolStream]:
    entries: Dict[str, SymbolStream] = {}
    for line in raw.strip().splitlines():
        char, code = line.split(" ")
        entries[char] = symbols_from_text_form(code)
    return entries


@dataclass(frozen=True)
class CodeTable:
    """Immutable character <-> code mapping with unambiguous reverse lookup."""

    entries: Mapping[str, SymbolStream]
    _reverse: Mapping[SymbolStream, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        reverse: Dict[SymbolStream, str] = {}
        for char, code in self.entries.items():
            if len(char) != 1:
                raise ValueError(f"Table keys must be single characters, got {char!r}")
            if not code:
                raise ValueError(f"Empty code for {char!r}")
            if any(symbol is Symbol.ZERO for symbol in code):
                raise ValueError(f"Code for {char!r} contains ZERO")
            if code in reverse:
                raise ValueError(f"Code {code!r} assigned to both {reverse[code]!r} and {char!r}")
            reverse[code] = char
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        object.__setattr__(self, "_reverse", MappingProxyType(reverse))

    def __contains__(self, char: object) -> bool:
        return char in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def code_for(self, char: str) -> Optional[SymbolStream]:
        return self.entries.get(char)

    def char_for(self, code: SymbolStream) -> Optional[str]:
        return self._reverse.get(tuple(code))

    @property
    def max_code_length(self) -> int:
        return max(len(code) for code in self.entries.values())


def build_code_table() -> CodeTable:
    return CodeTable(entries=_parse_raw(_RAW_TABLE))


DEFAULT_TABLE = build_code_table()

__all__ = ["CodeTable", "build_code_table", "DEFAULT_TABLE"]
