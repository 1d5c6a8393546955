"""Codec services: text <-> three-valued tempo symbols."""

from .codec import (
    CodecError,
    MalformedGap,
    UnknownCode,
    UnsupportedCharacter,
    decode_symbols,
    encode_text,
    normalize_message,
)
from .symbols import (
    ParseError,
    Symbol,
    SymbolStream,
    is_well_formed,
    symbols_from_text_form,
    symbols_to_text_form,
)
from .table import DEFAULT_TABLE, CodeTable, build_code_table

__all__ = [
    "Symbol",
    "SymbolStream",
    "CodeTable",
    "DEFAULT_TABLE",
    "build_code_table",
    "encode_text",
    "decode_symbols",
    "normalize_message",
    "symbols_to_text_form",
    "symbols_from_text_form",
    "is_well_formed",
    "CodecError",
    "UnsupportedCharacter",
    "UnknownCode",
    "MalformedGap",
    "ParseError",
]
