import itertools
import json
import logging
from pathlib import Path

import numpy as np
import pytest

from beatstego.services.codec import (
    DEFAULT_TABLE,
    CodeTable,
    MalformedGap,
    ParseError,
    Symbol,
    UnknownCode,
    UnsupportedCharacter,
    decode_symbols,
    encode_text,
    is_well_formed,
    normalize_message,
    symbols_from_text_form,
    symbols_to_text_form,
)

FIXTURE = Path(__file__).parent / "fixtures" / "code_table.json"
ALPHABET = sorted(DEFAULT_TABLE.entries)


def _encode(text, **kwargs):
    return symbols_to_text_form(encode_text(text, **kwargs))


def _decode(text, **kwargs):
    return decode_symbols(symbols_from_text_form(text), **kwargs)


def test_table_matches_fixture():
    expected = json.loads(FIXTURE.read_text(encoding="utf-8"))
    assert len(expected) == 54
    assert len(DEFAULT_TABLE) == 54
    for char, code in expected.items():
        assert symbols_to_text_form(DEFAULT_TABLE.code_for(char)) == code


def test_table_is_injective_and_zero_free():
    codes = list(DEFAULT_TABLE.entries.values())
    assert len(set(codes)) == len(codes)
    assert all(Symbol.ZERO not in code for code in codes)
    assert DEFAULT_TABLE.max_code_length == 6


def test_table_rejects_duplicate_codes():
    with pytest.raises(ValueError):
        CodeTable(entries={"a": (Symbol.PLUS,), "b": (Symbol.PLUS,)})


def test_table_rejects_zero_in_code():
    with pytest.raises(ValueError):
        CodeTable(entries={"a": (Symbol.PLUS, Symbol.ZERO)})


@pytest.mark.parametrize(
    "text, expected",
    [
        ("sos", "+++0---0+++"),
        ("a b", "+-00-+++"),
        ("e", "+"),
        ("SOS", "+++0---0+++"),
        ("", ""),
    ],
)
def test_encode_examples(text, expected):
    assert _encode(text) == expected


def test_encode_collapses_whitespace():
    assert _encode("  a \t\n b  ") == "+-00-+++"


def test_unsupported_character_reports_position():
    with pytest.raises(UnsupportedCharacter) as info:
        encode_text("ab#c")
    assert info.value.char == "#"
    assert info.value.position == 2
    assert info.value.name == "UnsupportedCharacter"


def test_lenient_encoding_skips_and_warns(caplog):
    with caplog.at_level(logging.WARNING, logger="beatstego.services.codec.codec"):
        assert _encode("s#s", lenient=True) == _encode("ss")
    assert any("#" in record.getMessage() for record in caplog.records)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("+++0---0+++", "sos"),
        ("+-00-+++", "a b"),
        ("00+++0---0+++00", "sos"),
        ("", ""),
    ],
)
def test_decode_examples(text, expected):
    assert _decode(text) == expected


def test_decode_unknown_code():
    with pytest.raises(UnknownCode) as info:
        _decode("+0++++++")
    assert info.value.position == 2


def test_decode_long_gap_strict_and_lenient():
    with pytest.raises(MalformedGap) as info:
        _decode("+000+")
    assert info.value.length == 3
    assert _decode("+000+", strict=False) == "e e"


def test_codes_outside_table_do_not_decode():
    known = set(DEFAULT_TABLE.entries.values())
    unknown = [
        code
        for length in range(1, 7)
        for code in itertools.product((Symbol.PLUS, Symbol.MINUS), repeat=length)
        if code not in known
    ]
    assert len(unknown) == 126 - sum(1 for code in known if len(code) <= 6)
    for code in unknown:
        assert DEFAULT_TABLE.char_for(code) is None
        with pytest.raises(UnknownCode):
            decode_symbols(code)


def test_text_form_parse_error():
    with pytest.raises(ParseError) as info:
        symbols_from_text_form("+-x")
    assert info.value.position == 2


def test_is_well_formed():
    assert is_well_formed(encode_text("steganography is a dancer!"))
    assert not is_well_formed(symbols_from_text_form("0+"))
    assert not is_well_formed(symbols_from_text_form("+000+"))


def test_normalize_message():
    assert normalize_message("  Steganography   IS a\tDancer! ") == "steganography is a dancer!"


def _random_message(rng, max_words=6):
    words = []
    for _ in range(int(rng.integers(1, max_words + 1))):
        length = int(rng.integers(1, 9))
        word = "".join(ALPHABET[i] for i in rng.integers(0, len(ALPHABET), size=length))
        if rng.random() < 0.3:
            word = word.upper()
        words.append(word)
    separators = [" ", "  ", "\t", " \n "]
    return "".join(w + separators[int(rng.integers(0, len(separators)))] for w in words)


def _check_bijection(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        message = _random_message(rng)
        stream = encode_text(message)
        assert is_well_formed(stream)
        assert decode_symbols(stream) == normalize_message(message)


def test_codec_bijection_sample():
    _check_bijection(500, seed=7)


@pytest.mark.slow
def test_codec_bijection_full():
    _check_bijection(10_000, seed=2024)
