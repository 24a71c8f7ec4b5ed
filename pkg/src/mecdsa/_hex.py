"""Hex and byte-string helpers shared by the file formats.

Integers cross every file and module boundary as lowercase big-endian hex
without a radix prefix.
"""

import string

from mecdsa.errors import FormatError

_HEX_DIGITS = set(string.hexdigits)


def int_to_hex(value: int) -> str:
    if value < 0:
        raise ValueError("negative integers have no hex form here")
    return format(value, "x")


def hex_to_int(text: str, what: str = "integer") -> int:
    if not text or any(ch not in _HEX_DIGITS for ch in text):
        raise FormatError(f"{what}: not a hex string: {text!r}")
    return int(text, 16)


def int_to_fixed_hex(value: int, width_bytes: int) -> str:
    if value < 0 or value >= 1 << (8 * width_bytes):
        raise ValueError(f"{value} does not fit in {width_bytes} bytes")
    return format(value, "0%dx" % (2 * width_bytes))


def minimal_bytes(value: int) -> bytes:
    """Shortest big-endian encoding; the empty string for zero."""
    if value < 0:
        raise ValueError("negative integers have no minimal byte form")
    return value.to_bytes((value.bit_length() + 7) // 8, "big")
