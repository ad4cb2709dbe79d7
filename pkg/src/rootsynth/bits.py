"""Small helpers for binary vectors and their integer packings."""
from __future__ import annotations

from typing import Iterable

Bits = tuple[int, ...]


def as_bits(values: Iterable[int], length: int | None = None) -> Bits:
    """Normalize to a tuple of 0/1 ints, optionally enforcing a length."""
    bits = tuple(int(v) for v in values)
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"expected a binary vector, got {bits}")
    if length is not None and len(bits) != length:
        raise ValueError(f"expected {length} bits, got {len(bits)}")
    return bits


def parse_bitstring(text: str) -> Bits:
    """Read a string like '110' left to right into (1, 1, 0)."""
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"expected a nonempty string of 0/1, got {text!r}")
    return tuple(int(ch) for ch in text)


def format_bits(bits: Iterable[int]) -> str:
    return "".join(str(b) for b in bits)


def bits_to_index(bits: Iterable[int]) -> int:
    """Pack a bit vector into an index, first bit most significant."""
    index = 0
    for b in bits:
        index = (index << 1) | b
    return index


def index_to_bits(index: int, width: int) -> Bits:
    """Unpack an index into `width` bits, first bit most significant."""
    if not 0 <= index < (1 << width):
        raise ValueError(f"index {index} out of range for width {width}")
    return tuple((index >> (width - 1 - i)) & 1 for i in range(width))


def pack_lsb(bits: Iterable[int]) -> int:
    """Pack a bit vector into an int, first bit least significant."""
    value = 0
    for i, b in enumerate(bits):
        value |= b << i
    return value


def trailing_zeros(value: int) -> int:
    """Index of the lowest set bit; value must be positive."""
    if value <= 0:
        raise ValueError(f"expected a positive integer, got {value}")
    return (value & -value).bit_length() - 1
