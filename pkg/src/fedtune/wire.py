"""Byte-level field encoding shared by key serialization and protocol messages.

All integers are non-negative and big-endian. A big integer is written as a
4-byte length prefix followed by its minimal magnitude bytes (zero encodes as
length 0). Lists are a 4-byte element count followed by the elements.
"""

import struct


class WireError(ValueError):
    """Malformed byte-level field data."""


class TruncatedDataError(WireError):
    """Input ended before a declared field was complete."""


def encode_u32(v: int) -> bytes:
    if not 0 <= v <= 0xFFFFFFFF:
        raise WireError(f"u32 out of range: {v}")
    return struct.pack(">I", v)


def encode_bigint(x: int) -> bytes:
    if x < 0:
        raise WireError("big integers on the wire are non-negative")
    mag = x.to_bytes((x.bit_length() + 7) // 8, "big")
    return encode_u32(len(mag)) + mag


def encode_bytes(data: bytes) -> bytes:
    return encode_u32(len(data)) + bytes(data)


def encode_bigint_list(xs) -> bytes:
    parts = [encode_u32(len(xs))]
    parts.extend(encode_bigint(x) for x in xs)
    return b"".join(parts)


class Reader:
    """Sequential reader over a byte string with strict bounds checking."""

    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0

    def take(self, n: int) -> bytes:
        if n < 0 or self._pos + n > len(self._data):
            raise TruncatedDataError(
                f"need {n} bytes at offset {self._pos}, have {len(self._data) - self._pos}"
            )
        out = self._data[self._pos : self._pos + n]
        self._pos += n
        return out

    def u32(self) -> int:
        return struct.unpack(">I", self.take(4))[0]

    def bigint(self) -> int:
        return int.from_bytes(self.take(self.u32()), "big")

    def bytes_field(self) -> bytes:
        return self.take(self.u32())

    def bigint_list(self) -> list:
        return [self.bigint() for _ in range(self.u32())]

    @property
    def remaining(self) -> int:
        return len(self._data) - self._pos

    def expect_end(self):
        if self.remaining:
            raise WireError(f"{self.remaining} trailing bytes after last field")
