"""Dense 4-D float32 tensor value type, norms, and the .t4 binary format."""

from __future__ import annotations

import struct

import numpy as np

from .errors import FormatError, ValidationError

T4_MAGIC = b"T4F1"
_T4_HEADER = struct.Struct("<4s4II")  # magic, four extents, reserved (must be 0)


class Tensor4:
    """Immutable dense rank-4 tensor of 32-bit floats.

    Element (i, j, k, l) lives at flat offset ((i*d1 + j)*d2 + k)*d3 + l,
    i.e. plain C row-major order with axis 0 slowest. Every element is
    finite; construction rejects NaN/Inf and zero extents.
    """

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=np.float32, order="C", copy=True)
        if arr.ndim != 4:
            raise ValidationError(f"expected 4 axes, got {arr.ndim}")
        if min(arr.shape) < 1:
            raise ValidationError(f"every extent must be >= 1, got {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValidationError("tensor elements must be finite")
        arr.flags.writeable = False
        self.data: np.ndarray = arr

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return self.data.shape

    def __repr__(self) -> str:
        return f"Tensor4(dims={self.data.shape})"


def frobenius_norm(t: Tensor4) -> float:
    """Square root of the sum of squared elements, accumulated in float64."""
    return float(np.sqrt(np.square(t.data, dtype=np.float64).sum()))


def relative_error(reference: Tensor4, approx: Tensor4) -> float:
    """Frobenius norm of (reference - approx) divided by the norm of reference."""
    if reference.dims != approx.dims:
        raise ValidationError(
            f"dimension mismatch: {reference.dims} vs {approx.dims}"
        )
    ref_norm = frobenius_norm(reference)
    if ref_norm == 0.0:
        raise ValidationError("reference tensor has zero norm")
    diff = reference.data.astype(np.float64) - approx.data.astype(np.float64)
    return float(np.sqrt(np.square(diff).sum())) / ref_norm


def random_tensor(dims, seed: int) -> Tensor4:
    """Standard-normal tensor drawn from a PCG64 stream; deterministic per seed."""
    rng = np.random.default_rng(seed)
    return Tensor4(rng.standard_normal(tuple(dims)))


def write_t4(t: Tensor4) -> bytes:
    """Serialize to the .t4 layout: 24-byte header then little-endian float32 payload."""
    d0, d1, d2, d3 = t.dims
    return _T4_HEADER.pack(T4_MAGIC, d0, d1, d2, d3, 0) + t.data.astype("<f4").tobytes()


def read_t4(buf: bytes) -> Tensor4:
    """Parse .t4 bytes, rejecting bad magic, bad lengths, and non-finite payloads."""
    if len(buf) < _T4_HEADER.size:
        raise FormatError("truncated header")
    magic, d0, d1, d2, d3, reserved = _T4_HEADER.unpack_from(buf)
    if magic != T4_MAGIC:
        raise FormatError(f"bad magic {magic!r}")
    if reserved != 0:
        raise FormatError("reserved header field must be zero")
    dims = (d0, d1, d2, d3)
    if min(dims) < 1:
        raise FormatError(f"extents must be >= 1, got {dims}")
    count = d0 * d1 * d2 * d3
    if count > 2**64 - 1:
        raise FormatError("element count overflows a 64-bit counter")
    expected = _T4_HEADER.size + 4 * count
    if len(buf) != expected:
        raise FormatError(f"payload length {len(buf)} != expected {expected}")
    arr = np.frombuffer(buf, dtype="<f4", offset=_T4_HEADER.size, count=count)
    if not np.isfinite(arr).all():
        raise FormatError("payload contains non-finite values")
    return Tensor4(arr.reshape(dims))


def load_t4(path) -> Tensor4:
    with open(path, "rb") as fh:
        return read_t4(fh.read())


def save_t4(t: Tensor4, path) -> None:
    with open(path, "wb") as fh:
        fh.write(write_t4(t))
