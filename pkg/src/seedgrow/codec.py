"""Bit-exact binary codec for the tensor exchange format (.sgt).

Layout, all integers little-endian:

    magic   4 bytes   b"SGT1"
    rank    u32       2 (class weights) or 3 (activation stack)
    dims    rank*u32  (C, K) for rank 2, (K, H, W) for rank 3
    payload prod(dims) IEEE-754 f32 values, channel-major then row-major

The payload length must match the header exactly; trailing bytes are an
error. Values must be finite.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import BadMagic, NonFiniteValue, TruncatedPayload, UnsupportedRank
from .types import ActivationStack, ClassWeights

MAGIC = b"SGT1"

_RANK_OF = {ActivationStack: 3, ClassWeights: 2}


def decode_tensor(data: bytes) -> ActivationStack | ClassWeights:
    """Parse .sgt bytes into an ActivationStack (rank 3) or ClassWeights (rank 2)."""
    if data[:4] != MAGIC:
        raise BadMagic(f"expected magic {MAGIC!r}, got {bytes(data[:4])!r}")
    if len(data) < 8:
        raise TruncatedPayload("header cut off before rank field")
    (rank,) = struct.unpack_from("<I", data, 4)
    if rank not in (2, 3):
        raise UnsupportedRank(f"rank {rank} not supported (expected 2 or 3)")
    if len(data) < 8 + 4 * rank:
        raise TruncatedPayload("header cut off inside dims")
    dims = struct.unpack_from(f"<{rank}I", data, 8)
    count = 1
    for d in dims:
        count *= d
    body = data[8 + 4 * rank:]
    if len(body) != 4 * count:
        raise TruncatedPayload(
            f"payload holds {len(body)} bytes, header requires {4 * count}"
        )
    values = np.frombuffer(body, dtype="<f4").reshape(dims)
    if not np.isfinite(values).all():
        raise NonFiniteValue("tensor payload contains NaN or Inf")
    if rank == 3:
        return ActivationStack(values)
    return ClassWeights(values)


def encode_tensor(tensor: ActivationStack | ClassWeights) -> bytes:
    """Serialize a tensor; decode_tensor(encode_tensor(t)) == t bit-exactly."""
    rank = _RANK_OF[type(tensor)]
    dims = tensor.data.shape
    header = MAGIC + struct.pack(f"<I{rank}I", rank, *dims)
    return header + tensor.data.astype("<f4", copy=False).tobytes()
