"""The product set S = V_F x ... x V_F inside F_p^n, one copy per m-block."""

from __future__ import annotations

from typing import Sequence

from .errors import NotAMemberError, ParameterError
from .linalg import Vector
from .params import EvasiveParams
from .variety import BlockVariety


class EvasiveSet:
    def __init__(self, params: EvasiveParams):
        self.params = params
        self.field = params.field
        self.block = BlockVariety(params)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def blocks(self) -> int:
        return self.params.blocks

    @property
    def message_length(self) -> int:
        return self.params.message_length

    def __repr__(self):
        return f"EvasiveSet(p={self.params.p}, k={self.params.k}, m={self.params.m}, n={self.n})"

    def __len__(self):
        return self.block.size() ** self.blocks

    def split(self, x: Sequence[int]) -> list[Vector]:
        """Cut a point of F^n into its consecutive m-blocks."""
        if len(x) != self.n:
            raise ParameterError(f"point must have {self.n} coordinates, got {len(x)}")
        m = self.params.m
        p = self.field.p
        return [tuple(int(v) % p for v in x[t * m:(t + 1) * m]) for t in range(self.blocks)]

    def split_message(self, msg: Sequence[int]) -> list[Vector]:
        if len(msg) != self.message_length:
            raise ParameterError(f"message must have {self.message_length} coordinates, got {len(msg)}")
        w = self.params.m - self.params.k
        return [tuple(msg[t * w:(t + 1) * w]) for t in range(self.blocks)]

    def member_set(self, x: Sequence[int]) -> bool:
        return all(self.block.member(b) for b in self.split(x))

    def __contains__(self, x) -> bool:
        return len(x) == self.n and self.member_set(x)

    def encode(self, msg: Sequence[int]) -> Vector:
        out: list[int] = []
        for z in self.split_message(msg):
            out.extend(self.block.encode_block(z))
        return tuple(out)

    def decode(self, x: Sequence[int]) -> Vector:
        blocks = self.split(x)
        out: list[int] = []
        for t, b in enumerate(blocks):
            if not self.block.member(b):
                raise NotAMemberError(f"block {t} of the point is not on the variety")
            out.extend(self.block.decode_block(b))
        return tuple(out)
