"""Lower and upper approximations with respect to a partition of U."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .subsets import SubsetMask, check_universe, format_set, full_mask


@dataclass(frozen=True)
class Partition:
    universe_size: int
    blocks: tuple[SubsetMask, ...]

    def __post_init__(self):
        check_universe(self.universe_size)
        seen = 0
        for b in self.blocks:
            if b <= 0:
                raise ValueError("partition blocks must be nonempty")
            if b & seen:
                raise ValueError(f"block {format_set(b)} overlaps another block")
            seen |= b
        if seen != full_mask(self.universe_size):
            raise ValueError("partition blocks must cover the universe")

    @classmethod
    def of(cls, n: int, blocks: Sequence[SubsetMask]) -> "Partition":
        return cls(n, tuple(blocks))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, tuple(1 << i for i in range(n)))


def lower_approx(P: Partition, X: SubsetMask) -> SubsetMask:
    """Union of the blocks lying inside X."""
    out = 0
    for b in P.blocks:
        if b & ~X == 0:
            out |= b
    return out


def upper_approx(P: Partition, X: SubsetMask) -> SubsetMask:
    """Union of the blocks meeting X."""
    out = 0
    for b in P.blocks:
        if b & X:
            out |= b
    return out
