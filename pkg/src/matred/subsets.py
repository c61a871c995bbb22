"""Bitmask subsets of a small ground set and canonical set families.

A subset of U = {0, ..., n-1} is a plain ``int`` whose bit i is set iff
element i is a member. Elements are 0-based internally and 1-based when
rendered, so ``0b101`` displays as ``{1,3}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, UniverseTooLarge

MAX_UNIVERSE = 24

SubsetMask = int


def check_universe(n: int, cap: int = MAX_UNIVERSE) -> None:
    if n < 0:
        raise ValueError(f"universe size must be non-negative, got {n}")
    if n > cap:
        raise UniverseTooLarge(n, cap)


def full_mask(n: int) -> SubsetMask:
    return (1 << n) - 1


def from_elements(elements: Iterable[int]) -> SubsetMask:
    """Build a mask from 0-based element indices."""
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element index {e}")
        mask |= 1 << e
    return mask


def elements(mask: SubsetMask) -> list[int]:
    """0-based indices of the members of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def is_subset(a: SubsetMask, b: SubsetMask) -> bool:
    return a & ~b == 0


def canonical_key(mask: SubsetMask) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def _same_popcount(n: int, k: int) -> Iterator[SubsetMask]:
    # Gosper's hack: successive masks with k bits set, ascending.
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def power_set(n: int) -> Iterator[SubsetMask]:
    """Yield all 2**n subsets of an n-element universe in canonical order.

    Canonical order is ascending cardinality, ties broken by numeric value.
    """
    check_universe(n)
    for k in range(n + 1):
        yield from _same_popcount(n, k)


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """All subsets of ``mask`` (including itself and the empty set), unordered."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subsets_of(mask: SubsetMask) -> list[SubsetMask]:
    """All subsets of ``mask`` in canonical order."""
    return sorted(submasks(mask), key=canonical_key)


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets kept in canonical order.

    Build with :meth:`of`; the raw constructor trusts its input.
    """

    universe_size: int
    members: tuple[SubsetMask, ...] = ()

    @classmethod
    def of(cls, universe_size: int, masks: Iterable[SubsetMask] = ()) -> "SetFamily":
        check_universe(universe_size)
        limit = full_mask(universe_size)
        uniq = set()
        for m in masks:
            if m < 0 or m & ~limit:
                raise ValueError(
                    f"set {format_set(m) if m >= 0 else m} lies outside a universe of size {universe_size}"
                )
            uniq.add(m)
        return cls(universe_size, tuple(sorted(uniq, key=canonical_key)))

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.members

    def __str__(self) -> str:
        return format_family(self)

    def as_set(self) -> frozenset[SubsetMask]:
        return frozenset(self.members)


def min_family(family: SetFamily) -> SetFamily:
    """Members of ``family`` that contain no other member as a proper subset."""
    kept: list[SubsetMask] = []
    # Canonical order lists every proper subset before its supersets.
    for m in family.members:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return SetFamily(family.universe_size, tuple(kept))


def max_family(family: SetFamily) -> SetFamily:
    """Members of ``family`` not contained in any other member."""
    kept: list[SubsetMask] = []
    for m in reversed(family.members):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return SetFamily(family.universe_size, tuple(sorted(kept, key=canonical_key)))


def is_antichain(family: SetFamily) -> bool:
    ms = family.members
    return not any(
        a != b and a & ~b == 0 for i, a in enumerate(ms) for b in ms[i + 1 :]
    )


def format_set(mask: SubsetMask) -> str:
    return "{" + ",".join(str(e + 1) for e in elements(mask)) + "}"


def format_family(family: Iterable[SubsetMask]) -> str:
    if isinstance(family, SetFamily):
        ms = family.members
    else:
        ms = sorted(set(family), key=canonical_key)
    return "[" + ";".join(format_set(m) for m in ms) + "]"


def parse_set(text: str, n: int | None = None) -> SubsetMask:
    """Parse ``{a,b,...}`` with 1-based labels; whitespace is ignored."""
    s = "".join(text.split())
    if len(s) < 2 or s[0] != "{" or s[-1] != "}":
        raise ParseError(f"expected a set like {{1,3}}, got {text!r}")
    body = s[1:-1]
    if not body:
        return 0
    mask = 0
    for tok in body.split(","):
        if not tok.isdigit():
            raise ParseError(f"bad element {tok!r} in {text!r}")
        label = int(tok)
        if label < 1 or (n is not None and label > n):
            raise ParseError(f"element {label} outside 1..{n} in {text!r}")
        mask |= 1 << (label - 1)
    return mask


def parse_family(text: str, n: int) -> SetFamily:
    """Parse ``{..};{..}`` or ``[{..};{..}]``."""
    s = "".join(text.split())
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s:
        return SetFamily.of(n)
    return SetFamily.of(n, (parse_set(part, n) for part in s.split(";")))
