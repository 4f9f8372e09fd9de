"""Vertex sets as Python ints: bit ``i`` set means vertex id ``i`` is a member."""

from typing import Iterable, Iterator


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield member ids in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key ordering sets lexicographically by their sorted id-sequence."""
    return members(mask)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
