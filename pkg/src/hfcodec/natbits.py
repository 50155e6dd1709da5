"""Base expansions and bit lists for arbitrary-precision naturals.

Digit lists are little-endian throughout: index i carries the coefficient
of base**i.  The expansion of 0 is the single digit [0], never the empty
list, so every natural has exactly one canonical form per base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class DigitList:
    """Digits of a natural in a fixed base, least significant first.

    The base travels with the digits so that feeding digits of one base
    into a conversion for another fails loudly instead of silently.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def _check_natural(n: int) -> None:
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")


def to_base(base: int, n: int) -> DigitList:
    """Expand n in the given base; the last digit is nonzero except for 0 itself."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    _check_natural(n)
    if base == 2:
        return DigitList(2, tuple(to_rbits(n)))
    digits = []
    while True:
        n, d = divmod(n, base)
        digits.append(d)
        if n == 0:
            return DigitList(base, tuple(digits))


def from_base(base: int, ds: DigitList | Iterable[int]) -> int:
    """Evaluate little-endian digits: sum of ds[i] * base**i."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if isinstance(ds, DigitList):
        if ds.base != base:
            raise ValueError(f"digit list carries base {ds.base}, expected {base}")
        digits = ds.digits
    else:
        digits = tuple(ds)
        for d in digits:
            if not 0 <= d < base:
                raise ValueError(f"digit {d} out of range for base {base}")
    n = 0
    for d in reversed(digits):
        n = n * base + d
    return n


def to_rbits(n: int) -> list[int]:
    """Bits of n, least significant first; to_rbits(0) == [0]."""
    _check_natural(n)
    return [int(c) for c in bin(n)[:1:-1]]


def from_rbits(bs: Iterable[int]) -> int:
    """Evaluate a little-endian bit list."""
    return from_base(2, bs)


def to_rbits0(n: int) -> list[int]:
    """Like to_rbits, except 0 maps to the empty list."""
    return [] if n == 0 else to_rbits(n)


def to_maxbits(maxbits: int, n: int) -> list[int]:
    """Bits of n zero-padded on the high side to exactly maxbits positions."""
    bs = to_rbits(n)
    if len(bs) > maxbits:
        raise OverflowError(f"{n} needs {len(bs)} bits, limit is {maxbits}")
    return bs + [0] * (maxbits - len(bs))


def bitcount(n: int) -> int:
    """Length of to_rbits(n): the least x >= 1 with 2**x > n."""
    _check_natural(n)
    return max(1, n.bit_length())


def max_bitcount(ns: Iterable[int]) -> int:
    """Largest bitcount over ns; 0 when ns is empty."""
    return max(map(bitcount, ns), default=0)
