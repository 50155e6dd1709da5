"""Finite sets and finite functions as naturals.

A finite set of naturals is encoded by the Ackermann rule n = sum of 2**e
over its elements, so nat2set just reads off bit positions.  A finite
function [v0..vk] (a tuple of naturals) rides on top of that: its values
are turned into the gaps of a strictly increasing sequence by fun2set.
The run-length pair bits2rle/rle2bits gives a second, self-delimiting
function view of the same bits.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Sequence

from .natbits import _check_natural, from_rbits, to_rbits0


def _check_increasing(s: Sequence[int]) -> None:
    prev = -1
    for e in s:
        if e <= prev:
            raise ValueError(f"set elements must be strictly increasing, got {list(s)}")
        prev = e


def set2nat(s: Sequence[int]) -> int:
    """Sum of 2**e over a strictly increasing sequence of naturals."""
    _check_increasing(s)
    if s and s[0] < 0:
        raise ValueError(f"set elements must be naturals, got {list(s)}")
    return _set2nat(s)


def _set2nat(s: Iterable[int]) -> int:
    return sum(1 << e for e in s)


def nat2set(n: int) -> list[int]:
    """Positions of the set bits of n, in increasing order."""
    _check_natural(n)
    out = []
    while n:
        low = n & -n
        out.append(low.bit_length() - 1)
        n ^= low
    return out


def fun2set(f: Sequence[int]) -> list[int]:
    """Running totals of the values, each bumped by one; strictly increasing."""
    out, acc = [], -1
    for v in f:
        _check_natural(v)
        acc += v + 1
        out.append(acc)
    return out


def set2fun(s: Sequence[int]) -> list[int]:
    """Gaps between consecutive elements, minus one; inverse of fun2set."""
    _check_increasing(s)
    if s and s[0] < 0:
        raise ValueError(f"set elements must be naturals, got {list(s)}")
    return _set2fun(s)


def _set2fun(s: Sequence[int]) -> list[int]:
    out, prev = [], -1
    for e in s:
        out.append(e - prev - 1)
        prev = e
    return out


def fun2nat(f: Sequence[int]) -> int:
    """Encode a tuple of naturals of any length; [] maps to 0."""
    return _set2nat(fun2set(f))


def nat2fun(n: int) -> list[int]:
    """Decode a tuple of naturals; inverse of fun2nat."""
    return _set2fun(nat2set(n))


def bits2rle(bs: Sequence[int]) -> list[int]:
    """Length minus one of each run of equal consecutive bits.

    Round-trips with rle2bits only on canonical bit lists, i.e. those
    ending in 1 (or empty), which is what to_rbits0 produces.
    """
    return [sum(1 for _ in g) - 1 for _, g in groupby(bs)]


def rle2bits(rs: Sequence[int]) -> list[int]:
    """Rebuild the bit list: the final run is ones and runs alternate."""
    k = len(rs)
    out = []
    for i, c in enumerate(rs):
        _check_natural(c)
        out.extend([1 - ((k - 1 - i) & 1)] * (c + 1))
    return out


def nat2rle(n: int) -> list[int]:
    """Run lengths (minus one) of n's bits; nat2rle(0) == []."""
    return bits2rle(to_rbits0(n))


def rle2nat(rs: Sequence[int]) -> int:
    """Evaluate run lengths back to a natural; total on any list of naturals."""
    return from_rbits(rle2bits(rs))
