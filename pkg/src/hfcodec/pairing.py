"""Pairing bijections Nat x Nat <-> Nat and round-robin k-tupling.

Three pairings with different growth profiles:

* cantor  - walks anti-diagonals, polynomial in both arguments
* pepis   - 2^x * (2y+1) - 1, exponential in x and linear in y
* bitmerge - interleaves the two bit strings, balanced in both

``to_tuple``/``from_tuple`` generalize bitmerge to a fixed arity k by
dealing the bits of n round-robin into k streams, and ``ftuple2nat``/
``nat2ftuple`` extend that to tuples of arbitrary length by folding the
length into a pepis pair.
"""

from __future__ import annotations

from math import isqrt
from typing import Sequence

from .natbits import _check_natural


def cantor_pair(x: int, y: int) -> int:
    """Anti-diagonal pairing (x+y)(x+y+1)/2 + y."""
    _check_natural(x)
    _check_natural(y)
    return (x + y) * (x + y + 1) // 2 + y


def cantor_unpair(z: int) -> tuple[int, int]:
    """Invert cantor_pair via the exact integer triangular root."""
    _check_natural(z)
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def pepis_pair(x: int, y: int) -> int:
    """2^x * (2y+1) - 1; x lands in the trailing ones of the result plus one."""
    _check_natural(x)
    _check_natural(y)
    return ((2 * y + 1) << x) - 1


def pepis_unpair(n: int) -> tuple[int, int]:
    """Invert pepis_pair: the first component is the dyadic valuation of n+1."""
    _check_natural(n)
    m = n + 1
    a = _dyadic_valuation(m)
    return a, ((m >> a) - 1) // 2


def _dyadic_valuation(m: int) -> int:
    # exponent of the largest power of 2 dividing m; m must be > 0
    return (m & -m).bit_length() - 1


def bitmerge_pair(p: tuple[int, int]) -> int:
    """Interleave two bit strings: first on even positions, second on odd."""
    x, y = p
    _check_natural(x)
    _check_natural(y)
    out = 0
    for n, offset in ((x, 0), (y, 1)):
        while n:
            low = n & -n
            out |= 1 << (2 * (low.bit_length() - 1) + offset)
            n ^= low
    return out


def bitmerge_unpair(n: int) -> tuple[int, int]:
    """Split a bit string into its even-position and odd-position halves."""
    _check_natural(n)
    x = y = 0
    while n:
        low = n & -n
        q, r = divmod(low.bit_length() - 1, 2)
        if r:
            y |= 1 << q
        else:
            x |= 1 << q
        n ^= low
    return x, y


def to_tuple(k: int, n: int) -> list[int]:
    """Deal the bits of n round-robin into k streams (a bit-matrix transpose).

    Component i collects bits i, i+k, i+2k, ... of n.  At k == 2 this is
    exactly bitmerge_unpair.
    """
    if k < 1:
        raise ValueError(f"arity must be >= 1, got {k}")
    _check_natural(n)
    out = [0] * k
    while n:
        low = n & -n
        q, r = divmod(low.bit_length() - 1, k)
        out[r] |= 1 << q
        n ^= low
    return out


def from_tuple(ns: Sequence[int]) -> int:
    """Merge len(ns) bit streams round-robin; inverse of to_tuple at that arity."""
    k = len(ns)
    if k < 1:
        raise ValueError("cannot merge an empty tuple")
    out = 0
    for i, m in enumerate(ns):
        _check_natural(m)
        while m:
            low = m & -m
            out |= 1 << ((low.bit_length() - 1) * k + i)
            m ^= low
    return out


def ftuple2nat(ns: Sequence[int]) -> int:
    """Encode a tuple of any length, folding the length in via pepis_pair.

    The empty tuple maps to 0.  [0] is rejected: its code would collide
    with the empty tuple's, and nat2ftuple never produces it.
    """
    if len(ns) == 0:
        return 0
    if len(ns) == 1 and ns[0] == 0:
        raise ValueError("[0] has no code; it would collide with the empty tuple")
    return pepis_pair(len(ns) - 1, from_tuple(ns))


def nat2ftuple(n: int) -> list[int]:
    """Decode a tuple together with its length; inverse of ftuple2nat."""
    _check_natural(n)
    if n == 0:
        return []
    k, f = pepis_unpair(n)
    return to_tuple(k + 1, f)
