"""Factoradics, Lehmer codes, and a bijection Nat <-> finite permutations.

A natural splits into factoradic digits with weights 0!, 1!, 2!, ...; a
permutation of size k splits into its Lehmer code, whose digit i counts
the later entries smaller than entry i.  The two meet in nth2perm, which
reads a lexicographic rank below k! straight into a permutation.  Sizes
are chained by sf(k) = 0! + ... + (k-1)!, giving a single numbering of
all finite permutations in order of size.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from .natbits import _check_natural


def fr(n: int) -> list[int]:
    """Factoradic digits of n, least significant first; fr(0) == [0].

    Digit i is at most i, so the first digit is always 0.
    """
    _check_natural(n)
    if n == 0:
        return [0]
    digits, j = [], 1
    while n:
        n, d = divmod(n, j)
        digits.append(d)
        j += 1
    return digits


def rf(ds: Sequence[int]) -> int:
    """Evaluate digits against the weights 0!, 1!, 2!, ...; inverse of fr."""
    total, w = 0, 1
    for i, d in enumerate(ds):
        _check_natural(d)
        if i:
            w *= i
        total += d * w
    return total


def fl(n: int) -> list[int]:
    """Factoradic digits of n, most significant first."""
    return fr(n)[::-1]


def lf(ds: Sequence[int]) -> int:
    """Evaluate most-significant-first factoradic digits; inverse of fl."""
    return rf(list(ds)[::-1])


def _check_perm(ps: Sequence[int]) -> None:
    seen = [False] * len(ps)
    for v in ps:
        if not isinstance(v, int) or not 0 <= v < len(ps) or seen[v]:
            raise ValueError(f"not a permutation of 0..{len(ps) - 1}: {list(ps)}")
        seen[v] = True


def perm2lehmer(ps: Sequence[int]) -> list[int]:
    """Lehmer code: digit i counts later entries smaller than entry i."""
    _check_perm(ps)
    pool = list(range(len(ps)))
    out = []
    for v in ps:
        # index of v among the still-unused values == later smaller entries
        i = bisect_left(pool, v)
        out.append(i)
        pool.pop(i)
    return out


def lehmer2perm(ls: Sequence[int]) -> list[int]:
    """Rebuild a permutation by picking the ls[i]-th smallest unused value."""
    pool = list(range(len(ls)))
    out = []
    for i, d in enumerate(ls):
        if not 0 <= d < len(pool):
            raise ValueError(
                f"Lehmer digit {d} at position {i} out of range for size {len(ls)}"
            )
        out.append(pool.pop(d))
    return out


def nth2perm(size_rank: tuple[int, int]) -> list[int]:
    """Permutation of the given size at the given lexicographic rank.

    Valid whenever rank < size!, including (0, 0) -> [].
    """
    size, rank = size_rank
    _check_natural(rank)
    ds = fl(rank) if rank else []  # rank 0 pads to all-zero Lehmer digits
    if len(ds) > size:
        raise OverflowError(f"rank {rank} does not fit a size-{size} permutation")
    return lehmer2perm([0] * (size - len(ds)) + ds)


def perm2nth(ps: Sequence[int]) -> tuple[int, int]:
    """Size and lexicographic rank of a permutation; inverse of nth2perm."""
    ls = perm2lehmer(ps)
    return len(ls), lf(ls)


def sf(n: int) -> int:
    """Sum of factorials 0! + 1! + ... + (n-1)!; the code of the size-n identity."""
    _check_natural(n)
    total, w = 0, 1
    for i in range(n):
        total += w
        w *= i + 1
    return total


def to_sf(n: int) -> tuple[int, int]:
    """Split n >= 1 into (k, n - sf(k)) for the largest k with sf(k) <= n.

    The remainder is below k!, so it is a valid rank for a size-k
    permutation.
    """
    _check_natural(n)
    k, s, w = 0, 0, 1  # s == sf(k), w == k!
    while s + w <= n:
        s += w
        w *= k + 1
        k += 1
    return k, n - s


def nat2perm(n: int) -> list[int]:
    """The n-th finite permutation, ordered by size then lexicographically."""
    _check_natural(n)
    if n == 0:
        return []
    return nth2perm(to_sf(n))


def perm2nat(ps: Sequence[int]) -> int:
    """Position of a permutation in the size-then-lex ordering; inverse of nat2perm."""
    size, rank = perm2nth(ps)
    return sf(size) + rank
