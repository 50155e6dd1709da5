import random

import pytest

from hfcodec.natbits import (
    DigitList,
    bitcount,
    from_base,
    from_rbits,
    max_bitcount,
    to_base,
    to_maxbits,
    to_rbits,
    to_rbits0,
)


def digits_oracle(base: int, n: int) -> list[int]:
    # independent long division; always emits at least one digit
    out = []
    while True:
        out.append(n % base)
        n //= base
        if n == 0:
            return out


@pytest.mark.parametrize("base,n,digits", [
    (2, 42, [0, 1, 0, 1, 0, 1]),
    (2, 2008, [0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1]),
    (8, 2008, [0, 3, 7, 3]),
    (2, 0, [0]),
    (10, 0, [0]),
    (10, 9, [9]),
    (16, 255, [15, 15]),
])
def test_to_base_golden(base, n, digits):
    ds = to_base(base, n)
    assert list(ds) == digits
    assert ds.base == base
    assert from_base(base, ds) == n


def test_from_base_golden():
    assert from_base(32, [25, 20]) == 665
    assert from_base(2, [0, 1, 0, 1, 0, 1]) == 42


def test_to_base_matches_stdlib_renderings():
    for n in (0, 1, 7, 42, 2008, 123456789):
        assert "".join(map(str, reversed(to_base(8, n).digits))) == oct(n)[2:]
        assert "".join(map(str, reversed(to_base(2, n).digits))) == bin(n)[2:]


def test_base_round_trip_exhaustive_and_random():
    rng = random.Random(13)
    ns = list(range(2001)) + [rng.getrandbits(256) for _ in range(50)]
    for base in (2, 3, 8, 16, 32, 1000):
        for n in ns:
            ds = to_base(base, n)
            assert list(ds) == digits_oracle(base, n)
            assert from_base(base, ds) == n
            if n:
                assert ds.digits[-1] != 0


def test_digit_list_validates():
    with pytest.raises(ValueError):
        DigitList(1, (0,))
    with pytest.raises(ValueError):
        DigitList(2, (0, 2))
    with pytest.raises(ValueError):
        DigitList(10, (-1,))


def test_from_base_rejects_mixed_bases():
    ds = to_base(8, 2008)
    with pytest.raises(ValueError, match="carries base 8"):
        from_base(10, ds)


def test_from_base_rejects_bad_digits():
    with pytest.raises(ValueError):
        from_base(2, [0, 1, 2])
    with pytest.raises(ValueError):
        from_base(2, [-1])


@pytest.mark.parametrize("bad", [-1, -42])
def test_negative_inputs_rejected(bad):
    with pytest.raises(ValueError):
        to_base(2, bad)
    with pytest.raises(ValueError):
        to_rbits(bad)
    with pytest.raises(ValueError):
        bitcount(bad)


def test_invalid_base_rejected():
    for base in (-2, 0, 1):
        with pytest.raises(ValueError):
            to_base(base, 5)
        with pytest.raises(ValueError):
            from_base(base, [0])


def test_rbits_round_trip():
    for n in range(3000):
        bs = to_rbits(n)
        assert from_rbits(bs) == n
        assert set(bs) <= {0, 1}
    assert to_rbits(0) == [0]
    assert to_rbits0(0) == []
    assert to_rbits0(6) == to_rbits(6) == [0, 1, 1]


@pytest.mark.parametrize("k,n,padded", [
    (2, 0, [0, 0]),
    (2, 1, [1, 0]),
    (2, 3, [1, 1]),
    (5, 6, [0, 1, 1, 0, 0]),
])
def test_to_maxbits_golden(k, n, padded):
    assert to_maxbits(k, n) == padded


def test_to_maxbits_round_trip():
    for n in range(2000):
        for extra in (0, 1, 7):
            k = bitcount(n) + extra
            bs = to_maxbits(k, n)
            assert len(bs) == k
            assert from_rbits(bs) == n


def test_to_maxbits_overflow():
    with pytest.raises(OverflowError):
        to_maxbits(2, 4)
    with pytest.raises(OverflowError):
        to_maxbits(0, 0)  # even zero needs one position


def test_bitcount_against_search():
    for n in range(10_001):
        x = 1
        while (1 << x) <= n:
            x += 1
        assert bitcount(n) == x


def test_bitcount_edges():
    assert bitcount(0) == 1
    assert bitcount(4) == 3
    for k in range(64):
        assert bitcount(1 << k) == k + 1
    # bitcount length agrees with the canonical expansion
    for n in range(500):
        assert bitcount(n) == len(to_rbits(n))


def test_max_bitcount():
    assert max_bitcount([]) == 0
    assert max_bitcount([0]) == 1
    assert max_bitcount([1, 0, 2, 1, 3]) == 2
    assert max_bitcount([255, 3]) == 8
