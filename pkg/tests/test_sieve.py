import pytest

from batchfactor.sieve import primes_below


def trial_division_prime(n):
    if n < 2:
        return False
    q = 2
    while q * q <= n:
        if n % q == 0:
            return False
        q += 1
    return True


def plain_sieve(N):
    flags = bytearray([1]) * N
    flags[:2] = b"\x00\x00"
    for i in range(2, int(N**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(N) if flags[i]]


def test_small_examples():
    assert primes_below(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_below(2) == []
    assert primes_below(3) == [2]


def test_count_below_a_million():
    primes = primes_below(10**6)
    assert len(primes) == 78498
    assert primes == plain_sieve(10**6)


@pytest.mark.parametrize("segment", [64, 1000, 1 << 18])
def test_full_audit(segment):
    N = 10**5
    primes = primes_below(N, segment_size=segment)
    assert primes == [n for n in range(N) if trial_division_prime(n)]


def test_rejects_small_bound():
    with pytest.raises(ValueError):
        primes_below(1)
