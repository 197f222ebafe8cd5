"""Segmented sieve of Eratosthenes."""

from math import isqrt

DEFAULT_SEGMENT = 1 << 18


def _simple_sieve(limit):
    """Primes <= limit by a plain bytearray sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for q in range(2, isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = bytes(len(range(q * q, limit + 1, q)))
    return [i for i, v in enumerate(flags) if v]


def primes_below(N, segment_size=DEFAULT_SEGMENT):
    """Return the increasing list of all primes p < N.

    The range [2, N) is sieved in windows of ``segment_size`` integers using
    the base primes up to sqrt(N).
    """
    if N < 2:
        raise ValueError(f"primes_below needs N >= 2, got {N}")
    if segment_size < 1:
        raise ValueError("segment_size must be positive")
    base = _simple_sieve(isqrt(N - 1))
    out = []
    lo = 2
    while lo < N:
        hi = min(lo + segment_size, N)
        seg = bytearray([1]) * (hi - lo)
        for q in base:
            qq = q * q
            if qq >= hi:
                break
            start = max(qq, -(-lo // q) * q)
            if start < hi:
                seg[start - lo :: q] = bytes(len(range(start, hi, q)))
        out.extend(lo + i for i, v in enumerate(seg) if v)
        lo = hi
    return out
