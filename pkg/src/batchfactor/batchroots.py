"""Roots of an integer polynomial modulo every prime below a bound.

``batch_roots(h, N)`` evaluates ``h`` on ``0..N-1``, finds which primes divide
each nonzero value with :func:`prodtree.batch_divisors`, and regroups the
``(a, p)`` incidences by prime keeping only ``a < p``.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from gmpy2 import mpz

from .bigpoly import content, trim
from .prodtree import ProductTree, batch_divisors
from .sieve import primes_below

DEFAULT_BLOCK = 1 << 20


class _AllResidues:
    """Marker for primes dividing every coefficient of h."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"


ALL = _AllResidues()


@dataclass
class RootsTable:
    bound: int
    table: dict = field(default_factory=dict)

    def __getitem__(self, p):
        return self.table[p]

    def __contains__(self, p):
        return p in self.table

    def primes(self):
        return sorted(self.table)

    def is_all(self, p):
        return self.table[p] is ALL

    def items(self):
        for p in sorted(self.table):
            yield p, self.table[p]

    def as_dict(self):
        """``{p: set of roots}`` with ``ALL`` kept as is."""
        return {p: (r if r is ALL else set(r)) for p, r in self.items()}

    def json_lines(self):
        for p, r in self.items():
            if r is ALL:
                yield {"p": p, "all": True}
            else:
                yield {"p": p, "roots": list(r)}


def _eval_block(h, start, stop):
    coeffs = [mpz(c) for c in reversed(h)]
    out = []
    for a in range(start, stop):
        acc = mpz(0)
        for c in coeffs:
            acc = acc * a + c
        out.append(acc)
    return out


def eval_range(h, N):
    """``[h(0), h(1), ..., h(N-1)]`` as Python ints."""
    if N < 1:
        raise ValueError("eval_range needs N >= 1")
    return [int(v) for v in _eval_block(trim(h), 0, N)]


def _block_divisors(h, start, stop, primes):
    """Per-position prime lists for ``a`` in ``[start, stop)``.

    Returns ``(per_a, zeros)``; positions where ``h(a) = 0`` get an empty list
    in ``per_a`` and are reported in ``zeros`` instead.
    """
    vals = _eval_block(h, start, stop)
    zeros = [start + i for i, v in enumerate(vals) if v == 0]
    idx = [i for i, v in enumerate(vals) if v != 0]
    per_a = [[] for _ in vals]
    if idx and primes:
        tree = ProductTree([vals[i] for i in idx])
        for i, ps in zip(idx, batch_divisors(tree, primes)):
            per_a[i] = ps
    return per_a, zeros


def transpose_index(per_a, start=0):
    """Regroup ``per_a[i]`` (primes dividing ``h(start + i)``) by prime.

    Returns ``{p: [a, ...]}`` with ascending ``a`` and only ``a < p``.
    """
    out = {}
    for i, ps in enumerate(per_a):
        a = start + i
        for p in ps:
            if a < p:
                out.setdefault(p, []).append(a)
    return out


def batch_roots(h, N, block_size=DEFAULT_BLOCK, workers=1, primes=None):
    """Compute ``Z_p(h) = {0 <= a < p : h(a) = 0 mod p}`` for every prime ``p < N``.

    Primes dividing every coefficient of ``h`` map to :data:`ALL`.
    """
    h = trim(h)
    if not h:
        raise ValueError("batch_roots of the zero polynomial")
    if N < 2:
        raise ValueError("batch_roots needs N >= 2")
    if block_size < 1:
        raise ValueError("block_size must be positive")
    if primes is None:
        primes = primes_below(N)
    c = content(h)
    every = {p for p in primes if c % p == 0}
    searched = [p for p in primes if p not in every]

    jobs = []
    for start in range(0, N, block_size):
        stop = min(start + block_size, N)
        cands = [p for p in searched if p > start]
        jobs.append((start, stop, cands))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_block_divisors, [h] * len(jobs), *zip(*[(s, e, c) for s, e, c in jobs]))
            )
    else:
        results = [_block_divisors(h, s, e, cands) for s, e, cands in jobs]

    grouped = {p: [] for p in searched}
    zeros = []
    for (start, _, _), (per_a, z) in zip(jobs, results):
        zeros.extend(z)
        for p, roots in transpose_index(per_a, start).items():
            grouped[p].extend(roots)
    for a in zeros:
        for p in searched:
            if a < p:
                grouped[p].append(a)
    table = {}
    for p in primes:
        table[p] = ALL if p in every else tuple(sorted(grouped[p]))
    return RootsTable(N, table)
