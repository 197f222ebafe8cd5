"""Factorisation of a Galois polynomial modulo every prime below N.

For a good prime p (not dividing ``delta * d``) the elements ``u - a`` with
``a`` a root of ``h_{sigma,u}`` mod p form a separating set, and splitting
``f mod p`` by gcds with them yields its complete factorisation. The
remaining primes go through :func:`modpoly.fallback_factor`.
"""

from dataclasses import dataclass, field

from . import bigpoly as bp
from .batchroots import ALL, DEFAULT_BLOCK, batch_roots
from .galoisdata import compute_global_data
from .modpoly import (
    ModPoly,
    fallback_factor,
    make_factorization,
    pexact_div,
    pgcd,
    pmod,
    pmonic,
)
from .sieve import primes_below


@dataclass
class SeparatingSet:
    """Candidate separators for one prime.

    ``sources[i] = (sigma, u, a)`` records where ``elements[i] = u - a`` came
    from.
    """

    p: int
    elements: list = field(default_factory=list)
    sources: list = field(default_factory=list)

    def __len__(self):
        return len(self.elements)


def good_primes(f, N, delta=None, primes=None):
    """``(good, exceptional, reductions)`` for the primes below ``N``.

    A prime is exceptional when it divides ``delta * deg f``.
    """
    f = bp.trim(f)
    if delta is None:
        delta = bp.discriminant(f)
    if delta == 0:
        raise ValueError("discriminant is zero")
    if primes is None:
        primes = primes_below(N)
    bad = delta * (len(f) - 1)
    good, exceptional = [], []
    for p in primes:
        (exceptional if bad % p == 0 else good).append(p)
    reductions = {p: ModPoly.from_ints(f, p) for p in primes}
    return good, exceptional, reductions


def separating_sets(data, N, good=None, block_size=DEFAULT_BLOCK, workers=1):
    """``{p: SeparatingSet}`` for the good primes below ``N``."""
    primes = primes_below(N)
    if good is None:
        good = good_primes(data.f, N, data.delta, primes)[0]
    out = {p: SeparatingSet(p) for p in good}
    seen = {p: set() for p in good}
    for entry in data.seps:
        table = batch_roots(entry.h, N, block_size=block_size, workers=workers, primes=primes)
        for p in good:
            roots = table[p]
            if roots is ALL:
                raise ArithmeticError("separating resultant vanishes identically mod p")
            if not roots:
                continue
            S = out[p]
            for a in roots:
                elem = bp.sub(entry.u, [a])
                coeffs = tuple(c % p for c in bp.trim(elem))
                while coeffs and coeffs[-1] == 0:
                    coeffs = coeffs[:-1]
                if coeffs in seen[p]:
                    continue
                seen[p].add(coeffs)
                S.elements.append(ModPoly(p, coeffs))
                S.sources.append((entry.sigma, entry.u, a))
    return out


def _refine_parts(fbar, elements, p):
    parts = [pmonic(list(fbar), p)]
    for g in elements:
        if all(len(q) <= 2 for q in parts):
            break
        nxt = []
        for q in parts:
            if len(q) <= 2:
                nxt.append(q)
                continue
            c = pgcd(q, pmod(g, q, p), p)
            if 1 < len(c) < len(q):
                nxt.append(c)
                nxt.append(pexact_div(q, c, p))
            else:
                nxt.append(q)
        parts = nxt
    return parts


def refine_factorization(fbar, S):
    """Split ``fbar`` by gcds with the elements of ``S``.

    For a good prime and a separating ``S`` the parts are exactly the
    irreducible factors of ``fbar``.
    """
    p = fbar.p
    elements = [list(g.coeffs) for g in (S.elements if isinstance(S, SeparatingSet) else S)]
    parts = _refine_parts(list(fbar.coeffs), elements, p)
    return make_factorization(p, [(q, 1) for q in parts], fbar.lc())


def galois_records(data, N, block_size=DEFAULT_BLOCK, workers=1, with_sets=False):
    """Factorisations of ``f mod p`` for the good primes only.

    Returns ``{p: ModFactorization}`` and, if ``with_sets``, also the
    separating sets.
    """
    good, _, reductions = good_primes(data.f, N, data.delta)
    sets = separating_sets(data, N, good, block_size, workers)
    records = {p: refine_factorization(reductions[p], sets[p]) for p in good}
    return (records, sets) if with_sets else records


def galois_factor_batch(f, N, block_size=DEFAULT_BLOCK, workers=1, data=None):
    """Yield the factorisation of ``f mod p`` for every prime ``p < N`` in
    ascending order; ``f`` must be monic, irreducible and Galois."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if data is None:
        data = compute_global_data(f)
    good, exceptional, reductions = good_primes(data.f, N, data.delta)
    records = galois_records(data, N, block_size, workers)
    for p in primes_below(N):
        if p in records:
            yield records[p]
        else:
            yield fallback_factor(reductions[p])
