"""Factorisation of an arbitrary monic polynomial modulo every prime below N.

The splitting field ``Q(beta) = Q[y]/<g>`` of ``f`` is Galois, so ``g`` is
factored mod every prime by the Galois pipeline. For a good prime, with
``g0`` the first irreducible factor of ``g mod p``, the roots ``h_i(beta)``
of ``f`` reduce into the field ``F_p[y]/<g0>``; grouping them into orbits of
the p-th power map gives the irreducible factors of ``f mod p``.
"""

from fractions import Fraction

from . import bigpoly as bp
from .batchroots import DEFAULT_BLOCK
from .galoisdata import NotGaloisError, automorphisms_from_splitting, compute_global_data
from .galoisfactor import galois_factor_batch, galois_records
from .modpoly import (
    ModPoly,
    fallback_factor,
    make_factorization,
    pmod,
    pmul,
    pmulmod,
    ppowmod,
    psub,
)
from .numfield import factor_over_Z, splitting_field
from .sieve import primes_below


def frobenius_orbits(hs, p, g0):
    """Irreducible factors of ``prod (x - h_i)`` over F_p.

    ``hs`` are elements of ``F_p[y]/<g0>`` (ModPolys reduced mod ``g0``).
    Each orbit of the p-th power map contributes the product of its linear
    factors, which must have coefficients in F_p.
    """
    mod = list(g0.coeffs)
    keys = [tuple(h.coeffs) for h in hs]
    index = {}
    for i, k in enumerate(keys):
        if k in index:
            raise ValueError("roots must be distinct in the residue field")
        index[k] = i
    seen = [False] * len(hs)
    out = []
    for i in range(len(hs)):
        if seen[i]:
            continue
        orbit = [i]
        seen[i] = True
        cur = list(keys[i])
        while True:
            cur = ppowmod(cur, p, mod, p)
            j = index.get(tuple(cur))
            if j is None:
                raise ArithmeticError("p-th power of a root is not a root")
            if j == i:
                break
            if seen[j] or len(orbit) >= g0.degree:
                raise ArithmeticError("orbit does not close within deg g0 steps")
            seen[j] = True
            orbit.append(j)
        # product of (x - h_j) with coefficients in F_p[y]/<g0>
        prod = [[1]]
        for j in orbit:
            neg = psub([], list(keys[j]), p)
            nxt = [[] for _ in range(len(prod) + 1)]
            for k, c in enumerate(prod):
                nxt[k + 1] = _radd(nxt[k + 1], c, p)
                nxt[k] = _radd(nxt[k], pmulmod(c, neg, mod, p), p)
            prod = nxt
        coeffs = []
        for c in prod:
            if len(c) > 1:
                raise ArithmeticError("orbit product has coefficients outside F_p")
            coeffs.append(c[0] if c else 0)
        out.append((ModPoly(p, tuple(coeffs)), 1))
    out.sort(key=lambda fm: (len(fm[0].coeffs), fm[0].coeffs))
    return out


def _radd(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _reduce_rat(h, p):
    """Reduce a rational polynomial mod p, or None if a denominator vanishes."""
    out = []
    for c in h:
        c = Fraction(c)
        if c.denominator % p == 0:
            return None
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    while out and out[-1] == 0:
        out.pop()
    return out


def _check_irreducible(f):
    f = bp.trim(f)
    if len(f) < 3 or f[-1] != 1:
        raise ValueError("need a monic polynomial of degree >= 2")
    facs = factor_over_Z(f)
    if len(facs) != 1 or facs[0][1] != 1:
        raise ValueError("polynomial is reducible")
    return f


class GeneralPipeline:
    """Global data for the general case, computed once per ``f``."""

    def __init__(self, f):
        self.f = _check_irreducible(f)
        self.d = len(self.f) - 1
        self.split = splitting_field(self.f)
        self.g = self.split.g
        self.m = len(self.g) - 1
        roots = automorphisms_from_splitting(self.split)
        self.data = compute_global_data(self.g, roots)
        self.delta_f = bp.discriminant(self.f)
        dens = 1
        for h in self.split.hs:
            for c in h:
                dens = dens * Fraction(c).denominator
        self.bad = self.delta_f * self.d * self.data.delta * self.m * dens

    def records(self, N, block_size=DEFAULT_BLOCK, workers=1, g0_out=None, sets_out=None, g_out=None):
        """Yield one record per prime below ``N``.

        ``g0_out``, ``sets_out`` and ``g_out``, when given, collect the chosen
        factor of ``g mod p``, the separating sets used for ``g`` and the
        factorisations of ``g`` at its good primes.
        """
        if N < 2:
            raise ValueError("N must be at least 2")
        g_records, sets = galois_records(self.data, N, block_size, workers, with_sets=True)
        if sets_out is not None:
            sets_out.update(sets)
        if g_out is not None:
            g_out.update(g_records)
        for p in primes_below(N):
            fbar = ModPoly.from_ints(self.f, p)
            if self.bad % p or p not in g_records:
                rec = None
            else:
                rec = self._record(p, g_records[p])
            if rec is None:
                rec = fallback_factor(fbar)
            elif g0_out is not None:
                g0_out[p] = g_records[p].factors[0][0]
            yield rec

    def _record(self, p, g_record):
        g0 = g_record.factors[0][0]
        mod = list(g0.coeffs)
        hs = []
        for h in self.split.hs:
            red = _reduce_rat(h, p)
            if red is None:
                return None
            hs.append(ModPoly(p, tuple(pmod(red, mod, p))))
        pairs = [(list(fac.coeffs), m) for fac, m in frobenius_orbits(hs, p, g0)]
        return make_factorization(p, pairs, 1)


def general_factor_batch(f, N, block_size=DEFAULT_BLOCK, workers=1):
    """Yield the factorisation of ``f mod p`` for every prime ``p < N``;
    ``f`` monic irreducible of degree at least 2."""
    return GeneralPipeline(f).records(N, block_size, workers)


def _linear_records(F, primes):
    for p in primes:
        yield make_factorization(p, [(ModPoly.from_ints(F, p).coeffs, 1)], 1)


def _pipeline_for(F, N, block_size, workers):
    if len(F) == 2:
        return _linear_records(F, primes_below(N))
    try:
        return galois_factor_batch(F, N, block_size, workers, data=compute_global_data(F))
    except NotGaloisError:
        return general_factor_batch(F, N, block_size, workers)


def factor_entry(f, N, block_size=DEFAULT_BLOCK, workers=1):
    """Yield the factorisation of a monic ``f`` of degree at least 1 modulo
    every prime below ``N``, factoring over Z first."""
    f = bp.trim(f)
    if not f or f[-1] != 1:
        raise ValueError("only monic polynomials are supported")
    if len(f) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    if N < 2:
        raise ValueError("N must be at least 2")
    facs = factor_over_Z(f)
    if len(facs) == 1 and facs[0][1] == 1 and len(f) > 2:
        yield from general_factor_batch(f, N, block_size, workers)
        return
    primes = primes_below(N)
    bad = 1
    for i, (F, _) in enumerate(facs):
        if len(F) > 2:
            bad *= bp.discriminant(F)
        for G, _ in facs[i + 1 :]:
            bad *= bp.resultant(F, G)
    streams = [(_pipeline_for(F, N, block_size, workers), m) for F, m in facs]
    for p in primes:
        recs = [(next(s), m) for s, m in streams]
        if bad % p == 0:
            yield fallback_factor(ModPoly.from_ints(f, p))
            continue
        pairs = [(fac.coeffs, k * m) for rec, m in recs for fac, k in rec.factors]
        yield make_factorization(p, pairs, 1)
