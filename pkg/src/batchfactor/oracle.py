"""Brute-force reference answers for tests and ``verify``.

These are deliberately simple: direct evaluation, trial remainders and
exhaustive trial division. ``reference_factor`` switches to sympy's finite
field factoriser once exhaustive search would be too slow.
"""

from itertools import product

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from .modpoly import ModFactorization, ModPoly, make_factorization, pdivmod, pmonic

NAIVE_GUARD = 10**7
# below this p^ceil(d/2) the exhaustive search is fast enough for bulk checks
EXHAUSTIVE_LIMIT = 2 * 10**4


class OracleGuardError(ValueError):
    pass


def naive_roots(h, p):
    """``{a in [0, p) : h(a) = 0 mod p}`` by evaluating every residue.

    An empty coefficient list is rejected; an explicit constant ``[0]``
    vanishes everywhere and returns every residue.
    """
    h = list(h)
    if not h:
        raise ValueError("naive_roots needs at least one coefficient")
    while h and h[-1] == 0:
        h.pop()
    if not h:
        return list(range(p))
    out = []
    for a in range(p):
        acc = 0
        for c in reversed(h):
            acc = (acc * a + c) % p
        if acc == 0:
            out.append(a)
    return out


def naive_pair_divisors(values, primes):
    if any(v == 0 for v in values):
        raise ValueError("values must be nonzero")
    return [[p for p in primes if v % p == 0] for v in values]


def _monic_candidates(k, p):
    """Monic polynomials of degree ``k`` in canonical order."""
    for tail in product(range(p), repeat=k):
        yield list(tail) + [1]


def naive_factor(f, guard=NAIVE_GUARD):
    """Factor ``f`` over F_p by trial division with every monic polynomial of
    degree up to ``deg f / 2``."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p, d = f.p, f.degree
    if p ** ((d + 1) // 2) > guard:
        raise OracleGuardError(f"p^ceil(d/2) = {p}^{(d + 1) // 2} exceeds {guard}")
    unit = f.lc()
    rest = pmonic(list(f.coeffs), p)
    pairs = []
    k = 1
    while 2 * k <= len(rest) - 1:
        for cand in _monic_candidates(k, p):
            m = 0
            while True:
                q, r = pdivmod(rest, cand, p)
                if r:
                    break
                rest = q
                m += 1
            if m:
                pairs.append((cand, m))
            if 2 * k > len(rest) - 1:
                break
        k += 1
    if len(rest) > 1:
        pairs.append((rest, 1))
    return make_factorization(p, pairs, unit)


def sympy_factor(f):
    """Factorisation of ``f`` over F_p by sympy's finite field routines."""
    p = f.p
    unit, facs = gf_factor([int(c) for c in reversed(f.coeffs)], p, ZZ)
    pairs = [([int(c) for c in reversed(g)], m) for g, m in facs]
    return make_factorization(p, pairs, int(unit))


def reference_factor(f, exhaustive_limit=EXHAUSTIVE_LIMIT):
    """Ground truth used by the acceptance run: exhaustive trial division when
    it is cheap, sympy otherwise."""
    if f.p ** ((f.degree + 1) // 2) <= exhaustive_limit:
        return naive_factor(f)
    return sympy_factor(f)


def factor_int_poly(f, p, exhaustive_limit=EXHAUSTIVE_LIMIT):
    return reference_factor(ModPoly.from_ints(f, p), exhaustive_limit)


__all__ = [
    "ModFactorization",
    "OracleGuardError",
    "factor_int_poly",
    "naive_factor",
    "naive_pair_divisors",
    "naive_roots",
    "reference_factor",
    "sympy_factor",
]
