"""Structural checks shared by the unit and acceptance tests.

Each function returns a list of human-readable violations; empty means the
check passed.
"""

from batchfactor.intlinalg import nullspace_mod_p, rank_mod_p
from batchfactor.modpoly import pmod
from batchfactor.sieve import primes_below

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def shape_violations(rec, d, equal_degrees=True):
    out = []
    keys = [f.coeffs for f, _ in rec.factors]
    if len(set(keys)) != len(keys):
        out.append(f"p={rec.p}: repeated factor")
    if any(m != 1 for _, m in rec.factors):
        out.append(f"p={rec.p}: multiplicity above 1")
    degs = [f.degree for f, _ in rec.factors]
    if sum(degs) != d:
        out.append(f"p={rec.p}: degrees sum to {sum(degs)}, not {d}")
    if equal_degrees and len(set(degs)) > 1:
        out.append(f"p={rec.p}: unequal degrees {degs}")
    return out


def separation_violations(rec, elements):
    """Every ordered pair (f_i, f_j) of distinct factors needs some element
    divisible by f_i and not by f_j."""
    p = rec.p
    facs = [list(f.coeffs) for f, _ in rec.factors]
    r = len(facs)
    if r < 2:
        return []
    missing = {(i, j) for i in range(r) for j in range(r) if i != j}
    for e in elements:
        e = list(e.coeffs) if hasattr(e, "coeffs") else list(e)
        divides = [not pmod(e, f, p) for f in facs]
        hit = [i for i in range(r) if divides[i]]
        miss = [j for j in range(r) if not divides[j]]
        for i in hit:
            for j in miss:
                missing.discard((i, j))
        if not missing:
            return []
    return [f"p={p}: pairs {sorted(missing)[:4]} not separated"]


def span_violations(data, N):
    """The reduced fixed-ring basis of each automorphism spans the F_p kernel
    of (its action - identity), for every good p < N."""
    out = []
    d = data.degree
    bad = data.delta * d
    for p in primes_below(N):
        if bad % p == 0:
            continue
        dinv = pow(data.delta, -1, p)
        for s, (M, B) in enumerate(zip(data.matrices, data.bases)):
            A = [[(M[i][j] * dinv - (i == j)) % p for j in range(d)] for i in range(d)]
            kernel = nullspace_mod_p(A, p)
            red = [[(u[i] if i < len(u) else 0) % p for i in range(d)] for u in B]
            for v in red:
                if any(sum(A[i][j] * v[j] for j in range(d)) % p for i in range(d)):
                    out.append(f"p={p} sigma={s}: basis vector outside kernel")
            if (rank_mod_p(red, p) if red else 0) != len(kernel):
                out.append(f"p={p} sigma={s}: rank {rank_mod_p(red, p)} != {len(kernel)}")
    return out
