"""Polynomials over F_p.

The list-level helpers (``padd``, ``pmul``, ``pgcd`` ...) work on ascending
coefficient lists already reduced into ``[0, p)`` and are what the hot loops
use. :class:`ModPoly` is the value type exchanged between modules.
"""

from dataclasses import dataclass

from .intlinalg import nullspace_mod_p


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_list(coeffs, p):
    return trim([c % p for c in coeffs])


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def pscale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return q, trim(r[:db])


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def pmonic(a, p):
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def pgcd(a, b, p):
    """Monic gcd; ``pgcd(0, 0)`` is 0."""
    a, b = list(a), list(b)
    while b:
        a, b = b, pmod(a, b, p)
    return pmonic(a, p)


def pexact_div(a, b, p):
    q, r = pdivmod(a, b, p)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def pderiv(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def pmulmod(a, b, m, p):
    return pmod(pmul(a, b, p), m, p)


def ppowmod(base, e, m, p):
    """``base**e mod m`` by binary exponentiation; ``m`` of degree >= 1."""
    result = [1]
    b = pmod(base, m, p)
    while e:
        if e & 1:
            result = pmulmod(result, b, m, p)
        e >>= 1
        if e:
            b = pmulmod(b, b, m, p)
    return pmod(result, m, p)


def peval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def canonical_key(coeffs):
    """Sort key for factors: degree first, then ascending coefficients."""
    return (len(coeffs), tuple(coeffs))


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p with explicit modulus.

    ``coeffs`` is ascending, reduced into ``[0, p)``, with no trailing zeros.
    """

    p: int
    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("ModPoly coefficients must be trimmed")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("ModPoly coefficients must be reduced mod p")

    @classmethod
    def from_ints(cls, coeffs, p):
        return cls(p, tuple(reduce_list(coeffs, p)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self):
        return ModPoly(self.p, tuple(pmonic(list(self.coeffs), self.p)))

    def _check(self, other):
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        return ModPoly(self.p, tuple(padd(list(self.coeffs), list(other.coeffs), self.p)))

    def __sub__(self, other):
        self._check(other)
        return ModPoly(self.p, tuple(psub(list(self.coeffs), list(other.coeffs), self.p)))

    def __mul__(self, other):
        self._check(other)
        return ModPoly(self.p, tuple(pmul(list(self.coeffs), list(other.coeffs), self.p)))

    def __divmod__(self, other):
        self._check(other)
        q, r = pdivmod(list(self.coeffs), list(other.coeffs), self.p)
        return ModPoly(self.p, tuple(q)), ModPoly(self.p, tuple(r))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) + f" (mod {self.p})"


@dataclass(frozen=True)
class ModFactorization:
    """Complete factorisation of a polynomial over F_p.

    ``factors`` holds ``(monic irreducible ModPoly, multiplicity)`` pairs in
    canonical order; ``unit`` is the leading coefficient of the input.
    """

    p: int
    factors: tuple
    unit: int = 1

    def expand(self):
        acc = [self.unit % self.p] if self.unit % self.p else []
        for fac, m in self.factors:
            for _ in range(m):
                acc = pmul(acc, list(fac.coeffs), self.p)
        return ModPoly(self.p, tuple(acc))

    def degrees(self):
        return [fac.degree for fac, m in self.factors for _ in range(m)]

    def as_pairs(self):
        """``[(coeff tuple, multiplicity), ...]`` for comparisons."""
        return [(fac.coeffs, m) for fac, m in self.factors]

    def to_json(self):
        return {
            "p": self.p,
            "factors": [{"c": [str(c) for c in fac.coeffs], "m": m} for fac, m in self.factors],
        }


FactorRecord = ModFactorization


def make_factorization(p, pairs, unit=1):
    """Build a canonical :class:`ModFactorization` from ``(coeff list, mult)``
    pairs, merging repeated factors."""
    merged = {}
    for coeffs, m in pairs:
        key = tuple(coeffs)
        merged[key] = merged.get(key, 0) + m
    ordered = sorted(merged.items(), key=lambda kv: canonical_key(kv[0]))
    return ModFactorization(p, tuple((ModPoly(p, k), m) for k, m in ordered), unit % p)


# -- operations -------------------------------------------------------------


def mod_gcd(a, b):
    """Monic gcd of two ModPolys over the same field."""
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return ModPoly(a.p, tuple(pgcd(list(a.coeffs), list(b.coeffs), a.p)))


def powmod(base, e, modpoly):
    if e < 0:
        raise ValueError("negative exponent")
    if not modpoly.is_monic() or modpoly.degree < 1:
        raise ValueError("powmod needs a monic modulus of degree >= 1")
    if base.p != modpoly.p:
        raise ValueError("modulus mismatch")
    p = modpoly.p
    return ModPoly(p, tuple(ppowmod(list(base.coeffs), e, list(modpoly.coeffs), p)))


def _pth_root(a, p):
    # a(x) = b(x^p) over F_p, and b(x)^p = b(x^p) since c^p = c for c in F_p
    return [a[i] for i in range(0, len(a), p)]


def _sqf_list(f, p):
    """Squarefree decomposition of monic ``f`` (list form)."""
    out = []
    df = pderiv(f, p)
    if not df:
        for g, m in _sqf_list(_pth_root(f, p), p):
            out.append((g, m * p))
        return out
    c = pgcd(f, df, p)
    w = pexact_div(f, c, p)
    i = 1
    while len(w) > 1:
        y = pgcd(w, c, p)
        z = pexact_div(w, y, p)
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = pexact_div(c, y, p)
    if len(c) > 1:
        for g, m in _sqf_list(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def squarefree_decomposition(f):
    """Pairwise coprime squarefree parts ``[(ModPoly, multiplicity)]`` whose
    weighted product is ``monic(f)``."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    p = f.p
    parts = _sqf_list(pmonic(list(f.coeffs), p), p)
    parts.sort(key=lambda gm: (gm[1], canonical_key(gm[0])))
    return [(ModPoly(p, tuple(g)), m) for g, m in parts]


def berlekamp_basis(f, p):
    """Basis of the Berlekamp subalgebra of F_p[x]/<f> for squarefree monic f.

    Each basis element is a coefficient list of degree < deg f; the first is
    the constant 1.
    """
    n = len(f) - 1
    xp = ppowmod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(cur + [0] * (n - len(cur)))
        cur = pmulmod(cur, xp, f, p)
    # u is fixed iff sum_j u_j Q[j][k] = u_k for all k
    A = [[rows[j][k] - (1 if j == k else 0) for j in range(n)] for k in range(n)]
    basis = nullspace_mod_p(A, p)
    basis = [trim(list(v)) for v in basis]
    basis.sort(key=lambda v: (len(v), v))
    return basis


def _berlekamp_split(f, p):
    """Irreducible factors of squarefree monic ``f`` by gcd(f, u - a) sweeps."""
    if len(f) <= 2:
        return [f]
    basis = berlekamp_basis(f, p)
    r = len(basis)
    factors = [f]
    for u in basis:
        if len(factors) == r:
            break
        if len(u) <= 1:
            continue
        nxt = []
        for idx, g in enumerate(factors):
            pending = len(factors) - idx - 1
            if len(g) <= 2 or len(nxt) + 1 + pending >= r:
                nxt.append(g)
                continue
            rest = g
            ured = pmod(u, g, p)
            for a in range(p):
                if len(rest) <= 2 or len(nxt) + 1 + pending >= r:
                    break
                s = pgcd(rest, psub(ured, [a], p), p)
                if 1 < len(s) < len(rest):
                    nxt.append(s)
                    rest = pexact_div(rest, s, p)
            nxt.append(rest)
        factors = nxt
    if len(factors) != r:
        raise ArithmeticError(
            f"Berlekamp split found {len(factors)} factors, kernel dimension {r}"
        )
    return factors


def fallback_factor(f):
    """Complete factorisation of ``f`` over F_p by squarefree decomposition and
    Berlekamp's algorithm, sweeping every shift ``a`` in F_p."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    unit = f.lc()
    if f.degree == 0:
        return ModFactorization(p, (), unit)
    pairs = []
    for g, m in squarefree_decomposition(f):
        for fac in _berlekamp_split(list(g.coeffs), p):
            pairs.append((fac, m))
    return make_factorization(p, pairs, unit)


def is_irreducible(f):
    """Rabin-style test via Berlekamp kernel dimension (for audits)."""
    p = f.p
    g = pmonic(list(f.coeffs), p)
    if len(g) <= 2:
        return len(g) == 2
    if len(pgcd(g, pderiv(g, p), p)) > 1:
        return False
    return len(berlekamp_basis(g, p)) == 1
