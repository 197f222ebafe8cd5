"""Number fields, factorisation over Z and over number fields, splitting
fields.

A :class:`NumberField` is ``Q[y]/<g>`` for a monic irreducible integer ``g``.
Its elements are pairs ``(nums, den)``: an integer coefficient tuple of
degree below ``deg g`` and a positive denominator, kept in lowest terms.
Polynomials over a field are lists of elements in ascending order of ``x``.

Factorisation over Z uses Zassenhaus (Hensel lifting plus subset
recombination); factorisation over a number field uses Trager's norm method;
splitting fields are built by adjoining one root at a time.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from . import bigpoly as bp
from .intlinalg import solve_rational_multi
from .modpoly import ModPoly, fallback_factor, padd, pderiv, pdivmod, pgcd, pmul, psub
from .sieve import primes_below

# number of admissible primes inspected before choosing the Zassenhaus prime
ZASSENHAUS_PRIME_TRIES = 5
# primes tried when certifying that a norm is squarefree
SQUAREFREE_PRIME_TRIES = 12


def _poly_key(f):
    return (len(f), tuple(f))


# -- factorisation over Z ------------------------------------------------------


def _lmod(f, M):
    return bp.trim([c % M for c in f])


def _symmetric(f, M):
    half = M // 2
    return bp.trim([c - M if c > half else c for c in (x % M for x in f)])


def _pxgcd(a, b, p):
    """``(s, t)`` with ``s a + t b = 1`` over F_p for coprime ``a``, ``b``."""
    r0, r1 = list(a), list(b)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("Hensel factors are not coprime")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _hensel_pair(F, A, B, p, M):
    """Lift ``F = A B mod p`` (F, A, B monic) to ``F = A B mod M``.

    ``M`` is ``p`` raised to a power of two; each step squares the modulus.
    """
    s, t = _pxgcd(A, B, p)
    m = p
    while m < M:
        m2 = m * m
        e = psub(_lmod(F, m2), pmul(A, B, m2), m2)
        q, r = pdivmod(pmul(s, e, m2), B, m2)
        A = padd(padd(A, pmul(t, e, m2), m2), pmul(q, A, m2), m2)
        B = padd(B, r, m2)
        b = psub(padd(pmul(s, A, m2), pmul(t, B, m2), m2), [1], m2)
        c, d = pdivmod(pmul(s, b, m2), B, m2)
        s = psub(s, d, m2)
        t = psub(psub(t, pmul(t, b, m2), m2), pmul(c, A, m2), m2)
        m = m2
    return A, B


def _lift_all(F, facs, p, M):
    if len(facs) == 1:
        return [_lmod(F, M)]
    half = len(facs) // 2
    A, B = [1], [1]
    for g in facs[:half]:
        A = pmul(A, g, p)
    for g in facs[half:]:
        B = pmul(B, g, p)
    A, B = _hensel_pair(F, A, B, p, M)
    return _lift_all(A, facs[:half], p, M) + _lift_all(B, facs[half:], p, M)


def _primes():
    bound = 64
    last = 1
    while True:
        for p in primes_below(bound):
            if p > last:
                yield p
        last = p
        bound *= 2


def _choose_prime(f):
    """Among the first few primes where ``f`` stays squarefree of full degree,
    return ``(p, local factors)`` with the fewest local factors."""
    lc = f[-1]
    best = None
    tried = 0
    for p in _primes():
        if lc % p == 0:
            continue
        fbar = [c % p for c in f]
        if len(pgcd(fbar, pderiv(fbar, p), p)) > 1:
            continue
        local = [list(g.coeffs) for g, _ in fallback_factor(ModPoly.from_ints(f, p)).factors]
        tried += 1
        if best is None or len(local) < len(best[1]):
            best = (p, local)
        if len(local) == 1 or tried >= ZASSENHAUS_PRIME_TRIES:
            return best


def _zassenhaus(f):
    """Irreducible factors of a squarefree primitive ``f`` with positive
    leading coefficient."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    p, local = _choose_prime(f)
    if len(local) == 1:
        return [f]
    lc = f[-1]
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(lc) * (2**n) * norm2
    M = p
    while M <= bound:
        M *= M
    F = _lmod([c * pow(lc, -1, M) for c in f], M)
    lifted = _lift_all(F, local, p, M)

    found = []
    rest = list(f)
    idx = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(idx):
        for subset in combinations(idx, s):
            cand = [rest[-1] % M]
            for i in subset:
                cand = pmul(cand, lifted[i], M)
            G = bp.content_primitive(_symmetric(cand, M))[1]
            q = bp.exact_quotient(rest, G)
            if q is not None:
                found.append(G)
                rest = q
                chosen = set(subset)
                idx = [i for i in idx if i not in chosen]
                break
        else:
            s += 1
    found.append(rest)
    return found


def factor_over_Z_with_content(f):
    """``(content, [(factor, multiplicity), ...])`` for a nonzero ``f``.

    Factors are primitive with positive leading coefficient, sorted by
    ``(degree, coefficients)``.
    """
    f = bp.trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    c, f0 = bp.content_primitive(f)
    out = []
    shift = 0
    while f0[shift] == 0:
        shift += 1
    if shift:
        out.append(([0, 1], shift))
        f0 = f0[shift:]
    if len(f0) > 1:
        for part, mult in bp.squarefree_int(f0):
            for g in _zassenhaus(part):
                out.append((g, mult))
    out.sort(key=lambda gm: _poly_key(gm[0]))
    return c, out


def factor_over_Z(f):
    """Irreducible factors of ``f`` over Z with multiplicities."""
    return factor_over_Z_with_content(f)[1]


def is_irreducible_over_Z(f):
    c, facs = factor_over_Z_with_content(f)
    return abs(c) == 1 and len(facs) == 1 and facs[0][1] == 1


# -- number fields ------------------------------------------------------------


class NumberField:
    """``Q[y]/<g>`` for a monic irreducible integer polynomial ``g``."""

    def __init__(self, g, check=True):
        g = bp.trim(g)
        if len(g) < 2 or g[-1] != 1:
            raise ValueError("a number field needs a monic polynomial of degree >= 1")
        if check and not is_irreducible_over_Z(g):
            raise ValueError("defining polynomial is reducible")
        self.g = g
        self.m = len(g) - 1

    def __repr__(self):
        return f"NumberField({bp.pretty(self.g, 'y')})"

    def _make(self, nums, den):
        nums = bp.trim(nums)
        if len(nums) > self.m:
            nums = bp.divrem(nums, self.g)[1]
        if not nums:
            return ((), 1)
        if den < 0:
            nums, den = [-c for c in nums], -den
        c = gcd(den, *nums)
        if c > 1:
            nums = [x // c for x in nums]
            den //= c
        return (tuple(nums), den)

    def element(self, coeffs):
        """Element from a list of rationals (powers of the generator)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return self._make([int(c * den) for c in coeffs], den)

    def from_int(self, a):
        return self._make([a], 1)

    def zero(self):
        return ((), 1)

    def one(self):
        return ((1,), 1)

    def gen(self):
        return self._make([0, 1], 1)

    @staticmethod
    def is_zero(a):
        return not a[0]

    def add(self, a, b):
        (an, ad), (bn, bd) = a, b
        n = max(len(an), len(bn))
        nums = [
            (an[i] * bd if i < len(an) else 0) + (bn[i] * ad if i < len(bn) else 0)
            for i in range(n)
        ]
        return self._make(nums, ad * bd)

    def neg(self, a):
        return (tuple(-c for c in a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a[0] or not b[0]:
            return ((), 1)
        return self._make(bp.mul(list(a[0]), list(b[0])), a[1] * b[1])

    def scale(self, a, q):
        q = Fraction(q)
        return self._make([c * q.numerator for c in a[0]], a[1] * q.denominator)

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero in a number field")
        M = bp.mult_matrix(self.g, list(a[0]))
        sol = solve_rational_multi(M, [[1] + [0] * (self.m - 1)])[0]
        return self.scale(self.element(sol), a[1])

    def to_rat(self, a):
        """Coefficients of ``a`` as Fractions (ascending powers)."""
        return [Fraction(c, a[1]) for c in a[0]]

    def evaluate_int_poly(self, f, a):
        acc = self.zero()
        for c in reversed(f):
            acc = self.add(self.mul(acc, a), self.from_int(c))
        return acc

    def minimal_check(self, f, a):
        """True when ``f(a) = 0`` in the field."""
        return self.is_zero(self.evaluate_int_poly(f, a))

    # polynomials over the field ------------------------------------------------

    def poly(self, int_poly):
        return [self.from_int(c) for c in bp.trim(int_poly)]

    def ptrim(self, f):
        f = list(f)
        while f and not f[-1][0]:
            f.pop()
        return f

    def padd(self, f, g):
        n = max(len(f), len(g))
        z = self.zero()
        return self.ptrim(
            [self.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)]
        )

    def psub(self, f, g):
        return self.padd(f, [self.neg(c) for c in g])

    def pmul(self, f, g):
        if not f or not g:
            return []
        out = [self.zero()] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if not a[0]:
                continue
            for j, b in enumerate(g):
                if b[0]:
                    out[i + j] = self.add(out[i + j], self.mul(a, b))
        return self.ptrim(out)

    def pmonic(self, f):
        if not f:
            return []
        if f[-1] == self.one():
            return list(f)
        inv = self.inv(f[-1])
        return [self.mul(c, inv) for c in f]

    def pdivmod(self, f, g):
        g = self.ptrim(g)
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(f)
        dg = len(g) - 1
        if len(r) - 1 < dg:
            return [], self.ptrim(r)
        inv = self.one() if g[-1] == self.one() else self.inv(g[-1])
        q = [self.zero()] * (len(r) - dg)
        for k in range(len(r) - 1 - dg, -1, -1):
            c = self.mul(r[k + dg], inv)
            q[k] = c
            if c[0]:
                for j in range(dg + 1):
                    r[k + j] = self.sub(r[k + j], self.mul(c, g[j]))
        return self.ptrim(q), self.ptrim(r[:dg])

    def pgcd(self, f, g):
        f, g = self.ptrim(f), self.ptrim(g)
        while g:
            f, g = g, self.pmonic(self.pdivmod(f, g)[1])
        return self.pmonic(f)

    def pshift(self, f, c):
        """``f(x + c)``."""
        out = list(f)
        n = len(out)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                out[j] = self.add(out[j], self.mul(c, out[j + 1]))
        return self.ptrim(out)

    def peval(self, f, a):
        acc = self.zero()
        for c in reversed(f):
            acc = self.add(self.mul(acc, a), c)
        return acc

    def pkey(self, f):
        return (len(f), tuple(f))


# -- Trager ---------------------------------------------------------------------


def _is_squarefree_certified(F):
    """True if some small prime shows the monic integer ``F`` squarefree.

    A False answer only means no certificate was found.
    """
    tried = 0
    for p in primes_below(1 << 12):
        fbar = [c % p for c in F]
        if fbar[-1] == 0:
            continue
        tried += 1
        if len(pgcd(fbar, pderiv(fbar, p), p)) == 1:
            return True
        if tried >= SQUAREFREE_PRIME_TRIES:
            return False
    return False


def norm_poly(K, psi, k=0):
    """``N(psi(x - k y))`` as an integer polynomial, for monic ``psi`` over
    ``K`` whose roots are algebraic integers.

    The norm is evaluated at ``x = 0, 1, ..., deg`` and interpolated.
    """
    n = len(psi) - 1
    D = n * K.m
    nodes = list(range(D + 1))
    values = []
    for x0 in nodes:
        lin = K._make([x0, -k], 1)
        acc = K.peval(psi, lin)
        if not acc[0]:
            values.append(0)
            continue
        num = bp.norm_value(K.g, list(acc[0]))
        den = acc[1] ** K.m
        if num % den:
            raise ArithmeticError("norm value is not integral")
        values.append(num // den)
    coeffs = bp.interpolate(nodes, values)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("norm is not integral")
    N = [int(c) for c in coeffs]
    if len(N) != D + 1 or N[-1] != 1:
        raise ArithmeticError("norm of a monic polynomial must be monic")
    return N


@dataclass
class TragerFactor:
    """Irreducible factor ``poly`` of ``psi`` over ``K`` and the data that
    produced it: ``poly(x - shift*y)`` has norm ``norm``."""

    poly: list
    norm: list
    shift: int


def trager(K, psi):
    """Irreducible monic factors of a monic squarefree ``psi`` over ``K``."""
    psi = K.pmonic(K.ptrim(psi))
    if len(psi) <= 1:
        return []
    if len(psi) == 2:
        return [TragerFactor(psi, None, 0)]
    k = 0
    while True:
        N = norm_poly(K, psi, k)
        if _is_squarefree_certified(N):
            break
        k += 1
    facs = factor_over_Z(N)
    if len(facs) == 1:
        return [TragerFactor(psi, N, k)]
    shifted = K.pshift(psi, K._make([0, -k], 1)) if k else psi
    back = K._make([0, k], 1)
    out = []
    rest = shifted
    for F, _ in facs:
        g = K.pgcd(K.poly(F), rest)
        rest = K.pdivmod(rest, g)[0]
        out.append(TragerFactor(K.pshift(g, back) if k else g, F, k))
    out.sort(key=lambda t: K.pkey(t.poly))
    return out


def factor_over_numberfield(K, f):
    """Monic irreducible factors over ``K`` of a monic squarefree integer
    polynomial ``f``."""
    f = bp.trim(f)
    if not f or f[-1] != 1:
        raise ValueError("factor_over_numberfield needs a monic polynomial")
    if len(f) > 2 and len(bp.int_gcd(f, bp.derivative(f))) > 1:
        raise ValueError("factor_over_numberfield needs a squarefree polynomial")
    return [t.poly for t in trager(K, K.poly(f))]


# -- splitting fields -------------------------------------------------------------


@dataclass
class SplittingField:
    """``f(x) = prod (x - h_i(beta))`` over ``Q(beta) = Q[y]/<g>``.

    ``c`` records the primitive element as an integer combination of the
    roots: ``beta = sum c_i h_i(beta)``. ``relative_degrees`` are the degrees
    of the extensions adjoined in turn.
    """

    f: list
    g: list
    hs: list
    c: list
    relative_degrees: list = field(default_factory=list)
    numberfield: NumberField = None
    roots: list = field(default_factory=list)

    @property
    def degree(self):
        return len(self.g) - 1


def _adjoin(K, phi, F, k):
    """Adjoin a root ``r`` of the irreducible ``phi`` over ``K``.

    The new field is ``Q[z]/<F>`` with ``z = r + k y``. Returns the new field,
    the images of ``1, y, ..., y^(m-1)`` and the image of ``r``.
    """
    m, e = K.m, len(phi) - 1
    M = m * e
    if len(F) - 1 != M:
        raise ArithmeticError("norm factor has the wrong degree")
    L = NumberField(F, check=False)

    # tower elements are lists of e elements of K (polynomials in r mod phi)
    def tmul(a, b):
        return K.pdivmod(K.pmul(a, b), phi)[1]

    z = K.ptrim([K._make([0, k], 1), K.one()])
    cols = []
    cur = [K.one()]
    for _ in range(M):
        vec = []
        for j in range(e):
            c = cur[j] if j < len(cur) else K.zero()
            vec.extend(K.to_rat(c) + [Fraction(0)] * (m - len(c[0])))
        cols.append(vec)
        cur = tmul(cur, z)
    # scale columns to integers; solution entries scale back
    scales = []
    int_cols = []
    for col in cols:
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        scales.append(den)
        int_cols.append([int(x * den) for x in col])
    T = [[int_cols[j][i] for j in range(M)] for i in range(M)]
    rhs = []
    for i in range(m):
        b = [0] * M
        b[i] = 1
        rhs.append(b)
    b = [0] * M
    b[m] = 1
    rhs.append(b)
    sols = solve_rational_multi(T, rhs)
    images = [L.element([t * s for t, s in zip(sol, scales)]) for sol in sols]
    return L, images[:m], images[m]


def _map_element(K, L, images, a):
    acc = L.zero()
    for i, c in enumerate(a[0]):
        if c:
            acc = L.add(acc, L.scale(images[i], Fraction(c, a[1])))
    return acc


def splitting_field(f):
    """Splitting field of a monic irreducible ``f`` of degree at least 2."""
    f = bp.trim(f)
    d = len(f) - 1
    if d < 2 or f[-1] != 1:
        raise ValueError("splitting_field needs monic f of degree >= 2")
    if not is_irreducible_over_Z(f):
        raise ValueError("splitting_field needs an irreducible polynomial")
    K = NumberField(f, check=False)
    y = K.gen()
    roots = [y]
    c = [1]
    rel = [d]
    first, rem = K.pdivmod(K.poly(f), [K.neg(y), K.one()])
    assert not rem
    pending = [first]
    while True:
        nonlinear = []
        for psi in pending:
            for t in trager(K, psi):
                if len(t.poly) == 2:
                    roots.append(K.neg(t.poly[0]))
                else:
                    nonlinear.append(t)
        if not nonlinear:
            break
        nonlinear.sort(key=lambda t: K.pkey(t.poly))
        t = nonlinear[0]
        L, images, r = _adjoin(K, t.poly, t.norm, t.shift)
        phi = [_map_element(K, L, images, a) for a in t.poly]
        if not L.is_zero(L.peval(phi, r)):
            raise ArithmeticError("adjoined element is not a root")
        roots = [_map_element(K, L, images, a) for a in roots]
        c = c + [0] * (len(roots) - len(c))
        c = [t.shift * ci for ci in c] + [1]
        roots.append(r)
        quot, rem = L.pdivmod(phi, [L.neg(r), L.one()])
        assert not rem
        pending = [quot] + [[_map_element(K, L, images, a) for a in s.poly] for s in nonlinear[1:]]
        rel.append(len(t.poly) - 1)
        K = L
    c = c + [0] * (len(roots) - len(c))
    return SplittingField(
        f=f,
        g=list(K.g),
        hs=[K.to_rat(r) for r in roots],
        c=c,
        relative_degrees=rel,
        numberfield=K,
        roots=roots,
    )
