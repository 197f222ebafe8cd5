"""Global data for a Galois polynomial f: discriminant, automorphism
matrices, fixed-ring bases and separating resultants.

With ``theta`` a root of ``f`` and ``K = Q(theta)``, every automorphism
``sigma`` is described by the polynomial ``sigma(theta)`` of degree below
``d``. ``M_sigma`` is the integer matrix whose column ``j`` holds
``delta * sigma(theta)^j`` reduced mod ``f`` (``delta`` the discriminant).
The fixed ring of ``sigma`` inside ``Z[theta]`` is ``ker(M_sigma - delta I)``.
"""

from dataclasses import dataclass, field
from itertools import permutations

from . import bigpoly as bp
from .intlinalg import kernel_basis
from .numfield import NumberField, factor_over_numberfield, is_irreducible_over_Z


class NotGaloisError(ValueError):
    """Raised when f does not split over Q[x]/<f>."""


@dataclass
class SepEntry:
    sigma: int
    u: list
    h: list


@dataclass
class GaloisData:
    f: list
    delta: int
    images: list
    matrices: list
    bases: list
    seps: list = field(default_factory=list)

    @property
    def degree(self):
        return len(self.f) - 1

    def to_json(self):
        return {
            "f": [str(c) for c in self.f],
            "delta": str(self.delta),
            "matrices": [[[str(x) for x in row] for row in M] for M in self.matrices],
            "bases": [[[str(c) for c in u] for u in B] for B in self.bases],
            "seps": [
                {"sigma": s.sigma, "u": [str(c) for c in s.u], "h": [str(c) for c in s.h]}
                for s in self.seps
            ],
        }


def _check_input(f):
    f = bp.trim(f)
    if len(f) < 3 or f[-1] != 1:
        raise ValueError("need a monic polynomial of degree >= 2")
    if not is_irreducible_over_Z(f):
        raise ValueError("polynomial is reducible")
    return f


def roots_in_own_field(f):
    """The roots of ``f`` in ``Q[x]/<f>`` as field elements, or
    :class:`NotGaloisError` if ``f`` does not split there."""
    K = NumberField(f, check=False)
    facs = factor_over_numberfield(K, f)
    if any(len(g) != 2 for g in facs):
        raise NotGaloisError("f does not split over its own stem field")
    return K, [K.neg(g[0]) for g in facs]


def automorphisms_from_splitting(split):
    """Roots of ``g`` in ``Q(beta)`` for a splitting field datum.

    Each automorphism permutes the roots ``h_i(beta)`` of ``f`` and sends
    ``beta = sum c_i h_i(beta)`` to ``sum c_i h_pi(i)(beta)``; the
    permutations whose image is a root of ``g`` give the whole group.
    """
    K = split.numberfield
    m = split.degree
    found = {}
    for perm in permutations(range(len(split.roots))):
        img = K.zero()
        for ci, j in zip(split.c, perm):
            if ci:
                img = K.add(img, K.scale(split.roots[j], ci))
        if img in found:
            continue
        if K.minimal_check(split.g, img):
            found[img] = perm
    if len(found) != m:
        raise ArithmeticError(f"found {len(found)} automorphisms, expected {m}")
    return K, list(found)


def _matrix(K, delta, img):
    d = K.m
    cols = []
    cur = K.one()
    for _ in range(d):
        nums, den = cur
        scaled = [c * delta for c in nums]
        if any(c % den for c in scaled):
            raise ArithmeticError("delta * sigma(theta)^j is not integral")
        col = [c // den for c in scaled]
        cols.append(col + [0] * (d - len(col)))
        cur = K.mul(cur, img)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def galois_matrices(f, roots=None):
    """``(delta, [M_sigma, ...], [sigma(theta), ...])`` in canonical order.

    ``roots`` may supply ``(K, root elements)`` when they are already known
    (from a splitting field); otherwise they are found by factoring ``f``
    over its own stem field.
    """
    f = bp.trim(f)
    if roots is None:
        f = _check_input(f)
        K, elems = roots_in_own_field(f)
    else:
        K, elems = roots
        if K.g != f:
            raise ValueError("roots belong to a different field")
    d = len(f) - 1
    if len(set(elems)) != d or not all(K.minimal_check(f, a) for a in elems):
        raise ArithmeticError("supplied roots are not the d distinct roots of f")
    delta = bp.discriminant(f)
    mats = [_matrix(K, delta, a) for a in elems]
    order = sorted(range(d), key=lambda i: [row[1] for row in mats[i]])
    return delta, [mats[i] for i in order], [K.to_rat(elems[i]) for i in order]


def fixed_ring_basis(M, delta):
    """Z-basis (as integer polynomials) of ``ker(M - delta I)``."""
    d = len(M)
    A = [[M[i][j] - (delta if i == j else 0) for j in range(d)] for i in range(d)]
    return [bp.trim(v) for v in kernel_basis(A)]


def compute_global_data(f, roots=None):
    delta, mats, images = galois_matrices(f, roots)
    f = bp.trim(f)
    bases = [fixed_ring_basis(M, delta) for M in mats]
    seps = []
    for s, B in enumerate(bases):
        for u in B:
            if len(u) > 1:
                seps.append(SepEntry(s, u, bp.separating_resultant(f, u)))
    return GaloisData(f, delta, images, mats, bases, seps)
