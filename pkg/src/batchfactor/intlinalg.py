"""Exact integer linear algebra: Bareiss determinants, Hermite normal form,
integer kernels.

Matrices are lists of rows of Python ints.
"""

from fractions import Fraction
from math import gcd

from gmpy2 import mpz


def _check_rect(M):
    if M and any(len(row) != len(M[0]) for row in M):
        raise ValueError("matrix rows have different lengths")


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    _check_rect(A)
    _check_rect(B)
    if A and B and len(A[0]) != len(B):
        raise ValueError("shape mismatch")
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def transpose(M):
    return [list(col) for col in zip(*M)]


def bareiss_det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    _check_rect(M)
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("bareiss_det needs a square matrix")
    if n == 0:
        return 1
    A = [[mpz(x) for x in row] for row in M]
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                q, r = divmod(rowi[j] * akk - aik * rowk[j], prev)
                assert r == 0, "inexact Bareiss division"
                rowi[j] = q
            rowi[k] = 0
        prev = akk
    return sign * int(A[n - 1][n - 1])


def _bareiss_forward(A):
    """In-place fraction-free row echelon form; returns pivot columns."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    prev = mpz(1)
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        arc = A[r][c]
        rowr = A[r]
        for i in range(r + 1, rows):
            rowi = A[i]
            aic = rowi[c]
            for j in range(c + 1, cols):
                q, rem = divmod(rowi[j] * arc - aic * rowr[j], prev)
                assert rem == 0, "inexact Bareiss division"
                rowi[j] = q
            rowi[c] = 0
            # entries left of c are already zero in rows below r
        prev = arc
        pivots.append(c)
        r += 1
    return pivots


def rank(M):
    """Rank over the rationals, by fraction-free elimination."""
    _check_rect(M)
    if not M:
        return 0
    A = [[mpz(x) for x in row] for row in M]
    return len(_bareiss_forward(A))


def solve_rational(A, b):
    """Solve the square system ``A x = b`` exactly; returns Fractions."""
    return solve_rational_multi(A, [b])[0]


def solve_rational_multi(A, rhs):
    """Solve ``A x = b`` for every integer vector ``b`` in ``rhs``.

    One fraction-free elimination is shared by all right-hand sides.
    """
    n = len(A)
    if any(len(row) != n for row in A) or any(len(b) != n for b in rhs):
        raise ValueError("solve_rational needs a square system")
    aug = [[mpz(x) for x in row] + [mpz(b[i]) for b in rhs] for i, row in enumerate(A)]
    pivots = _bareiss_forward(aug)
    if len(pivots) < n or pivots[-1] >= n:
        raise ZeroDivisionError("singular system")
    out = []
    for k in range(len(rhs)):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(int(aug[i][n + k]))
            for j in range(i + 1, n):
                if aug[i][j]:
                    acc -= int(aug[i][j]) * x[j]
            x[i] = acc / int(aug[i][i])
        out.append(x)
    return out


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``s*a + t*b = g``.

    When ``a`` divides ``b`` the coefficients are ``(sign(a), 0)``.
    """
    if a != 0 and b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def hnf(M):
    """Column-style Hermite normal form with transform.

    Returns ``(H, Q)`` with ``H = M Q``, ``Q`` unimodular, the nonzero columns
    of ``H`` leftmost in echelon form with positive pivots, and every entry
    left of a pivot (in the pivot's row) reduced into ``[0, pivot)``.
    """
    _check_rect(M)
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[mpz(M[i][j]) for i in range(m)] for j in range(n)]
    Q = [[mpz(int(i == j)) for i in range(n)] for j in range(n)]

    def combine(cols, c, j, s, t, u, v):
        cc, cj = cols[c], cols[j]
        cols[c] = [s * x + t * y for x, y in zip(cc, cj)]
        cols[j] = [u * x + v * y for x, y in zip(cc, cj)]

    c = 0
    for i in range(m):
        if c >= n:
            break
        for j in range(c + 1, n):
            b = A[j][i]
            if b == 0:
                continue
            a = A[c][i]
            if a == 0:
                A[c], A[j] = A[j], A[c]
                Q[c], Q[j] = Q[j], Q[c]
                continue
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            combine(A, c, j, s, t, -bg, ag)
            combine(Q, c, j, s, t, -bg, ag)
        piv = A[c][i]
        if piv == 0:
            continue
        if piv < 0:
            A[c] = [-x for x in A[c]]
            Q[c] = [-x for x in Q[c]]
            piv = -piv
        for k in range(c):
            q = A[k][i] // piv
            if q:
                A[k] = [x - q * y for x, y in zip(A[k], A[c])]
                Q[k] = [x - q * y for x, y in zip(Q[k], Q[c])]
        c += 1
    H = [[int(A[j][i]) for j in range(n)] for i in range(m)]
    Qm = [[int(Q[j][i]) for j in range(n)] for i in range(n)]
    return H, Qm


def _zero_column_count(H):
    n = len(H[0]) if H else 0
    count = 0
    for j in range(n - 1, -1, -1):
        if any(row[j] for row in H):
            break
        count += 1
    return count


def lattice_echelon(vectors):
    """Canonical basis of the lattice spanned by ``vectors``.

    The result is the column HNF of the matrix whose columns are the input
    vectors, returned as a list of vectors (zero vectors dropped). Every
    vector's first nonzero entry is positive.
    """
    if not vectors:
        return []
    cols = transpose([list(v) for v in vectors])
    H, _ = hnf(cols)
    out = []
    for j in range(len(vectors)):
        v = [row[j] for row in H]
        if any(v):
            out.append(v)
    return out


def hnf_mod(vectors, D, k):
    """Triangular basis of ``span(vectors) + D Z^k``.

    Every intermediate entry is reduced modulo ``D``, which is valid because
    the lattice contains ``D e_j`` for every ``j``. The result ``B`` has
    ``B[i][j] = 0`` for ``j < i``, positive ``B[i][i]`` dividing ``D``, and
    ``0 <= B[i][j] < B[j][j]`` for ``j > i``.
    """
    vecs = [[x % D for x in v] for v in vectors]
    basis = []
    for i in range(k):
        piv = [0] * k
        piv[i] = D
        rest = []
        for v in vecs:
            b = v[i] % D
            if b == 0:
                v[i] = 0
                if any(v):
                    rest.append(v)
                continue
            a = piv[i]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            newp = [(s * x + t * y) for x, y in zip(piv, v)]
            w = [(bg * x - ag * y) % D for x, y in zip(piv, v)]
            piv = [c if j == i else c % D for j, c in enumerate(newp)]
            w[i] = 0
            if any(w):
                rest.append(w)
        basis.append(piv)
        vecs = rest
    for i in range(k):
        for j in range(i + 1, k):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], basis[j])]
    return basis


def _congruence_lattice(C, D, k):
    """Basis of ``{t in Z^k : C t = 0 mod D}`` (rows of ``C`` are the
    congruences)."""
    basis = [[int(i == j) for j in range(k)] for i in range(k)]
    for row in C:
        w = [sum(a * b for a, b in zip(row, v)) % D for v in basis]
        gens = []
        acc = None
        acc_w = 0
        for v, wv in zip(basis, w):
            if wv == 0:
                gens.append(v)
                continue
            if acc is None:
                acc, acc_w = v, wv
                continue
            g, s, t = xgcd(acc_w, wv)
            aw, bw = acc_w // g, wv // g
            new_acc = [(s * x + t * y) % D for x, y in zip(acc, v)]
            gens.append([(bw * x - aw * y) % D for x, y in zip(acc, v)])
            acc, acc_w = new_acc, g
        if acc is not None:
            mult = D // gcd(acc_w, D)
            gens.append([mult * x for x in acc])
        basis = hnf_mod(gens, D, k)
    return basis


def kernel_basis(M):
    """Canonical Z-basis of ``{v : M v = 0}``.

    The rational kernel is parametrised by the free columns of an echelon
    form; integral kernel vectors correspond to the free-coordinate vectors
    ``t`` satisfying a congruence modulo the common denominator ``D`` of the
    parametrisation. That lattice is computed with every entry reduced mod
    ``D`` and put in Hermite form, which fixes the basis. Each vector is
    finally signed so its first nonzero entry is positive.
    """
    _check_rect(M)
    if not M:
        raise ValueError("kernel_basis needs at least one row")
    n = len(M[0])
    c = 0
    for row in M:
        for x in row:
            c = gcd(c, x)
    if c == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    A = [[mpz(x // c) for x in row] for row in M]
    pivots = _bareiss_forward(A)
    free = [j for j in range(n) if j not in set(pivots)]
    k = len(free)
    if k == 0:
        return []
    r = len(pivots)
    E = [[int(x) for x in A[i]] for i in range(r)]
    sub = [[E[i][p] for p in pivots] for i in range(r)]
    sols = solve_rational_multi(sub, [[E[i][f] for i in range(r)] for f in free])
    D = 1
    for sol in sols:
        for x in sol:
            D = D * x.denominator // gcd(D, x.denominator)
    # pivot coordinate i of the kernel vector is -sum_f sols[f][i] t_f
    C = [[int(sols[f][i] * D) % D for f in range(k)] for i in range(r)] if D > 1 else []
    lattice = _congruence_lattice(C, D, k) if D > 1 else [
        [int(i == j) for j in range(k)] for i in range(k)
    ]
    out = []
    for t in lattice:
        v = [0] * n
        for f, tf in zip(free, t):
            v[f] = tf
        for i, p in enumerate(pivots):
            val = -sum(sols[f][i] * t[f] for f in range(k))
            assert val.denominator == 1
            v[p] = int(val)
        lead = next(x for x in v if x)
        if lead < 0:
            v = [-x for x in v]
        out.append(v)
    return out


def nullspace_mod_p(A, p):
    """Basis of the right nullspace of ``A`` over F_p (list of vectors)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    R = [[x % p for x in row] for row in A]
    pivcols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        R[r] = [x * inv % p for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(x - f * y) % p for x, y in zip(R[i], R[r])]
        pivcols.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in set(pivcols)]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivcols):
            v[pc] = -R[i][fc] % p
        basis.append(v)
    return basis


def rank_mod_p(A, p):
    cols = len(A[0]) if A else 0
    return cols - len(nullspace_mod_p(A, p)) if A else 0
