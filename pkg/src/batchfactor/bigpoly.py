"""Dense polynomials over Z and Q.

An integer polynomial is a list of ints in ascending order (``[-2, 0, 1]`` is
x^2 - 2) with no trailing zeros; the zero polynomial is ``[]``. Rational
polynomials use the same layout with :class:`fractions.Fraction` entries.
"""

from fractions import Fraction
from math import gcd

from .intlinalg import bareiss_det, solve_rational, transpose
from .modpoly import ModPoly


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def sub(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f):
    return [-c for c in f]


def scale(f, c):
    return trim([c * x for x in f])


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def divrem(f, g):
    """``(q, r)`` with ``f = q g + r`` and ``deg r < deg g``; ``g`` monic."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if g[-1] != 1:
        raise ValueError("divrem needs a monic divisor")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    return trim(q), trim(r[:dg])


def poly_arith(kind, f, g):
    ops = {"add": add, "sub": sub, "mul": mul, "divrem_exact": divrem, "divrem": divrem}
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind](f, g)


def evaluate(f, a):
    acc = 0
    for c in reversed(f):
        acc = acc * a + c
    return acc


def derivative(f):
    return trim([i * c for i, c in enumerate(f)][1:])


def content(f):
    c = 0
    for x in f:
        c = gcd(c, x)
    return c


def content_primitive(f):
    """``(c, f0)`` with ``f = c f0``, ``f0`` primitive with positive leading
    coefficient (so ``c`` carries the sign of the leading coefficient)."""
    f = trim(f)
    if not f:
        raise ValueError("content of the zero polynomial")
    c = content(f)
    if f[-1] < 0:
        c = -c
    return c, [x // c for x in f]


def taylor_shift(f, a):
    """Coefficients of ``f(x + a)``."""
    out = list(f)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return trim(out)


def exact_quotient(f, g):
    """``f / g`` over Z if ``g`` divides ``f`` exactly, else ``None``."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(trim(r)) - 1 < dg:
        return [] if not trim(r) else None
    lc = g[-1]
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c, rem = divmod(r[k + dg], lc)
        if rem:
            return None
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    if any(r[:dg]):
        return None
    return trim(q)


def pseudo_rem(f, g):
    """Pseudo-remainder of ``f`` by ``g`` over Z."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [lc * x for x in r]
        for j in range(dg + 1):
            r[shift + j] -= c * g[j]
        r = trim(r)
    return r


def int_gcd(f, g):
    """Primitive gcd over Z (positive leading coefficient), by primitive PRS."""
    f, g = trim(f), trim(g)
    if not f and not g:
        return []
    if not f:
        return content_primitive(g)[1]
    if not g:
        return content_primitive(f)[1]
    cf, f = content_primitive(f)
    cg, g = content_primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = pseudo_rem(f, g)
        f = g
        g = content_primitive(r)[1] if r else []
    return f


def squarefree_int(f):
    """Yun decomposition over Z of a primitive ``f``: ``[(part, mult)]``."""
    f = content_primitive(f)[1]
    out = []
    df = derivative(f)
    if not df:
        return [(f, 1)]
    a = int_gcd(f, df)
    b = exact_quotient(f, a)
    c = exact_quotient(df, a)
    i = 1
    while len(b) > 1:
        d = sub(c, derivative(b))
        g = int_gcd(b, d)
        if len(g) > 1:
            out.append((g, i))
        b = exact_quotient(b, g)
        c = exact_quotient(d, g)
        i += 1
    return out


# -- resultants ---------------------------------------------------------------


def sylvester_matrix(f, g):
    """The (m+n) x (m+n) Sylvester matrix, ``n = deg f``, ``m = deg g``.

    Column ``j < m`` holds the coefficients of ``x^j f``; column ``m + j``
    holds those of ``x^j g``.
    """
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    S = [[0] * size for _ in range(size)]
    for j in range(m):
        for i, c in enumerate(f):
            S[i + j][j] = c
    for j in range(n):
        for i, c in enumerate(g):
            S[i + j][m + j] = c
    return S


def resultant(f, g):
    f, g = trim(f), trim(g)
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    return bareiss_det(sylvester_matrix(f, g))


def discriminant(f):
    """``(-1)^(d(d-1)/2) res(f, f')`` for monic ``f`` of degree >= 2."""
    f = trim(f)
    d = len(f) - 1
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    if f[-1] != 1:
        raise ValueError("discriminant needs a monic polynomial")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f))


def mult_matrix(f, u):
    """Matrix of multiplication by ``u`` on ``Z[x]/<f>`` for monic ``f``.

    Column ``j`` holds the coefficients of ``x^j u mod f``.
    """
    d = len(f) - 1
    col = divrem(u, f)[1]
    cols = []
    for _ in range(d):
        cols.append(col + [0] * (d - len(col)))
        col = divrem([0] + col, f)[1]
    return transpose(cols)


def norm_value(f, u):
    """``res(f, u)`` for monic ``f``, as the determinant of multiplication by
    ``u`` (the product of ``u`` over the roots of ``f``)."""
    u = trim(u)
    if not u:
        return 0
    return bareiss_det(mult_matrix(f, u))


def interpolate(nodes, values):
    """Coefficients of the polynomial of degree < len(nodes) through the
    points, by solving the Vandermonde system exactly."""
    V = [[x**j for j in range(len(nodes))] for x in nodes]
    sol = solve_rational(V, values)
    return trim(sol)


def separating_resultant(f, u_lift):
    """``res_x(f(x), u(x) - y)`` as an integer polynomial in ``y``.

    The resultant is evaluated at ``y = 0, 1, ..., d`` and interpolated; an
    extra evaluation at ``y = d + 1`` guards the interpolation. Each value
    ``res(f, u - a)`` is the d x d determinant of multiplication by ``u - a``
    modulo ``f``, which equals the Sylvester determinant for monic ``f``.
    """
    f, u = trim(f), trim(u_lift)
    d = len(f) - 1
    if d < 2 or f[-1] != 1:
        raise ValueError("separating_resultant needs monic f of degree >= 2")
    if len(u) <= 1:
        raise ValueError("u must be nonconstant")
    if len(u) - 1 >= d:
        raise ValueError("u must have degree < deg f")
    nodes = list(range(d + 1))
    values = [norm_value(f, sub(u, [a])) for a in nodes]
    coeffs = interpolate(nodes, values)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated resultant is not integral")
    h = [int(c) for c in coeffs]
    if evaluate(h, d + 1) != norm_value(f, sub(u, [d + 1])):
        raise ArithmeticError("interpolation mismatch at the check node")
    if len(h) - 1 > d or abs(h[-1]) != 1:
        raise ArithmeticError("separating resultant must have leading coefficient +-1")
    return h


def reduce_mod_p(f, p):
    return ModPoly.from_ints(f, p)


# -- rational polynomials -----------------------------------------------------


def rat_trim(f):
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def common_denominator(f):
    den = 1
    for c in f:
        d = Fraction(c).denominator
        den = den * d // gcd(den, d)
    return den


# -- text encoding ------------------------------------------------------------


def parse_poly(text):
    """Parse ``"-2,0,1"`` (ascending coefficients) into an integer polynomial."""
    parts = [t.strip() for t in text.split(",")]
    if not parts or any(not t for t in parts):
        raise ValueError(f"cannot parse polynomial {text!r}")
    try:
        coeffs = [int(t) for t in parts]
    except ValueError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc
    return trim(coeffs)


def format_poly(f):
    return ",".join(str(c) for c in f) if f else "0"


def parse_ratpoly(text):
    parts = [t.strip() for t in text.split(",")]
    try:
        return rat_trim(Fraction(t) for t in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational polynomial {text!r}") from exc


def format_ratpoly(f):
    out = []
    for c in f:
        c = Fraction(c)
        out.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return ",".join(out) if out else "0"


def pretty(f, var="x"):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])
