"""Product trees and batch detection of small prime divisors.

A :class:`ProductTree` over ``[a_0, ..., a_{k-1}]`` splits its input at
``floor(k/2)`` at every level, so the tree over ``[2, 3, 5, 7, 11]`` has root
2310 with children 6 and 385, and 385 has children 5 and 77.

Nodes are kept in heap order (root at index 1, children of ``i`` at ``2i`` and
``2i + 1``). Node values are ``gmpy2.mpz``; the leaves are also kept as plain
ints in input order.
"""

import gmpy2
from gmpy2 import mpz

# Candidate lists at or below this size are tested by direct remainders
# instead of building a product tree for them.
DIRECT_TEST_CUTOFF = 128


class ProductTree:
    __slots__ = ("k", "leaves", "values")

    def __init__(self, values):
        leaves = [int(v) for v in values]
        if not leaves:
            raise ValueError("product tree needs at least one value")
        if any(v == 0 for v in leaves):
            raise ValueError("product tree values must be nonzero")
        self.k = len(leaves)
        self.leaves = leaves
        self.values = [None] * (4 * self.k)
        self._build(1, 0, self.k)

    def _build(self, i, lo, hi):
        vals = self.values
        if hi - lo == 1:
            vals[i] = mpz(self.leaves[lo])
            return
        mid = lo + (hi - lo) // 2
        self._build(2 * i, lo, mid)
        self._build(2 * i + 1, mid, hi)
        vals[i] = vals[2 * i] * vals[2 * i + 1]

    @property
    def root(self):
        return self.values[1]

    def walk(self):
        """Yield ``(index, lo, hi)`` for every node in preorder.

        The node at ``index`` covers the leaves ``lo..hi-1``.
        """
        stack = [(1, 0, self.k)]
        while stack:
            i, lo, hi = stack.pop()
            yield i, lo, hi
            if hi - lo > 1:
                mid = lo + (hi - lo) // 2
                stack.append((2 * i + 1, mid, hi))
                stack.append((2 * i, lo, mid))

    def depth(self):
        """Number of levels (a singleton tree has depth 1)."""
        best = 0
        stack = [(1, 0, self.k, 1)]
        while stack:
            i, lo, hi, d = stack.pop()
            best = max(best, d)
            if hi - lo > 1:
                mid = lo + (hi - lo) // 2
                stack.append((2 * i, lo, mid, d + 1))
                stack.append((2 * i + 1, mid, hi, d + 1))
        return best

    def nested(self):
        """The tree as nested tuples ``(value, left, right)``; leaves are ints."""

        def rec(i, lo, hi):
            if hi - lo == 1:
                return int(self.values[i])
            mid = lo + (hi - lo) // 2
            return (int(self.values[i]), rec(2 * i, lo, mid), rec(2 * i + 1, mid, hi))

        return rec(1, 0, self.k)


def build_product_tree(values):
    return ProductTree(values)


def small_divisors(prime_tree, n):
    """Primes of ``prime_tree`` dividing ``n``, in leaf order.

    ``prime_tree`` must be built over distinct positive primes and
    ``0 <= n < root``. The search reduces ``n`` modulo the two child products
    at each node; a leaf prime divides ``n`` exactly when the residue that
    reaches it is zero.
    """
    n = mpz(n)
    if n < 0 or n >= prime_tree.root:
        raise ValueError("n must satisfy 0 <= n < product of the primes")
    vals = prime_tree.values
    leaves = prime_tree.leaves
    out = []

    def descend(i, lo, hi, r):
        if r == 0:
            out.extend(leaves[lo:hi])
            return
        if hi - lo == 1:
            return
        mid = lo + (hi - lo) // 2
        descend(2 * i, lo, mid, r % vals[2 * i])
        descend(2 * i + 1, mid, hi, r % vals[2 * i + 1])

    descend(1, 0, prime_tree.k, n)
    return out


def _dividing(n, candidates):
    if len(candidates) <= DIRECT_TEST_CUTOFF:
        return [p for p in candidates if gmpy2.f_mod(n, p) == 0]
    tree = ProductTree(candidates)
    return small_divisors(tree, gmpy2.f_mod(n, tree.root))


def batch_divisors(value_tree, primes, observer=None):
    """For each leaf ``n_i`` of ``value_tree`` return ``[p in primes : p | n_i]``.

    The candidate primes are narrowed at every node to those dividing the
    node's product before descending. ``observer(parent_candidates,
    node_candidates)`` is called at every visited node if given.
    """
    out = [None] * value_tree.k
    vals = value_tree.values

    def visit(i, lo, hi, cands):
        here = _dividing(vals[i], cands) if cands else []
        if observer is not None:
            observer(cands, here)
        if hi - lo == 1:
            out[lo] = here
            return
        if not here:
            for j in range(lo, hi):
                out[j] = []
            return
        mid = lo + (hi - lo) // 2
        visit(2 * i, lo, mid, here)
        visit(2 * i + 1, mid, hi, here)

    visit(1, 0, value_tree.k, [int(p) for p in primes])
    return out
