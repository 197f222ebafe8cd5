import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from batchfactor.oracle import naive_pair_divisors
from batchfactor.prodtree import batch_divisors, build_product_tree, small_divisors
from batchfactor.sieve import primes_below

PRIMES = primes_below(400)


def audit(tree):
    for i, lo, hi in tree.walk():
        if hi - lo == 1:
            assert tree.values[i] == tree.leaves[lo]
        else:
            assert tree.values[i] == tree.values[2 * i] * tree.values[2 * i + 1]
    assert tree.root == math.prod(tree.leaves)
    assert tree.depth() <= math.ceil(math.log2(tree.k)) + 1


def test_figure_tree():
    tree = build_product_tree([2, 3, 5, 7, 11])
    assert tree.nested() == (2310, (6, 2, 3), (385, 5, (77, 7, 11)))
    audit(tree)


def test_singleton_and_sign():
    assert build_product_tree([7]).nested() == 7
    assert build_product_tree([-2, 3]).root == -6


def test_rejects_empty_and_zero():
    with pytest.raises(ValueError):
        build_product_tree([])
    with pytest.raises(ValueError):
        build_product_tree([3, 0])


def test_small_divisors_examples():
    tree = build_product_tree([2, 3, 5, 7, 11])
    assert small_divisors(tree, 84) == [2, 3, 7]
    assert small_divisors(tree, 1) == []
    assert small_divisors(tree, 0) == [2, 3, 5, 7, 11]
    with pytest.raises(ValueError):
        small_divisors(tree, 2310)


def test_batch_divisors_examples():
    tree = build_product_tree([10, 21, 22])
    assert batch_divisors(tree, [2, 3, 5, 7, 11]) == [[2, 5], [3, 7], [2, 11]]
    assert batch_divisors(build_product_tree([1, 1]), [2, 3]) == [[], []]


@given(st.lists(st.integers(-10**9, 10**9).filter(bool), min_size=1, max_size=40))
def test_tree_invariants(values):
    audit(build_product_tree(values))


@given(
    st.lists(st.integers(1, 2**64 - 1), min_size=1, max_size=64),
    st.lists(st.sampled_from(PRIMES), min_size=1, max_size=64, unique=True),
)
def test_batch_divisors_matches_oracle(values, primes):
    tree = build_product_tree(values)
    assert batch_divisors(tree, primes) == naive_pair_divisors(values, primes)


def test_batch_divisors_planted():
    rng = random.Random(5)
    for _ in range(50):
        primes = sorted(rng.sample(PRIMES, rng.randint(1, 64)))
        values = []
        for _ in range(rng.randint(1, 64)):
            v = rng.randint(1, 2**20)
            for p in rng.sample(primes, min(3, len(primes))):
                v *= p
            values.append(v)
        tree = build_product_tree(values)
        assert batch_divisors(tree, primes) == naive_pair_divisors(values, primes)


def test_candidate_sets_shrink():
    rng = random.Random(9)
    values = [rng.randint(1, 10**12) for _ in range(200)]
    seen = []

    def observer(parent, here):
        assert set(here) <= set(parent)
        seen.append(len(here))

    batch_divisors(build_product_tree(values), primes_below(2000), observer)
    assert seen
