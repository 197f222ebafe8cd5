import pytest

from batchfactor.modpoly import ModPoly
from batchfactor.oracle import (
    OracleGuardError,
    naive_factor,
    naive_pair_divisors,
    naive_roots,
    reference_factor,
    sympy_factor,
)


def mp(p, *coeffs):
    return ModPoly.from_ints(list(coeffs), p)


def test_naive_roots_examples():
    assert naive_roots([1, 0, 1], 5) == [2, 3]
    assert naive_roots([1, 0, 1], 3) == []
    assert naive_roots([0], 7) == list(range(7))
    with pytest.raises(ValueError):
        naive_roots([], 7)


def test_naive_factor_examples():
    assert naive_factor(mp(5, 1, 0, 1)).as_pairs() == [((2, 1), 1), ((3, 1), 1)]
    assert naive_factor(mp(3, 1, 0, 1)).as_pairs() == [((1, 0, 1), 1)]
    assert naive_factor(mp(2, 0, 1)).as_pairs() == [((0, 1), 1)]


def test_naive_factor_guard():
    with pytest.raises(OracleGuardError):
        naive_factor(mp(10007, 1, 0, 0, 0, 1))


def test_naive_pair_divisors_examples():
    assert naive_pair_divisors([10, 21, 22], [2, 3, 5, 7, 11]) == [[2, 5], [3, 7], [2, 11]]
    assert naive_pair_divisors([1], [2]) == [[]]
    with pytest.raises(ValueError):
        naive_pair_divisors([0], [2])


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 97])
def test_naive_and_sympy_agree(p):
    for coeffs in [[1, 1, 1, 1, 1], [-2, 0, 0, 1], [1, 0, 0, 0, 1], [0, 0, 1, 1], [1, 2, 1]]:
        f = mp(p, *coeffs)
        assert naive_factor(f) == sympy_factor(f)
        assert naive_factor(f).expand() == f


def test_reference_switches_to_sympy():
    f = mp(9973, 1, 1, 1, 1, 1, 1, 1)
    fac = reference_factor(f)
    assert fac.expand() == f
    assert sum(g.degree * m for g, m in fac.factors) == 6
