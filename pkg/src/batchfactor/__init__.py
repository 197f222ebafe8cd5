"""Factor a monic integer polynomial modulo every prime below a bound.

The heavy lifting is shared across primes: product trees find which primes
divide which polynomial values, root sets of a few auxiliary polynomials give
separating elements, and gcds with those elements split ``f mod p``.
"""

from .batchroots import ALL, RootsTable, batch_roots, eval_range, transpose_index
from .galoisdata import GaloisData, NotGaloisError, compute_global_data
from .galoisfactor import galois_factor_batch, good_primes, refine_factorization, separating_sets
from .generalfactor import factor_entry, frobenius_orbits, general_factor_batch
from .modpoly import FactorRecord, ModFactorization, ModPoly, fallback_factor
from .numfield import NumberField, factor_over_numberfield, factor_over_Z, splitting_field
from .prodtree import ProductTree, batch_divisors, build_product_tree, small_divisors
from .sieve import primes_below

__all__ = [
    "ALL",
    "FactorRecord",
    "GaloisData",
    "ModFactorization",
    "ModPoly",
    "NotGaloisError",
    "NumberField",
    "ProductTree",
    "RootsTable",
    "batch_divisors",
    "batch_roots",
    "build_product_tree",
    "compute_global_data",
    "eval_range",
    "factor_entry",
    "factor_over_Z",
    "factor_over_numberfield",
    "fallback_factor",
    "frobenius_orbits",
    "galois_factor_batch",
    "general_factor_batch",
    "good_primes",
    "primes_below",
    "refine_factorization",
    "separating_sets",
    "small_divisors",
    "splitting_field",
    "transpose_index",
]
