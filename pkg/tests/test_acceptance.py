"""Acceptance run: one test per criterion, each printing a single
``criterion N PASS|FAIL`` line (also collected in the pytest summary).

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python3 tests/test_acceptance.py``.
"""

import functools
import random
import time
import warnings

import pytest

from audits import ACCEPTANCE_LINES, separation_violations, shape_violations, span_violations
from batchfactor import bigpoly as bp
from batchfactor.batchroots import ALL, batch_roots
from batchfactor.galoisdata import compute_global_data
from batchfactor.galoisfactor import galois_factor_batch, good_primes, separating_sets
from batchfactor.generalfactor import GeneralPipeline
from batchfactor.modpoly import ModPoly
from batchfactor.oracle import naive_pair_divisors, naive_roots
from batchfactor.oracle import reference_factor as _reference_factor
from batchfactor.prodtree import batch_divisors, build_product_tree
from batchfactor.sieve import primes_below

GALOIS_CORPUS = {
    "x^2+1": [1, 0, 1],
    "x^2-2": [-2, 0, 1],
    "x^2+x+1": [1, 1, 1],
    "Phi5": [1, 1, 1, 1, 1],
    "Phi7": [1, 1, 1, 1, 1, 1, 1],
    "x^4+1": [1, 0, 0, 0, 1],
    "x^3+x^2-2x-1": [-1, -2, 1, 1],
}
GENERAL_CORPUS = {
    "x^3-2": ([-2, 0, 0, 1], 6),
    "x^3-x-1": ([-1, -1, 0, 1], 6),
    "x^4-2": ([-2, 0, 0, 0, 1], 8),
    "x^4+x+1": ([1, 1, 0, 0, 1], 24),
}
GALOIS_N = 10**4
GENERAL_N = 3000
SPAN_N = 200
# independent count (sympy.primerange) of primes p < 10^5 with p = 1 mod 4
SPLIT_PRIMES_BELOW_1E5 = 4783
PRIMES_BELOW_1E5 = 9592


# criteria 4-6 consult the oracle for the same (f, p) more than once
reference_factor = functools.lru_cache(maxsize=None)(_reference_factor)


def report(n, ok, detail):
    line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


# -- shared runs ------------------------------------------------------------------


@pytest.fixture(scope="module")
def galois_run():
    """Criterion 4 run: records plus separating sets for every Galois input."""
    out = {}
    for name, f in GALOIS_CORPUS.items():
        t0 = time.perf_counter()
        data = compute_global_data(f)
        recs = list(galois_factor_batch(f, GALOIS_N, data=data))
        elapsed = time.perf_counter() - t0
        sets = separating_sets(data, GALOIS_N)
        out[name] = (data, recs, sets, elapsed)
    return out


@pytest.fixture(scope="module")
def general_run():
    """Criterion 5 run: records of f and the data of g for every input."""
    out = {}
    for name, (f, m) in GENERAL_CORPUS.items():
        t0 = time.perf_counter()
        pipe = GeneralPipeline(f)
        g0, sets, g_recs = {}, {}, {}
        recs = list(pipe.records(GENERAL_N, g0_out=g0, sets_out=sets, g_out=g_recs))
        elapsed = time.perf_counter() - t0
        out[name] = (pipe, recs, g0, sets, g_recs, elapsed)
    return out


# -- criteria ---------------------------------------------------------------------


def test_criterion_1_product_tree_figure():
    t0 = time.perf_counter()
    tree = build_product_tree([2, 3, 5, 7, 11])
    elapsed = time.perf_counter() - t0
    nested = tree.nested()
    values = sorted(int(tree.values[i]) for i, _, _ in tree.walk())
    ok = (
        nested == (2310, (6, 2, 3), (385, 5, (77, 7, 11)))
        and values == sorted([2310, 6, 385, 5, 77, 2, 3, 7, 11])
        and elapsed < 1e-3
    )
    assert report(1, ok, f"tree {nested} built in {elapsed * 1e6:.0f} us (budget 1 ms)")


def test_criterion_2_batch_divisors():
    rng = random.Random(2024)
    pool = primes_below(1 << 12)
    mismatches = 0
    t0 = time.perf_counter()
    for _ in range(200):
        k, m = rng.randint(1, 64), rng.randint(1, 64)
        primes = sorted(rng.sample(pool, m))
        values = []
        for _ in range(k):
            v = rng.randint(1, (1 << 64) - 1)
            if rng.random() < 0.7:
                # plant a few small prime factors while staying below 2^64
                v = rng.randint(1, 1 << 30)
                for p in rng.sample(primes, min(len(primes), rng.randint(1, 3))):
                    if v * p < 1 << 64:
                        v *= p
            values.append(v)
        if batch_divisors(build_product_tree(values), primes) != naive_pair_divisors(values, primes):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 5
    assert report(2, ok, f"200 instances, {mismatches} mismatches, {elapsed:.2f} s (budget 5 s)")


def test_criterion_3_batch_roots():
    rng = random.Random(7)
    N = 2000
    primes = primes_below(N)
    mismatches = 0
    t_pipe = 0.0
    for _ in range(100):
        h = []
        while len(bp.trim(h)) < 1:
            h = [rng.randint(-50, 50) for _ in range(rng.randint(1, 6))]
        h = bp.trim(h)
        t0 = time.perf_counter()
        table = batch_roots(h, N)
        t_pipe += time.perf_counter() - t0
        for p in primes:
            got = table[p]
            got = list(range(p)) if got is ALL else list(got)
            if got != naive_roots(h, p):
                mismatches += 1
    ok = mismatches == 0 and t_pipe < 60
    assert report(3, ok, f"100 polynomials, N={N}, {mismatches} mismatches, {t_pipe:.1f} s (budget 60 s)")


def test_criterion_4_galois_oracle(galois_run):
    mismatches = []
    t_pipe = 0.0
    t_oracle = time.perf_counter()
    for name, (data, recs, _, elapsed) in galois_run.items():
        t_pipe += elapsed
        if [r.p for r in recs] != primes_below(GALOIS_N):
            mismatches.append(f"{name}: prime list")
        for rec in recs:
            if rec != reference_factor(ModPoly.from_ints(data.f, rec.p)):
                mismatches.append(f"{name} p={rec.p}")
    t_oracle = time.perf_counter() - t_oracle
    ok = not mismatches and t_pipe < 300
    assert report(
        4,
        ok,
        f"{len(GALOIS_CORPUS)} polynomials, p < {GALOIS_N}, {len(mismatches)} mismatches, "
        f"pipeline {t_pipe:.1f} s (budget 300 s), oracle {t_oracle:.1f} s {mismatches[:3]}",
    )


def test_criterion_5_general_oracle(general_run):
    mismatches = []
    t_pipe = 0.0
    degrees = {}
    for name, (pipe, recs, *_, elapsed) in general_run.items():
        t_pipe += elapsed
        degrees[name] = pipe.m
        if pipe.m != GENERAL_CORPUS[name][1]:
            mismatches.append(f"{name}: splitting degree {pipe.m}")
        if [r.p for r in recs] != primes_below(GENERAL_N):
            mismatches.append(f"{name}: prime list")
        for rec in recs:
            if rec != reference_factor(ModPoly.from_ints(pipe.f, rec.p)):
                mismatches.append(f"{name} p={rec.p}")
    ok = not mismatches and t_pipe < 600
    assert report(
        5,
        ok,
        f"splitting degrees {list(degrees.values())}, p < {GENERAL_N}, {len(mismatches)} mismatches, "
        f"pipeline {t_pipe:.1f} s (budget 600 s) {mismatches[:3]}",
    )


def test_criterion_6_structure(galois_run, general_run):
    violations = []
    checked = 0
    for name, (data, recs, sets, _) in galois_run.items():
        d = data.degree
        good = set(good_primes(data.f, GALOIS_N, data.delta)[0])
        for rec in recs:
            if rec.p not in good:
                continue
            checked += 1
            S = sets[rec.p]
            violations += [f"{name} {v}" for v in shape_violations(rec, d)]
            if len(S) > d**3:
                violations.append(f"{name} p={rec.p}: |S_p| = {len(S)} > {d ** 3}")
            oracle = reference_factor(ModPoly.from_ints(data.f, rec.p))
            violations += [f"{name} {v}" for v in separation_violations(oracle, S.elements)]
    for name, (pipe, recs, g0, sets, g_recs, _) in general_run.items():
        d, m = pipe.d, pipe.m
        good_f = set(good_primes(pipe.f, GENERAL_N, pipe.delta_f)[0])
        for rec in recs:
            if rec.p not in good_f:
                continue
            checked += 1
            # f itself need not factor into equal degrees; its orbits divide deg g0
            violations += [f"{name} {v}" for v in shape_violations(rec, d, equal_degrees=False)]
            if rec.p in g0 and any(g0[rec.p].degree % fac.degree for fac, _ in rec.factors):
                violations.append(f"{name} p={rec.p}: orbit size does not divide deg g0")
        for p, g_rec in g_recs.items():
            checked += 1
            oracle = reference_factor(ModPoly.from_ints(pipe.g, p))
            if g_rec != oracle:
                violations.append(f"{name} g p={p}: factorisation differs from oracle")
            violations += [f"{name} g {v}" for v in shape_violations(g_rec, m)]
            if len(sets[p]) > m**3:
                violations.append(f"{name} g p={p}: |S_p| = {len(sets[p])} > {m ** 3}")
            violations += [f"{name} g {v}" for v in separation_violations(oracle, sets[p].elements)]
    ok = not violations
    assert report(6, ok, f"{checked} good-prime records audited, {len(violations)} violations {violations[:3]}")


def test_criterion_7_mod_p_span():
    violations = []
    for name, f in GALOIS_CORPUS.items():
        violations += [f"{name} {v}" for v in span_violations(compute_global_data(f), SPAN_N)]
    ok = not violations
    assert report(7, ok, f"{len(GALOIS_CORPUS)} polynomials, good p < {SPAN_N}, {len(violations)} violations {violations[:3]}")


def test_criterion_8_scaling():
    h = [-2, 0, 1]
    times = {}
    for N in (10**6, 2 * 10**6):
        t0 = time.perf_counter()
        batch_roots(h, N)
        times[N] = time.perf_counter() - t0
    ratio = times[2 * 10**6] / times[10**6]
    ok = ratio <= 3.0 and max(times.values()) < 120
    note = ""
    if not 1.5 <= ratio <= 3.0:
        note = " (outside [1.5, 3.0], warning only)"
        warnings.warn(f"scaling ratio {ratio:.2f} outside [1.5, 3.0]", stacklevel=1)
    assert report(
        8,
        ok,
        f"N=1e6 {times[10**6]:.1f} s, N=2e6 {times[2 * 10**6]:.1f} s, ratio {ratio:.2f} (limit 3.0){note}",
    )


def test_criterion_9_split_density():
    t0 = time.perf_counter()
    recs = list(galois_factor_batch([1, 0, 1], 10**5))
    elapsed = time.perf_counter() - t0
    split = sum(1 for r in recs if len(r.factors) == 2 and all(f.degree == 1 for f, _ in r.factors))
    frac = split / len(recs)
    ok = (
        0.47 <= frac <= 0.53
        and len(recs) == PRIMES_BELOW_1E5
        and split == SPLIT_PRIMES_BELOW_1E5
        and elapsed < 120
    )
    assert report(9, ok, f"{split}/{len(recs)} primes split, density {frac:.4f}, {elapsed:.1f} s (budget 120 s)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
