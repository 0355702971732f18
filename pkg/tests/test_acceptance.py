"""Acceptance criteria, one test per criterion, at the stated tolerances."""

import itertools
import random
import time
from math import comb

import numpy as np
import pytest

from braidforge.braid import BraidWord, DeltaVariant, FullTwistVariant, Permutation, delta_word, full_twist_word, word
from braidforge.families import (
    StratumParams,
    artin_presentation,
    c_stratum_presentation,
    f_stratum_presentation,
    pappus_p_presentation,
    pappus_pi_presentation,
    pure_braid_presentation,
    sphere_braid_presentation,
    sphere_pure_presentation,
)
from braidforge.fpgroup import (
    Presentation,
    abelianization,
    check_homomorphism,
    coset_enumerate,
    cyclic_key,
    eliminate_generator,
    is_free_of_rank,
    isomorphic_small_groups,
    multiplication_table,
    smith_normal_form,
)
from braidforge.fpgroup.tietze import eliminable_pairs
from braidforge.garside import braids_equal, normal_form
from braidforge.suite import (
    cancellation_identity,
    conjugation_shift_identities,
    pappus_p_reduction,
    pappus_p_target,
    pappus_pi_reduction,
    pappus_pi_target_words,
)
from braidforge.trajectory import ExtractionParams, extract_braid, sample_rotating_loop

DIC3 = Presentation(("a", "b"), ((1,) * 6, (2, 2, -1, -1, -1), (-2, 1, 2, 1)))


def report(number, ok, detail=""):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


@pytest.mark.acceptance(1, "half-twist words agree for n=2..8 in under 1 s")
def test_half_twist_variants():
    start = time.perf_counter()
    ok = True
    for n in range(2, 9):
        words = [delta_word(n, v) for v in DeltaVariant]
        forms = [normal_form(w) for w in words]
        ok &= all(f == forms[0] for f in forms)
        ok &= all(braids_equal(u, v) for u, v in itertools.combinations(words, 2))
        ok &= forms[0].delta_power == 1 and forms[0].factors == ()
    elapsed = time.perf_counter() - start
    report(1, ok and elapsed < 1.0, f"{elapsed:.3f}s")


@pytest.mark.acceptance(2, "full-twist words agree for n=2..7; cancellation identity n=2..8; under 5 s")
def test_full_twist_variants():
    start = time.perf_counter()
    ok = True
    for n in range(2, 8):
        words = [full_twist_word(n, v) for v in FullTwistVariant]
        ok &= all(braids_equal(u, v) for u, v in itertools.combinations(words, 2))
    for n in range(2, 9):
        ok &= braids_equal(*cancellation_identity(n))
    elapsed = time.perf_counter() - start
    report(2, ok and elapsed < 5.0, f"{elapsed:.3f}s")


@pytest.mark.acceptance(3, "generator sliding identities n=2..8; full twist central n=2..7")
def test_sliding_and_centrality():
    count = 0
    ok = True
    for n in range(2, 9):
        for lhs, rhs in conjugation_shift_identities(n):
            ok &= braids_equal(lhs, rhs)
            count += 1
    for n in range(2, 8):
        d = full_twist_word(n, "A")
        for i in range(1, n):
            s = word(n, [i])
            ok &= braids_equal(d * s, s * d)
    report(3, ok and count > 0, f"{count} identities")


@pytest.mark.acceptance(4, "H1 of ordered strata for k=2..8")
def test_ordered_strata_homology():
    ok = True
    for k in range(2, 9):
        for n_dim in (1, 2, 3):
            got = abelianization(f_stratum_presentation(StratumParams(k + 1, 1, n_dim)))
            torsion = (2,) if n_dim == 1 else ()
            ok &= (got.free_rank, got.torsion) == (comb(k, 2) - 1, torsion)
    report(4, ok)


@pytest.mark.acceptance(5, "H1 of unordered strata")
def test_unordered_strata_homology():
    ok = True
    for k in range(2, 9):
        got = abelianization(c_stratum_presentation(StratumParams(k + 1, 1, 1)))
        ok &= (got.free_rank, got.torsion) == (0, (2 * k,))
    for k in range(3, 9):
        expected = (k,) if k % 2 == 0 else (2 * k,)
        for n_dim in (2, 3):
            got = abelianization(c_stratum_presentation(StratumParams(k + 1, 1, n_dim)))
            ok &= (got.free_rank, got.torsion) == (0, expected)
    cases = 0
    for kp in range(3, 7):
        for i in range(2, kp):
            for n_dim in range(i, 7):
                got = abelianization(c_stratum_presentation(StratumParams(kp, i, n_dim)))
                ok &= (got.free_rank, got.torsion) == (0, (2,))
                cases += 1
    report(5, ok, f"{cases} generic cases")


@pytest.mark.acceptance(6, "unordered 3-point line stratum has order 12 and is dicyclic; under 1 s")
def test_dicyclic_quotient():
    start = time.perf_counter()
    t = coset_enumerate(c_stratum_presentation(StratumParams(3, 1, 1)))
    iso = t.cosets == 12 and isomorphic_small_groups(
        multiplication_table(t), multiplication_table(coset_enumerate(DIC3)))
    elapsed = time.perf_counter() - start
    report(6, iso and elapsed < 1.0, f"cosets={t.cosets} {elapsed:.3f}s")


@pytest.mark.acceptance(7, "ordered 3-point line stratum has order 2")
def test_order_two():
    t = coset_enumerate(f_stratum_presentation(StratumParams(3, 1, 1)))
    report(7, t.cosets == 2, f"cosets={t.cosets}")


@pytest.mark.acceptance(8, "ordered 4-point collinear planar stratum is free of rank 2 for every elimination")
def test_free_rank_two():
    p = f_stratum_presentation(StratumParams(4, 1, 2))
    idx = next(i for i, r in enumerate(p.relators) if cyclic_key(r) == cyclic_key(p.word("a12", "a13", "a23")))
    results = []
    for g in ("a12", "a13", "a23"):
        q = eliminate_generator(p, g, idx)
        results.append((q.ngens, len(q.relators), is_free_of_rank(q)))
    report(8, results == [(2, 0, 2)] * 3, str(results))


@pytest.mark.acceptance(9, "Pappus presentations reduce to F2 x F2 and PB3 x F2 relator sets")
def test_pappus_reductions():
    p = pappus_p_presentation()
    r = pappus_p_reduction(p)
    ab_p = abelianization(p)
    ok_p = (r.generators == ("b12", "b13", "bp12", "bp13") and r.relator_keys() == pappus_p_target(r)
            and len(r.relators) == 4 and (ab_p.free_rank, ab_p.torsion) == (4, ()))
    pi = pappus_pi_presentation()
    s = pappus_pi_reduction(pi)
    ab_pi = abelianization(pi)
    target = {cyclic_key(w) for w in pappus_pi_target_words(s)}
    ok_pi = (s.ngens == 5 and s.relator_keys() == target and (ab_pi.free_rank, ab_pi.torsion) == (5, ()))
    report(9, ok_p and ok_pi, f"P: {len(r.relators)} relators, PI: {len(s.relators)} relators")


@pytest.mark.acceptance(10, "rotating loop reads as the full twist for k=2..5, stable under refinement and angle; under 10 s")
def test_loop_braid():
    start = time.perf_counter()
    rng = np.random.default_rng(2013)
    ok = True
    for k in range(2, 6):
        target = full_twist_word(k, "F")
        ok &= braids_equal(extract_braid(sample_rotating_loop(k)), target)
        ok &= braids_equal(extract_braid(sample_rotating_loop(k, 2 * 64 * k * k)), target)
        for angle in rng.uniform(0.0, np.pi, 5):
            ok &= braids_equal(extract_braid(sample_rotating_loop(k), ExtractionParams(float(angle))), target)
    elapsed = time.perf_counter() - start
    report(10, ok and elapsed < 10.0, f"{elapsed:.3f}s")


@pytest.mark.acceptance(11, "adjacent transpositions kill every unordered-stratum relator for k_points <= 7")
def test_symmetric_quotient():
    ok, cases = True, 0
    for kp in range(2, 8):
        for i in range(1, kp):
            for n_dim in sorted({1, i, i + 1, i + 2} - {0}):
                params = StratumParams(kp, i, n_dim)
                if n_dim < i:
                    continue
                p = c_stratum_presentation(params)
                images = {g: Permutation.transposition(kp, int(g[1:]), int(g[1:]) + 1) for g in p.generators}
                ok &= check_homomorphism(p, images)
                cases += 1
    report(11, ok, f"{cases} presentations")


def _random_word(rng, n, length):
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def _equivalent(rng, w):
    """A different word for the same braid: insert cancelling pairs and apply relations."""
    letters = list(w.letters)
    n = w.strands
    for _ in range(4):
        i = rng.randint(1, n - 1)
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = [i, -i]
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if abs(abs(a) - abs(b)) >= 2:
            letters[p], letters[p + 1] = b, a
    return BraidWord(n, tuple(letters))


@pytest.mark.acceptance(12, "normal-form, SNF and elimination property suites")
def test_property_suites():
    rng = random.Random(12)
    ok = True
    for _ in range(1000):
        n = rng.randint(2, 6)
        u = _random_word(rng, n, rng.randint(0, 40))
        nf = normal_form(u)
        ok &= normal_form(nf.to_word()) == nf and braids_equal(u, nf.to_word())
        v = _equivalent(rng, u)
        w = _random_word(rng, n, rng.randint(0, 10))
        ok &= braids_equal(u, v) and braids_equal(u * w, v * w) and braids_equal(w * u, w * v)
    for _ in range(200):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        factors, rank = smith_normal_form(m)
        ok &= all(b % a == 0 for a, b in zip(factors, factors[1:])) and all(d > 0 for d in factors)
        shuffled = [row[:] for row in m]
        rng.shuffle(shuffled)
        perm = list(range(cols))
        rng.shuffle(perm)
        shuffled = [[row[j] for j in perm] for row in shuffled]
        ok &= smith_normal_form(shuffled) == (factors, rank)
    presentations = [pure_braid_presentation(n) for n in range(2, 6)]
    presentations += [artin_presentation(n) for n in range(2, 6)]
    presentations += [sphere_pure_presentation(k) for k in range(1, 5)]
    presentations += [sphere_braid_presentation(k) for k in range(1, 5)]
    for kp in range(2, 6):
        for i in range(1, kp):
            for n_dim in (i, i + 1) if i > 1 else (1, 2):
                presentations.append(f_stratum_presentation(StratumParams(kp, i, n_dim)))
                presentations.append(c_stratum_presentation(StratumParams(kp, i, n_dim)))
    presentations += [pappus_pi_presentation(), pappus_p_presentation()]
    eliminations = 0
    for p in presentations:
        before = abelianization(p)
        for g, j in eliminable_pairs(p):
            ok &= abelianization(eliminate_generator(p, g, j)) == before
            eliminations += 1
    report(12, ok, f"{eliminations} eliminations")
