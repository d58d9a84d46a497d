"""Acceptance suite: every criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.  All checks are exact (tolerance zero); the verdicts
come from exhaustive enumeration, never from sampled shortcuts, except
where a criterion itself asks for seeded sampling.

Criterion 4b is expected to FAIL and is kept failing on purpose: at t = 1
the two-layer family's non-completing sets are the nonempty subsets of
[2t+2, n] together with their complements, so their number is
2^(n-2) - 2 and grows with n instead of staying constant.  The t >= 2
instances (criterion 4c and the unit suite) do show the constant count.
"""

import time
from math import comb

import pytest

from oracles import all_families, brute_force_has_copy, brute_force_sat_star
from posetsat.bollobas import (
    bollobas_bound,
    extract_pair_system,
    is_bollobas,
    is_skew_bollobas,
    transform_mc2_pairs,
)
from posetsat.constructs import (
    boolean_family,
    construct_2ck_c1,
    construct_b3,
    construct_mc2_binom,
    construct_mck,
)
from posetsat.embed import find_induced_copy
from posetsat.posetspec import build_poset
from posetsat.setfam import Family
from posetsat.solver import sat_star_exact
from posetsat.verify import exceptions, greedy_saturate, is_induced_p_free


def check(cid: str, ok: bool, detail: str, started: float) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"[acceptance] criterion {cid}: {verdict} ({detail}) "
          f"[{time.time() - started:.1f}s]")
    assert ok, f"criterion {cid}: {detail}"


def test_criterion_1_size_identities():
    t0 = time.time()
    bad = []
    for k in (3, 4, 5):
        for n in range(2 * k, 15):
            got = len(construct_2ck_c1(n, k))
            if got != (1 << (k + 2)) - 4:
                bad.append(("2ck_c1", n, k, got))
    for n in range(4, 13):
        got = len(construct_b3(n))
        if got != 3 * n - 2:
            bad.append(("b3", n, got))
    check("1 (size identities)", not bad, f"mismatches: {bad or 'none'}", t0)


def test_criterion_2_b3_full_saturation():
    t0 = time.time()
    poset = build_poset("B3")
    results = {}
    for n in (4, 5, 6, 7):
        family = construct_b3(n)
        free = is_induced_p_free(family, poset)
        exc = len(exceptions(family, poset)) if free else None
        results[n] = (free, exc)
    ok = all(free and exc == 0 for free, exc in results.values())
    check("2 (B3 saturation)", ok, f"free/exceptions per n: {results}", t0)


def test_criterion_3_mck_freeness_and_bounded_exceptions():
    t0 = time.time()
    failures = []
    for m, k in ((2, 2), (3, 2), (2, 3), (3, 3)):
        poset = build_poset(f"{m}C{k}")
        cap = (1 << (m + k - 1)) + (1 << (m + k - 2))
        counts = {}
        for n in range(2 * (m + k), 14):
            family = construct_mck(n, m, k)
            if not is_induced_p_free(family, poset):
                failures.append((m, k, n, "not free"))
                continue
            exc = exceptions(family, poset)
            counts[n] = len(exc)
            if len(exc) > cap:
                failures.append((m, k, n, f"{len(exc)} exceptions > cap {cap}"))
            completed = greedy_saturate(family, poset)
            leftover = len(exceptions(completed, poset))
            if leftover != 0:
                failures.append((m, k, n, f"greedy left {leftover} exceptions"))
        if len(set(counts.values())) != 1:
            failures.append((m, k, f"count varies across n: {counts}"))
    check("3 (mCk grid)", not failures, f"failures: {failures or 'none'}", t0)


def test_criterion_4a_two_layer_t1_freeness():
    t0 = time.time()
    poset = build_poset("3C2")
    not_free = [
        n for n in range(6, 11)
        if not is_induced_p_free(construct_mc2_binom(n, 1), poset)
    ]
    check("4a (t=1 freeness)", not not_free, f"not free at n: {not_free or 'none'}", t0)


def test_criterion_4b_two_layer_t1_exception_constancy():
    # Stated criterion; see the module docstring for why this fails.
    t0 = time.time()
    poset = build_poset("3C2")
    counts = {
        n: len(exceptions(construct_mc2_binom(n, 1), poset)) for n in range(6, 11)
    }
    constant = len(set(counts.values())) == 1
    check("4b (t=1 exception constancy)", constant, f"counts by n: {counts}", t0)


def test_criterion_4c_two_layer_t2_freeness():
    t0 = time.time()
    poset = build_poset("7C2")
    not_free = [
        n for n in range(7, 10)
        if find_induced_copy(construct_mc2_binom(n, 2), poset) is not None
    ]
    check("4c (t=2 freeness)", not not_free, f"copies found at n: {not_free or 'none'}", t0)


def test_criterion_5_trimmed_cube_freeness():
    t0 = time.time()
    violations = []
    for k in (2, 3, 4):
        family = boolean_family(k, "empty")
        if find_induced_copy(family, build_poset(f"C{k}+C1")) is not None:
            violations.append(("no-empty cube", k))
    for k in (2, 3):
        family = boolean_family(k + 1, "empty_and_full")
        if find_induced_copy(family, build_poset(f"2C{k}+C1")) is not None:
            violations.append(("no-extremes cube", k))
    check("5 (trimmed-cube freeness)", not violations,
          f"violations: {violations or 'none'}", t0)


def test_criterion_6_bollobas_machinery():
    t0 = time.time()
    failures = []
    for t in (1, 2):
        n = 6 if t == 1 else 9
        family = construct_mc2_binom(n, t)
        m_cap = bollobas_bound(t, t)
        if find_induced_copy(family, build_poset(f"{m_cap + 1}C2")) is not None:
            failures.append((t, f"copy of {m_cap + 1}C2 exists"))
        k_values = list(range(2, m_cap + 1))
        for i in range(100):
            seed = i + 1
            k = k_values[i % len(k_values)]
            emb = find_induced_copy(
                family, build_poset(f"{k}C2"), order_seed=seed
            )
            if emb is None:
                failures.append((t, k, seed, "no copy found"))
                continue
            system = extract_pair_system(family, emb)
            if not is_bollobas(system):
                failures.append((t, k, seed, "extracted system not Bollobas"))
            out = transform_mc2_pairs(system, t)
            if not is_skew_bollobas(out):
                failures.append((t, k, seed, "transformed system not skew"))
            if any(
                x.bit_count() > t or y.bit_count() > t for x, y in out.pairs
            ):
                failures.append((t, k, seed, "side exceeds t"))
            if len(out.pairs) > comb(2 * t, t):
                failures.append((t, k, seed, "k above binom(2t,t)"))
    check("6 (Bollobas machinery)", not failures, f"failures: {failures or 'none'}", t0)


def test_criterion_7_solver_oracle():
    t0 = time.time()
    mismatches = []
    for spec in ("C1", "C2", "2C1"):
        poset = build_poset(spec)
        for n in (1, 2, 3):
            want, _ = brute_force_sat_star(n, poset)
            got = sat_star_exact(n, poset)
            if got.status != "exact" or got.value != want:
                mismatches.append((spec, n, got.value, want))
    check("7[solver] (full-enumeration agreement)", not mismatches,
          f"mismatches: {mismatches or 'none'}", t0)


@pytest.mark.parametrize("spec", ["C2", "C3", "2C2", "C2+C1"])
def test_criterion_7_embedding_oracle(spec):
    t0 = time.time()
    poset = build_poset(spec)
    checked = 0
    disagreements = 0
    for n in (1, 2, 3, 4):
        for masks in all_families(n):
            family = Family(n, masks)
            got = find_induced_copy(family, poset) is not None
            want = brute_force_has_copy(masks, poset)
            checked += 1
            if got != want:
                disagreements += 1
    check(f"7[embed {spec}] (brute-force agreement)", disagreements == 0,
          f"{checked} families checked, {disagreements} disagreements", t0)
