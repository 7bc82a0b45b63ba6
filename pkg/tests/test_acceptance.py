"""Acceptance criteria.  Each test prints one ``[criterion k] PASS|FAIL ...`` line."""

import math
import random
import time

import pytest

from drinfeld import linalg
from drinfeld import polynomials as P
from drinfeld import skew as S
from drinfeld.bench import loglog_slope, mean_times, run_bench
from drinfeld.charpoly import (
    phi_x_matrix, solve_deterministic, solve_gekeler, solve_monte_carlo, solve_oracle,
    verify_charpoly,
)
from drinfeld.field import ExtField, modcomp
from drinfeld.module import DrinfeldModule

from conftest import EXAMPLE_F

GRID_QS = (5, 7, 97, 499)
GRID_NS = range(2, 25)
GRID_SEEDS = (0, 1)
PRINTED_A = [3, 1, 3]  # 3x^2 + x + 3
PRINTED_B = [2, 4, 4, 0, 1]


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {k}] {'PASS' if ok else 'FAIL'} {detail}")
    return emit


# -- 1 ----------------------------------------------------------------------

def test_criterion_1_golden_vector(report):
    t0 = time.perf_counter()
    L = ExtField(5, EXAMPLE_F)
    dm = DrinfeldModule(L, [0, 1], [1], [1])
    got = {s.__name__: s(dm) for s in (solve_gekeler, solve_deterministic, solve_oracle, solve_monte_carlo)}
    elapsed = time.perf_counter() - t0
    b_ok = all(r.B == PRINTED_B for r in got.values())
    a_ok = all(r.A == PRINTED_A for r in got.values())
    agree = len({tuple(r.A) for r in got.values()}) == 1
    a_seen = next(iter(got.values())).A
    ok = a_ok and b_ok and elapsed < 1.0
    report(1, ok, f"B ok={b_ok}; A={a_seen} (expected {PRINTED_A}, solvers agree={agree}); "
                  f"{elapsed:.3f}s. The expected A violates Id - Phi_A + Phi_B = 0 on this "
                  f"instance (its negation is what satisfies it); see the decisions ledger.")
    assert b_ok and agree and elapsed < 1.0
    assert a_ok, f"A={a_seen}, expected {PRINTED_A}"


# -- grid shared by criteria 2, 3, 4, 5, 8 ---------------------------------

@pytest.fixture(scope="module")
def grid():
    t0 = time.perf_counter()
    rows = []
    for q in GRID_QS:
        for n in GRID_NS:
            for m in [m for m in range(1, n + 1) if n % m == 0]:
                for seed in GRID_SEEDS:
                    rng = random.Random(f"accept/{q}/{n}/{m}/{seed}")
                    dm = DrinfeldModule.random(q, n, m, rng)
                    res = {
                        "gekeler": solve_gekeler(dm),
                        "deterministic": solve_deterministic(dm),
                        "oracle": solve_oracle(dm),
                        "monte_carlo": solve_monte_carlo(dm, seed=seed, max_retries=20),
                    }
                    rows.append({"q": q, "n": n, "m": m, "seed": seed, "dm": dm, "res": res})
    return rows, time.perf_counter() - t0


def test_criterion_2_cross_algorithm(grid, report):
    rows, elapsed = grid
    mismatches = [
        (r["q"], r["n"], r["m"], r["seed"]) for r in rows
        if len({(tuple(x.A), tuple(x.B)) for x in r["res"].values()}) != 1
    ]
    max_retries = max(r["res"]["monte_carlo"].retries for r in rows)
    ok = len(rows) >= 200 and not mismatches and max_retries <= 20 and elapsed < 600
    report(2, ok, f"{len(rows)} instances, {len(mismatches)} mismatches, "
                  f"max MC retries {max_retries}, {elapsed:.1f}s")
    assert ok, mismatches[:5]


def test_criterion_3_structural_bounds(grid, report):
    rows, _ = grid
    bad = []
    for r in rows:
        n, dm = r["n"], r["dm"]
        formula = P.scale(P.power(dm.p, dm.m, dm.q),
                          (-1) ** n * pow(dm.field.norm(dm.delta), -1, dm.q), dm.q)
        for name, res in r["res"].items():
            if not (len(res.A) - 1 <= n // 2 and len(res.B) - 1 == n and res.B == formula):
                bad.append((r["q"], n, r["m"], name))
    report(3, not bad, f"{len(rows) * 4} solver outputs checked, {len(bad)} violations")
    assert not bad


def test_criterion_4_operator_identity(grid, report):
    rows, _ = grid
    bad = []
    for r in rows:
        dm = r["dm"]
        L = dm.field
        rng = random.Random(f"identity/{r['q']}/{r['n']}/{r['m']}/{r['seed']}")
        for name, res in r["res"].items():
            for _ in range(10):
                beta = L.random(rng)
                orbit = dm.orbit(beta, r["n"] + 1)
                value = L.add(L.sub(beta, L.lincomb(res.A, orbit)), L.lincomb(res.B, orbit))
                if not L.is_zero(value):
                    bad.append((r["q"], r["n"], r["m"], name))
                    break
    report(4, not bad, f"{len(rows) * 4} solutions x 10 points, {len(bad)} failures")
    assert not bad


def test_criterion_5_monte_carlo_nu(grid, report):
    rows, _ = grid
    out_of_range = []
    first, matched = 0, 0
    for r in rows:
        n = r["n"]
        res = r["res"]["monte_carlo"]
        if not (math.ceil(n / 2) <= res.nu <= n):
            out_of_range.append((r["q"], n, r["m"], res.nu))
        if r["q"] >= 97:
            first += 1
            mu = linalg.matrix_minpoly(phi_x_matrix(r["dm"]), r["q"])
            matched += res.nu_history[0] == len(mu) - 1
    frac = matched / first
    ok = not out_of_range and frac >= 0.9
    report(5, ok, f"accepted nu out of range: {len(out_of_range)}; first-attempt nu = deg minpoly "
                  f"on {matched}/{first} = {frac:.3f} (q >= 97)")
    assert ok


# -- 6 ----------------------------------------------------------------------

def test_criterion_6_performance(report):
    ns = [16, 24, 32, 48, 64]
    t0 = time.perf_counter()
    rows = run_bench([499], ns, [2], ["gekeler", "mc"], reps=4, seed=2024, workers=1)
    elapsed = time.perf_counter() - t0
    for a, b in zip(rows[::2], rows[1::2]):
        assert a["A"] == b["A"] and a["B"] == b["B"]
    times = mean_times(rows)
    gek, mc = times[("gekeler", 499, 2)], times[("mc", 499, 2)]
    s_gek, s_mc = loglog_slope(gek), loglog_slope(mc)
    speedup = gek[64] / mc[64]
    ok = speedup >= 3 and s_mc <= 2.5 and s_gek >= 2.7 and elapsed < 900
    report(6, ok, f"speedup at n=64 {speedup:.1f}x; slope(mc)={s_mc:.2f}, slope(gekeler)={s_gek:.2f}; "
                  f"gekeler n=64 {gek[64]:.2f}s, mc n=64 {mc[64]:.2f}s; {elapsed:.0f}s total")
    assert ok


# -- 7 ----------------------------------------------------------------------

CASES = 100


def _module(rng):
    q = rng.choice([3, 5, 7, 97, 499])
    n = rng.randrange(2, 7)
    m = rng.choice([m for m in range(1, n + 1) if n % m == 0])
    return DrinfeldModule.random(q, n, m, rng)


def _skew(L, rng, deg=4):
    return S.strip([L.random(rng) for _ in range(rng.randrange(deg + 1))], L)


def _poly(q, rng, deg):
    return P.trim([rng.randrange(q) for _ in range(rng.randrange(deg + 1))])


def _kernel_checks():
    def skew_axioms(rng):
        L = _module(rng).field
        u, v, w = (_skew(L, rng) for _ in range(3))
        tau = [L.zero(), L.one()]
        a = L.random(rng)
        return (S.skew_mul(S.skew_mul(u, v, L), w, L) == S.skew_mul(u, S.skew_mul(v, w, L), L)
                and S.skew_mul(u, S.skew_add(v, w, L), L)
                == S.skew_add(S.skew_mul(u, v, L), S.skew_mul(u, w, L), L)
                and S.skew_mul(tau, [a], L) == S.strip([L.zero(), L.frobenius(a, 1)], L))

    def right_division(rng):
        L = _module(rng).field
        u, v = _skew(L, rng, 8), _skew(L, rng, 4)
        if not v:
            v = [L.one()]
        quo, r = S.skew_divmod_right(u, v, L)
        return S.skew_add(S.skew_mul(quo, v, L), r, L) == u and len(r) < len(v)

    def iota_morphism(rng):
        L = _module(rng).field
        u, v, a = _skew(L, rng), _skew(L, rng), L.random(rng)
        return S.skew_apply(S.skew_mul(u, v, L), a, L) == S.skew_apply(u, S.skew_apply(v, a, L), L)

    def phi_morphism(rng):
        dm = _module(rng)
        L, q = dm.field, dm.q
        c1, c2 = _poly(q, rng, 4), _poly(q, rng, 4)
        return (S.phi_of_poly(P.mul(c1, c2, q), dm)
                == S.skew_mul(S.phi_of_poly(c1, dm), S.phi_of_poly(c2, dm), L))

    def table_vs_powering(rng):
        dm = _module(rng)
        k = rng.randrange(0, 7)
        return S.build_phi_table(k, dm)[k] == S.phi_x_power(k, dm)

    def invert_round_trip(rng):
        dm = _module(rng)
        k = rng.randrange(0, 6)
        c = _poly(dm.q, rng, k)
        return S.invert_phi(S.phi_of_poly(c, dm), S.build_phi_table(k, dm), k, dm.field) == c

    def multipoint(rng):
        L = _module(rng).field
        u = _skew(L, rng, 15)
        pts = [L.random(rng) for _ in range(rng.randrange(1, 5))]
        return S.skew_multipoint_eval(u, pts, L) == [S.skew_apply(u, a, L) for a in pts]

    def frobenius_backends(rng):
        L = _module(rng).field
        i = rng.randrange(-(L.n - 1), L.n)
        a = L.random(rng)
        direct = L.pow(a, L.q ** (i % L.n))
        return L.frobenius(a, i, "squaring") == L.frobenius(a, i, "modcomp") == direct

    def bm_annihilation(rng):
        q = rng.choice([2, 5, 97, 499])
        order = rng.randrange(1, 10)
        rec = [rng.randrange(q) for _ in range(order)]
        seq = [rng.randrange(q) for _ in range(order)]
        while len(seq) < 2 * order:
            seq.append(sum(c * s for c, s in zip(rec, seq[-order:])) % q)
        g = linalg.berlekamp_massey(seq, q)
        nu = len(g) - 1
        return all(sum(c * seq[k + i] for i, c in enumerate(g)) % q == 0 for k in range(len(seq) - nu))

    def crt_round_trip(rng):
        q = rng.choice([3, 5, 97])
        n = rng.randrange(2, 20)
        mods = P.enumerate_moduli(q, n)
        total = sum(len(e) - 1 for e in mods)
        target = _poly(q, rng, total - 1)
        return P.crt_combine([(P.rem(target, e, q), e) for e in mods], q) == target

    def cayley_hamilton(rng):
        q = rng.choice([2, 5, 97])
        n = rng.randrange(1, 7)
        mat = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        chi = linalg.matrix_charpoly(mat, q)
        acc = [[0] * n for _ in range(n)]
        for c in reversed(chi):
            acc = linalg.mat_mul(acc, mat, q)
            for i in range(n):
                acc[i][i] = (acc[i][i] + c) % q
        return chi[-1] == 1 and len(chi) == n + 1 and all(not any(row) for row in acc)

    def modcomp_horner(rng):
        q = 97
        h = [rng.randrange(q) for _ in range(rng.randrange(1, 8))] + [1]
        f, g = _poly(q, rng, 12), _poly(q, rng, len(h) - 2)
        horner = []
        for c in reversed(f):
            horner = P.add(P.mulmod(horner, g, h, q), [c], q)
        return modcomp(f, g, h, q) == P.rem(horner, h, q)

    return {
        "skew-ring axioms": skew_axioms,
        "right-division reconstruction": right_division,
        "iota-morphism identity": iota_morphism,
        "phi ring-morphism identity": phi_morphism,
        "f_ij table vs binary powering": table_vs_powering,
        "invert_phi round-trip": invert_round_trip,
        "multipoint vs naive": multipoint,
        "Frobenius backend agreement": frobenius_backends,
        "Berlekamp-Massey annihilation": bm_annihilation,
        "CRT round-trip": crt_round_trip,
        "Cayley-Hamilton": cayley_hamilton,
        "modular composition vs Horner": modcomp_horner,
    }


def test_criterion_7_kernel_properties(report):
    failures = {}
    for name, check in _kernel_checks().items():
        rng = random.Random(f"kernel/{name}")
        bad = sum(not check(rng) for _ in range(CASES))
        if bad:
            failures[name] = bad
    n_suites = len(_kernel_checks())
    report(7, not failures, f"{n_suites} suites x {CASES} cases; failures: {failures or 'none'}")
    assert not failures


# -- 8 ----------------------------------------------------------------------

def test_criterion_8_mutation_robustness(grid, report):
    rows, _ = grid
    rng = random.Random("mutations")
    rejected = 0
    for _ in range(100):
        r = rng.choice(rows)
        dm, q, n = r["dm"], r["q"], r["n"]
        A, B = list(r["res"]["oracle"].A), list(r["res"]["oracle"].B)
        if rng.random() < 0.5:
            A = A + [0] * (n // 2 + 1 - len(A))
            i = rng.randrange(len(A))
            A[i] = (A[i] + rng.randrange(1, q)) % q
        else:
            i = rng.randrange(n + 1)
            B[i] = (B[i] + rng.randrange(1, q)) % q
        rejected += not verify_charpoly(dm, A, B, 10, rng)
    report(8, rejected >= 99, f"{rejected}/100 single-coefficient mutations rejected")
    assert rejected >= 99
