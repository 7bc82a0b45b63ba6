"""Timing harness: one CSV row per (grid cell, algorithm, rep) plus log-log slopes."""

from __future__ import annotations

import csv
import math
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from statistics import linear_regression, mean

from .charpoly import solve
from .field import ExtField
from .module import DrinfeldModule

HEADER = ["q", "n", "m", "alg", "seconds", "retries", "nu", "A", "B"]

# CLI short names -> solver names
ALG_NAMES = {"gekeler": "gekeler", "det": "deterministic", "mc": "monte_carlo", "oracle": "oracle"}
SHORT = {v: k for k, v in ALG_NAMES.items()}


def join_coeffs(c):
    return ";".join(map(str, c)) if c else "0"


def split_coeffs(s):
    return [] if s == "0" else [int(t) for t in s.split(";")]


def run_one(inst, alg, seed):
    """Time one solve.  Field and module construction (including the cached
    ``z^(q^i)`` powers) are part of the measured time."""
    t0 = time.perf_counter()
    L = ExtField(inst.q, inst.f, check=False)
    dm = DrinfeldModule(L, inst.gamma, inst.g, inst.delta)
    res = solve(dm, ALG_NAMES[alg], seed=seed)
    seconds = time.perf_counter() - t0
    return {
        "q": inst.q, "n": inst.n, "m": dm.m, "alg": alg, "seconds": seconds,
        "retries": res.retries, "nu": "" if res.nu is None else res.nu,
        "A": join_coeffs(res.A), "B": join_coeffs(res.B),
    }


def grid(qs, ns, ms, reps, seed):
    """Instances for every valid cell; cells with ``m`` not dividing ``n`` are skipped with a warning."""
    from .instance import Instance

    cells = []
    for q in qs:
        for n in ns:
            for m in ms:
                if n % m:
                    print(f"warning: skipping q={q} n={n} m={m} (m does not divide n)", file=sys.stderr)
                    continue
                for rep in range(reps):
                    rng = random.Random(f"{seed}/bench/{q}/{n}/{m}/{rep}")
                    dm = DrinfeldModule.random(q, n, m, rng)
                    cells.append((rep, Instance.from_module(dm)))
    return cells


def run_bench(qs, ns, ms, algs, reps=1, seed=0, out=None, workers=None):
    if workers is None:
        workers = int(os.environ.get("DRINFELD_THREADS", "1") or 1)
    jobs = [(inst, alg, seed + rep) for rep, inst in grid(qs, ns, ms, reps, seed) for alg in algs]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda job: run_one(*job), jobs))
    else:
        rows = [run_one(*job) for job in jobs]
    # rows stay in job order, so the file is stable for a fixed grid
    if out:
        with open(out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=HEADER)
            writer.writeheader()
            writer.writerows(rows)
    return rows


def read_rows(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        for key in ("q", "n", "m", "retries"):
            r[key] = int(r[key])
        r["seconds"] = float(r["seconds"])
        r["nu"] = int(r["nu"]) if r["nu"] else None
        r["A"], r["B"] = split_coeffs(r["A"]), split_coeffs(r["B"])
    return rows


def mean_times(rows):
    """``{(alg, q, m): {n: mean seconds}}``."""
    acc = {}
    for r in rows:
        acc.setdefault((r["alg"], r["q"], r["m"]), {}).setdefault(r["n"], []).append(float(r["seconds"]))
    return {key: {n: mean(v) for n, v in sorted(per.items())} for key, per in acc.items()}


def loglog_slope(times):
    """Least-squares slope of log(seconds) against log(n); needs two distinct n."""
    ns = sorted(times)
    if len(ns) < 2:
        return None
    return linear_regression([math.log(n) for n in ns], [math.log(times[n]) for n in ns]).slope


def summary(rows):
    lines = []
    for (alg, q, m), times in sorted(mean_times(rows).items()):
        cells = " ".join(f"n={n}:{t:.4f}s" for n, t in times.items())
        slope = loglog_slope(times)
        tail = f"slope={slope:.3f}" if slope is not None else "slope=n/a"
        lines.append(f"{alg:8s} q={q} m={m} {tail}  {cells}")
    return "\n".join(lines)
