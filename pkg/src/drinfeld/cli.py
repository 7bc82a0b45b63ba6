"""``drinfeld gen|charpoly|verify|bench``."""

from __future__ import annotations

import argparse
import csv
import random
import sys

from . import bench
from .charpoly import RetriesExhausted, rng_stream, solve, verify_charpoly
from .instance import Instance, InstanceError, format_instance, read_instance
from .module import DrinfeldModule

VERIFY_TRIALS = 20


def coeff_line(tag, c):
    return f"{tag} " + (" ".join(map(str, c)) if c else "0")


def parse_int_list(text):
    return [int(t) for t in text.replace(",", " ").replace(";", " ").split()]


def cmd_gen(args):
    if args.q is None or args.n is None:
        raise SystemExit("gen needs --q and --n")
    rng = random.Random(f"{args.seed}/gen")
    dm = DrinfeldModule.random(args.q, args.n, args.m, rng)
    text = format_instance(Instance.from_module(dm))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_charpoly(args):
    inst = read_instance(args.instance)
    alg = bench.ALG_NAMES[args.alg]
    try:
        res = solve(inst.to_module(), alg, seed=args.seed)
    except RetriesExhausted as exc:
        print(f"error: {args.alg}: {exc}", file=sys.stderr)
        return 3
    except ArithmeticError as exc:
        print(f"error: {args.alg}: {exc}", file=sys.stderr)
        return 4
    print(coeff_line("A", res.A))
    print(coeff_line("B", res.B))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=bench.HEADER)
            writer.writeheader()
            dm = inst.to_module()
            writer.writerow({
                "q": inst.q, "n": inst.n, "m": dm.m, "alg": args.alg, "seconds": "",
                "retries": res.retries, "nu": "" if res.nu is None else res.nu,
                "A": bench.join_coeffs(res.A), "B": bench.join_coeffs(res.B),
            })
    return 0


def cmd_verify(args):
    inst = read_instance(args.instance)
    ok = verify_charpoly(inst.to_module(), parse_int_list(args.A), parse_int_list(args.B),
                         VERIFY_TRIALS, rng_stream(args.seed, "verify"))
    print("pass" if ok else "fail")
    return 0 if ok else 1


def cmd_bench(args):
    qs = parse_int_list(args.qs) if args.qs else [args.q or 499]
    ns = parse_int_list(args.ns) if args.ns else [args.n or 16]
    ms = parse_int_list(args.ms) if args.ms else [args.m]
    algs = args.algs.split(",") if args.algs else [args.alg]
    for a in algs:
        if a not in bench.ALG_NAMES:
            raise SystemExit(f"unknown algorithm {a!r}")
    rows = bench.run_bench(qs, ns, ms, algs, reps=args.reps, seed=args.seed, out=args.out)
    print(bench.summary(rows))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="drinfeld",
                                     description="Frobenius trace and norm of rank-two Drinfeld modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--alg", choices=sorted(bench.ALG_NAMES), default="mc")
        p.add_argument("--reps", type=int, default=1)
        p.add_argument("--out")

    p = sub.add_parser("gen", help="write a random instance")
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("charpoly", help="compute A and B for an instance file")
    p.add_argument("instance")
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="check a candidate (A, B) at random points")
    p.add_argument("instance")
    p.add_argument("--A", required=True, help="little-endian coefficients, e.g. '2 4 2'")
    p.add_argument("--B", required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time solvers over a grid and write CSV")
    common(p)
    p.add_argument("--qs", help="comma-separated q values (default --q)")
    p.add_argument("--ns", help="comma-separated n values (default --n)")
    p.add_argument("--ms", help="comma-separated m values (default --m)")
    p.add_argument("--algs", help="comma-separated algorithms (default --alg)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
