"""Command-line front end.

    batchfactor roots --coeffs "1,0,1" --limit 12
    batchfactor factor --coeffs "-2,0,0,1" --limit 1000
    batchfactor galois-data --coeffs "1,1,1,1,1"
    batchfactor verify --coeffs "-2,0,0,1" --limit 500
    batchfactor bench --coeffs "-2,0,1" --limits 100000,200000

Coefficients are ascending and comma separated. Output is JSON lines, one per
prime in ascending order.
"""

import argparse
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass

from .batchroots import DEFAULT_BLOCK, batch_roots
from .bigpoly import parse_poly
from .galoisdata import NotGaloisError, compute_global_data
from .galoisfactor import galois_factor_batch
from .generalfactor import factor_entry
from .modpoly import ModPoly
from .oracle import reference_factor
from .sieve import primes_below

MIN_BLOCK = 1 << 10


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    coeffs: list
    limit: int = 0
    block_size: int = DEFAULT_BLOCK
    out: str = "-"
    galois: bool = False
    workers: int = 1
    limits: tuple = ()
    mode: str = "roots"


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def build_parser():
    parser = argparse.ArgumentParser(prog="batchfactor", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, limit=True):
        p.add_argument("--coeffs", required=True, help='ascending coefficients, e.g. "1,0,1"')
        if limit:
            p.add_argument("--limit", type=int, required=True, help="handle primes p < LIMIT")
        p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", default="-", help="output file (default stdout)")

    common(sub.add_parser("roots", help="roots of h modulo every prime"))
    fac = sub.add_parser("factor", help="factor f modulo every prime")
    common(fac)
    fac.add_argument("--galois", action="store_true", help="f is Galois; use the direct pipeline")
    common(sub.add_parser("galois-data", help="global data of a Galois f"), limit=False)
    ver = sub.add_parser("verify", help="check factorisations against the oracle")
    common(ver)
    ver.add_argument("--galois", action="store_true")
    bench = sub.add_parser("bench", help="timing table over several limits")
    common(bench, limit=False)
    bench.add_argument("--limits", required=True, help="comma separated limits")
    bench.add_argument("--mode", choices=["roots", "factor"], default="roots")
    return parser


def _attach_values(argv):
    # "--coeffs -2,0,1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for arg in it:
        if arg in ("--coeffs", "--limits"):
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def parse_config(argv):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_attach_values(list(argv)))
    try:
        coeffs = parse_poly(args.coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not coeffs:
        raise UsageError("the zero polynomial is not accepted")
    cfg = RunConfig(
        command=args.command,
        coeffs=coeffs,
        limit=getattr(args, "limit", 0),
        block_size=args.block_size,
        out=args.out,
        galois=getattr(args, "galois", False),
        workers=args.workers,
        mode=getattr(args, "mode", "roots"),
    )
    if cfg.block_size < MIN_BLOCK:
        raise UsageError(f"--block-size must be at least {MIN_BLOCK}")
    if cfg.workers < 1:
        raise UsageError("--workers must be positive")
    if args.command in ("roots", "factor", "verify") and cfg.limit < 2:
        raise UsageError("--limit must be at least 2")
    if args.command == "bench":
        try:
            cfg.limits = tuple(int(t) for t in args.limits.split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse --limits {args.limits!r}") from exc
        if any(n < 2 for n in cfg.limits):
            raise UsageError("every limit must be at least 2")
    if args.command in ("factor", "verify", "galois-data") and coeffs[-1] != 1:
        raise UsageError("f must be monic")
    if args.command in ("factor", "verify") and len(coeffs) < 2:
        raise UsageError("f must have degree at least 1")
    return cfg


@contextmanager
def _output(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _factor_stream(cfg, N):
    if cfg.galois:
        return galois_factor_batch(cfg.coeffs, N, cfg.block_size, cfg.workers)
    return factor_entry(cfg.coeffs, N, cfg.block_size, cfg.workers)


def _format_factorization(fac):
    return "[" + ", ".join(f"({ModPoly(fac.p, f.coeffs)}, {m})" for f, m in fac.factors) + "]"


def run_command(argv=None):
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _dispatch(cfg)
    except (ValueError, NotGaloisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(cfg):
    if cfg.command == "roots":
        table = batch_roots(cfg.coeffs, cfg.limit, cfg.block_size, cfg.workers)
        with _output(cfg.out) as fh:
            for line in table.json_lines():
                fh.write(_dumps(line) + "\n")
        return 0
    if cfg.command == "factor":
        with _output(cfg.out) as fh:
            for rec in _factor_stream(cfg, cfg.limit):
                fh.write(_dumps(rec.to_json()) + "\n")
        return 0
    if cfg.command == "galois-data":
        data = compute_global_data(cfg.coeffs)
        with _output(cfg.out) as fh:
            fh.write(_dumps(data.to_json()) + "\n")
        return 0
    if cfg.command == "verify":
        count = 0
        for rec in _factor_stream(cfg, cfg.limit):
            ref = reference_factor(ModPoly.from_ints(cfg.coeffs, rec.p))
            if rec.as_pairs() != ref.as_pairs():
                print(f"mismatch at p={rec.p}", file=sys.stderr)
                print(f"  pipeline: {_format_factorization(rec)}", file=sys.stderr)
                print(f"  oracle:   {_format_factorization(ref)}", file=sys.stderr)
                return 1
            count += 1
        with _output(cfg.out) as fh:
            fh.write(f"verified {count} primes below {cfg.limit}\n")
        return 0
    if cfg.command == "bench":
        with _output(cfg.out) as fh:
            fh.write(f"{'limit':>12} {'seconds':>10} {'us/prime':>10}\n")
            for N in cfg.limits:
                start = time.perf_counter()
                if cfg.mode == "roots":
                    batch_roots(cfg.coeffs, N, cfg.block_size, cfg.workers)
                else:
                    for _ in _factor_stream(cfg, N):
                        pass
                elapsed = time.perf_counter() - start
                per = elapsed / max(1, len(primes_below(N))) * 1e6
                fh.write(f"{N:>12} {elapsed:>10.3f} {per:>10.2f}\n")
        return 0
    raise UsageError(f"unknown command {cfg.command}")


def main():
    sys.exit(run_command())
