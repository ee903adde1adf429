"""Command-line entry point.

Exit codes: 0 success, 2 bad input (parse error, singular matrix, bad
table), 3 search space exhausted without a kernel, 4 time budget expired
without a kernel, 5 verification mismatch or not a polarization kernel.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .codes import SingularKernelError, rate_of_polarization, verify_kernel
from .fixtures import load_fixtures
from .gf2 import is_column_triangularizable
from .kernelio import FormatError, format_pdp, parse_pdp, read_kernel, write_kernel
from .pdp import DistanceTable, PdpQuery, TableFormatError, enumerate_pdps, permute_pdp
from .search import SearchConfig, kernel_search

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5

RATE_TOLERANCE = 5e-6


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        kernel = read_kernel(args.kernel)
        expected = parse_pdp(args.expected) if args.expected else None
    except (OSError, FormatError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        pdp = verify_kernel(kernel)
    except SingularKernelError as exc:
        _err(f"{args.kernel}: {exc}")
        return EXIT_INPUT
    triangular = is_column_triangularizable(kernel.matrix())
    print(f"size: {kernel.size}")
    print(f"pdp: {format_pdp(pdp)}")
    print(f"rate: {rate_of_polarization(pdp):.5f}")
    print("invertible: yes")
    print(f"column-triangularizable: {'yes' if triangular else 'no'}")
    if triangular:
        _err("not a polarization kernel (column-triangularizable)")
        return EXIT_MISMATCH
    if expected is not None and expected != pdp:
        _err(f"profile mismatch: expected {format_pdp(expected)}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    try:
        pdp = parse_pdp(args.pdp)
    except FormatError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if len(pdp) != args.size:
        _err(f"--pdp has {len(pdp)} entries but --size is {args.size}")
        return EXIT_INPUT
    try:
        cfg = SearchConfig(
            pdp,
            max_kernels=args.max_kernels or None,
            time_budget=args.time_budget,
            enable_syndrome_prune=not args.no_syndrome_prune,
            enable_distribution_prune=not args.no_wd_prune,
            global_distributions=args.global_wd,
            threshold=args.threshold,
            threads=args.threads,
        )
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    out = kernel_search(cfg)
    outdir = Path(args.out)
    if out.kernels:
        outdir.mkdir(parents=True, exist_ok=True)
    for i, k in enumerate(out.kernels):
        path = outdir / f"kernel_{i}.txt"
        write_kernel(k, path)
        print(f"wrote {path}")
    st = out.stats
    print(f"kernels: {len(out.kernels)}")
    print(f"exhausted: {'yes' if out.exhausted else 'no'}")
    print(f"nodes: {st.nodes}")
    print(f"candidates: {st.candidates}")
    print(f"cosets evaluated: {st.cosets_evaluated}")
    print(f"syndrome prunes: {st.syndrome_prunes}")
    print(f"distribution prunes: {st.distribution_prunes}")
    print(f"elapsed: {st.elapsed:.3f}s")
    if out.kernels:
        print("status: found")
        return EXIT_OK
    if out.exhausted:
        print("status: infeasible")
        return EXIT_INFEASIBLE
    print("status: budget-expired")
    return EXIT_BUDGET


def _load_table(spec: str | None) -> DistanceTable:
    if spec is None:
        return DistanceTable()
    if spec == "griesmer":
        return DistanceTable.griesmer(64)
    return DistanceTable.from_csv(spec)


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        table = _load_table(args.table)
        query = PdpQuery(
            args.size,
            args.e_min,
            table,
            enforce_lemma4=not args.no_lemma4,
            enforce_lemma5=not args.no_lemma5,
        )
    except (OSError, TableFormatError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    emitted = 0
    for d in enumerate_pdps(query):
        perms = permute_pdp(d) if args.permute else iter((d,))
        for j, p in enumerate(perms):
            if args.permute and args.max_permutations is not None and j >= args.max_permutations:
                break
            print(f"{format_pdp(p)}  E={rate_of_polarization(p):.5f}")
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return EXIT_OK


def cmd_rate(args: argparse.Namespace) -> int:
    try:
        pdp = parse_pdp(args.pdp)
        rate = rate_of_polarization(pdp)
    except (FormatError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    print(f"{rate:.5f}")
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for f in load_fixtures():
        if args.list:
            print(f"{f.name}  set {f.table}  l={f.kernel.size}")
            continue
        pdp = verify_kernel(f.kernel)
        rate = rate_of_polarization(pdp)
        pdp_ok = pdp == f.pdp
        rate_ok = abs(rate - f.rate) <= RATE_TOLERANCE
        polar_ok = f.kernel.is_polarizing()
        ok = pdp_ok and rate_ok and polar_ok
        if not ok:
            status = EXIT_MISMATCH
        print(
            f"{'PASS' if ok else 'FAIL'}  {f.name:<8} set {f.table:<2} l={f.kernel.size:<2} "
            f"pdp {'ok' if pdp_ok else 'MISMATCH'}  "
            f"E={rate:.5f} (expected {f.rate_text}, {'ok' if rate_ok else 'MISMATCH'})"
            f"{'' if polar_ok else '  NOT POLARIZING'}"
        )
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polarsearch", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="compute the partial-distance profile of a kernel file")
    v.add_argument("kernel", help="kernel file: l lines of l characters 0/1")
    v.add_argument("--expected", help="expected profile; exit 5 on mismatch")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search for a kernel with a given profile")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--pdp", required=True, help="comma-separated partial distances")
    s.add_argument("--max-kernels", type=int, default=1, help="0 means no limit")
    s.add_argument("--time-budget", type=float, default=None, help="seconds")
    s.add_argument("--no-syndrome-prune", action="store_true")
    s.add_argument("--no-wd-prune", action="store_true", help="disable weight-distribution pruning")
    s.add_argument("--global-wd", action="store_true",
                   help="keep weight-distribution sets for the whole run")
    s.add_argument("--threshold", type=int, default=None,
                   help="lowest phase evaluated directly (default ceil(l/2))")
    s.add_argument("--threads", type=int, default=1, help="worker processes")
    s.add_argument("--out", default="kernels", help="output directory")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("enumerate", help="list candidate nondecreasing profiles")
    e.add_argument("--size", type=int, required=True)
    e.add_argument("--e-min", type=float, default=0.0)
    e.add_argument("--table", default=None,
                   help="n,k,d CSV of distance bounds, or 'griesmer'; default Singleton")
    e.add_argument("--no-lemma4", action="store_true")
    e.add_argument("--no-lemma5", action="store_true")
    e.add_argument("--permute", action="store_true", help="also emit distinct permutations")
    e.add_argument("--max-permutations", type=int, default=None)
    e.add_argument("--limit", type=int, default=None, help="stop after this many profiles")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("rate", help="rate of polarization of a profile")
    r.add_argument("pdp")
    r.set_defaults(func=cmd_rate)

    f = sub.add_parser("fixtures", help="check the embedded reference kernels")
    f.add_argument("--list", action="store_true", help="only list fixture names")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
